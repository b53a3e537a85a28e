#include "tropreal/homopoly.hpp"

#include <algorithm>
#include <cctype>

namespace tropreal {

MonomialBasis::MonomialBasis(long long degree) : degree_(degree) {
  if (degree < 1) throw TropError(ErrorKind::BadDimensions, "degree must be positive");
  for (long long i = degree; i >= 0; --i)
    for (long long j = degree - i; j >= 0; --j) triples_.push_back({i, j, degree - i - j});
}

std::size_t MonomialBasis::index(const std::array<long long, 3>& t) const {
  for (std::size_t k = 0; k < triples_.size(); ++k)
    if (triples_[k] == t) return k;
  throw TropError(ErrorKind::BadDimensions, "exponent triple not of this degree");
}

HomoPoly::HomoPoly(long long degree, std::array<int, 3> variables,
                   std::vector<FieldElement> coeffs)
    : degree_(degree), variables_(variables), coeffs_(std::move(coeffs)) {
  if (!(variables_[0] < variables_[1] && variables_[1] < variables_[2]))
    throw TropError(ErrorKind::BadDimensions, "variable triple must be ascending");
  MonomialBasis basis(degree);
  if (coeffs_.size() != basis.size())
    throw TropError(ErrorKind::BadDimensions, "coefficient count != monomial count");
  bool nonzero = false;
  for (const auto& c : coeffs_) {
    if (c.characteristic() != coeffs_[0].characteristic())
      throw TropError(ErrorKind::FieldMismatch, "mixed coefficient fields");
    if (!c.is_zero()) nonzero = true;
  }
  if (!nonzero) throw TropError(ErrorKind::ZeroVector, "zero polynomial");
}

std::string HomoPoly::text() const {
  MonomialBasis basis(degree_);
  std::string out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    std::string mono;
    const auto& e = basis.exponents(k);
    for (int pos = 0; pos < 3; ++pos) {
      if (e[pos] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(variables_[pos]);
      if (e[pos] > 1) mono += "^" + std::to_string(e[pos]);
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else {
      term = cs + "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
};

long parse_uint(Cursor& c) {
  c.skip_ws();
  if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    throw TropError(ErrorKind::ParseError, "expected a number at position " + std::to_string(c.pos));
  long v = 0;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    v = v * 10 + (c.s[c.pos] - '0');
    ++c.pos;
  }
  return v;
}

}  // namespace

std::vector<ParsedTerm> parse_polynomial(const std::string& text) {
  std::vector<ParsedTerm> terms;
  Cursor c{text};
  if (c.eof()) throw TropError(ErrorKind::ParseError, "empty polynomial");
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.take() == '-') sign = -1;
    } else if (!first) {
      throw TropError(ErrorKind::ParseError, "expected + or - between terms");
    }
    first = false;
    ParsedTerm term;
    term.coefficient = sign;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      if (c.eof()) break;
      char ch = c.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        long num = parse_uint(c);
        if (!c.eof() && c.peek() == '/') {
          c.take();
          long den = parse_uint(c);
          if (den == 0) throw TropError(ErrorKind::ParseError, "zero denominator");
          term.coefficient *= mpq_class(num, den);
        } else {
          term.coefficient *= num;
        }
      } else if (ch == 'x') {
        c.take();
        long var = parse_uint(c);
        long long exp = 1;
        if (!c.eof() && c.peek() == '^') {
          c.take();
          exp = parse_uint(c);
        }
        term.exponents[static_cast<int>(var)] += exp;
      } else {
        throw TropError(ErrorKind::ParseError,
                        std::string("unexpected character '") + ch + "'");
      }
      saw_factor = true;
      expect_factor = !c.eof() && c.peek() == '*';
      if (expect_factor) c.take();
    }
    if (!saw_factor) throw TropError(ErrorKind::ParseError, "empty term");
    term.coefficient.canonicalize();
    terms.push_back(std::move(term));
  }
  return terms;
}

HomoPoly homopoly_from_text(const std::string& text, std::array<int, 3> variables,
                            long characteristic) {
  auto terms = parse_polynomial(text);
  long long degree = -1;
  for (const auto& t : terms) {
    long long d = 0;
    for (const auto& [var, e] : t.exponents) {
      (void)var;
      d += e;
    }
    if (degree == -1) degree = d;
    if (d != degree) throw TropError(ErrorKind::ParseError, "polynomial is not homogeneous");
  }
  if (degree < 1) throw TropError(ErrorKind::ParseError, "constant polynomial");
  MonomialBasis basis(degree);
  std::vector<FieldElement> coeffs(basis.size(), FieldElement::zero(characteristic));
  for (const auto& t : terms) {
    std::array<long long, 3> e{0, 0, 0};
    for (const auto& [var, exp] : t.exponents) {
      auto it = std::find(variables.begin(), variables.end(), var);
      if (it == variables.end())
        throw TropError(ErrorKind::ParseError,
                        "variable x" + std::to_string(var) + " not in the chosen basis");
      e[it - variables.begin()] += exp;
    }
    std::size_t idx = basis.index(e);
    coeffs[idx] += FieldElement::from_rational(t.coefficient, characteristic);
  }
  return HomoPoly(degree, variables, std::move(coeffs));
}

}  // namespace tropreal
