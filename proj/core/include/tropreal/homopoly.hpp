#ifndef TROPREAL_HOMOPOLY_HPP
#define TROPREAL_HOMOPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tropreal/matrix.hpp"

namespace tropreal {

/// Exponent triples of a fixed total degree d, in a fixed order: (d,0,0),
/// (d-1,1,0), (d-1,0,1), ..., (0,0,d).  Shared by coefficient vectors and
/// transfer matrices.
class MonomialBasis {
 public:
  explicit MonomialBasis(long long degree);

  long long degree() const { return degree_; }
  std::size_t size() const { return triples_.size(); }
  const std::array<long long, 3>& exponents(std::size_t idx) const { return triples_[idx]; }
  std::size_t index(const std::array<long long, 3>& t) const;

 private:
  long long degree_;
  std::vector<std::array<long long, 3>> triples_;
};

/// Homogeneous polynomial of degree d in three torus variables forming a
/// basis of M(L); coefficients indexed by MonomialBasis order.
class HomoPoly {
 public:
  HomoPoly(long long degree, std::array<int, 3> variables, std::vector<FieldElement> coeffs);

  long long degree() const { return degree_; }
  const std::array<int, 3>& variables() const { return variables_; }  // ascending
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  long characteristic() const { return coeffs_.empty() ? 0 : coeffs_[0].characteristic(); }

  /// Text form: terms like `2*x0^2*x1` joined by +/-, rational coefficients
  /// printed as p/q.  Round-trips through parse_homopoly.
  std::string text() const;

 private:
  long long degree_;
  std::array<int, 3> variables_;
  std::vector<FieldElement> coeffs_;
};

/// One parsed term: rational coefficient and variable -> exponent map.
struct ParsedTerm {
  mpq_class coefficient;
  std::map<int, long long> exponents;
};

/// Parses the polynomial text form; accepts integer and p/q coefficients,
/// optional `*` between factors, `^` powers, and variables x0..x<n>.
std::vector<ParsedTerm> parse_polynomial(const std::string& text);

/// Builds a homogeneous polynomial from text over the given field; the
/// variable triple must be supplied (parsed variables must be a subset).
HomoPoly homopoly_from_text(const std::string& text, std::array<int, 3> variables,
                            long characteristic);

}  // namespace tropreal

#endif
