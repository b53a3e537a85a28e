#include "tropreal/plane.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tropreal {

PlaneIdeal PlaneIdeal::from_forms(const std::vector<std::vector<long>>& coeffs,
                                  long characteristic) {
  if (coeffs.empty()) throw TropError(ErrorKind::BadDimensions, "no linear forms");
  std::size_t n_plus_1 = coeffs[0].size();
  if (n_plus_1 < 4)
    throw TropError(ErrorKind::BadDimensions, "need at least 4 variables for a plane");
  if (coeffs.size() != n_plus_1 - 3)
    throw TropError(ErrorKind::BadDimensions, "expected (n-2) forms in (n+1) variables");
  ExactMatrix forms = ExactMatrix::from_ints(coeffs, characteristic);
  if (mat_rank(forms) != forms.rows())
    throw TropError(ErrorKind::RankDeficient, "linear forms are dependent over this field");
  PlaneIdeal plane(std::move(forms));
  // Loop-freeness: a zero column of Q means the variable vanishes on E.
  Matroid m(plane);
  for (int j = 0; j < m.ground_size(); ++j) {
    bool all_zero = true;
    for (std::size_t i = 0; i < 3; ++i)
      if (!m.q_matrix().at(i, j).is_zero()) all_zero = false;
    if (all_zero)
      throw TropError(ErrorKind::LoopyMatroid, "variable x" + std::to_string(j) + " vanishes on E");
  }
  return plane;
}

Matroid::Matroid(const PlaneIdeal& plane)
    : q_(3, plane.forms().cols(), plane.characteristic()) {
  auto basis = mat_kernel(plane.forms());
  if (basis.size() != 3)
    throw TropError(ErrorKind::InvariantViolation, "null space of forms is not 3-dimensional");
  q_ = ExactMatrix::from_rows(basis, plane.characteristic());
}

ExactMatrix Matroid::columns(const std::vector<int>& subset) const {
  ExactMatrix sub(3, subset.size(), q_.characteristic());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    int j = subset[k];
    if (j < 0 || j >= ground_size())
      throw TropError(ErrorKind::BadDimensions, "ground element out of range");
    for (std::size_t i = 0; i < 3; ++i) sub.set(i, k, q_.at(i, j));
  }
  return sub;
}

int Matroid::rank(const std::vector<int>& subset) const {
  return static_cast<int>(mat_rank(columns(subset)));
}

std::vector<int> Matroid::closure(const std::vector<int>& subset) const {
  int r = rank(subset);
  std::vector<int> cl;
  if (subset.empty()) return cl;  // loop-free: closure of the empty set is empty
  for (int x = 0; x < ground_size(); ++x) {
    std::vector<int> with = subset;
    with.push_back(x);
    if (rank(with) == r) cl.push_back(x);
  }
  std::sort(cl.begin(), cl.end());
  cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  return cl;
}

bool Matroid::is_basis(const std::vector<int>& subset) const {
  return subset.size() == 3 && rank(subset) == 3;
}

std::vector<std::vector<int>> Matroid::bases() const {
  std::vector<std::vector<int>> out;
  int n = ground_size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<int> s{a, b, c};
        if (rank(s) == 3) out.push_back(std::move(s));
      }
  return out;
}

std::vector<Flat> Matroid::flats_of_rank(int r) const {
  if (r != 1 && r != 2)
    throw TropError(ErrorKind::BadDimensions, "only rank-1 and rank-2 flats are enumerated");
  std::set<std::vector<int>> seen;
  int n = ground_size();
  if (r == 1) {
    for (int x = 0; x < n; ++x) seen.insert(closure({x}));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> pair{a, b};
        if (rank(pair) == 2) seen.insert(closure(pair));
      }
  }
  std::vector<Flat> out;
  for (const auto& members : seen) out.push_back(Flat{members, r});
  return out;
}

std::vector<long long> indicator(const Flat& flat, int n_plus_1) {
  std::vector<long long> v(n_plus_1, 0);
  for (int x : flat.members) v[x] = 1;
  return v;
}

ExactMatrix Matroid::eliminate(const std::vector<int>& from_basis,
                               const std::vector<int>& to_basis) const {
  if (!is_basis(from_basis) || !is_basis(to_basis))
    throw TropError(ErrorKind::NotABasis, "eliminate requires two bases of M(L)");
  // Two linear forms agree modulo L iff they agree on the row space of Q,
  // so x_b = sum_a c_a x_a mod L iff Q[:,b] = sum_a c_a Q[:,a].
  ExactMatrix to_cols = columns(to_basis);
  ExactMatrix out(3, 3, q_.characteristic());
  for (std::size_t bi = 0; bi < 3; ++bi) {
    std::vector<FieldElement> rhs(3, FieldElement::zero(q_.characteristic()));
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = q_.at(i, from_basis[bi]);
    auto sol = mat_solve(to_cols, rhs);
    if (!sol)
      throw TropError(ErrorKind::InvariantViolation, "elimination system inconsistent");
    for (std::size_t ai = 0; ai < 3; ++ai) out.set(bi, ai, (*sol)[ai]);
  }
  return out;
}

namespace {

// Tests v = alpha * v_{g1} + beta * v_{g2} for the nested pair (g1, g2),
// reading alpha and beta off the coordinate blocks.
std::optional<std::pair<long long, long long>> chain_solution(const std::vector<long long>& v,
                                                              const Flat& g1, const Flat& g2) {
  std::vector<bool> in1(v.size(), false), in2(v.size(), false);
  for (int x : g1.members) in1[x] = true;
  for (int x : g2.members) in2[x] = true;
  long long on1 = -1, on2 = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (in1[i]) {
      if (on1 == -1) on1 = v[i];
      else if (v[i] != on1) return std::nullopt;
    } else if (in2[i]) {
      if (on2 == -1) on2 = v[i];
      else if (v[i] != on2) return std::nullopt;
    } else if (v[i] != 0) {
      return std::nullopt;
    }
  }
  long long beta = on2 < 0 ? 0 : on2;
  long long alpha = on1 - beta;
  if (alpha < 0 || beta < 0) return std::nullopt;
  return std::make_pair(alpha, beta);
}

std::optional<long long> ray_multiple(const std::vector<long long>& v, const Flat& flat) {
  std::vector<bool> in(v.size(), false);
  for (int x : flat.members) in[x] = true;
  long long t = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (in[i]) {
      if (t == -1) t = v[i];
      else if (v[i] != t) return std::nullopt;
    } else if (v[i] != 0) {
      return std::nullopt;
    }
  }
  if (t <= 0) return std::nullopt;
  return t;
}

}  // namespace

std::optional<ConeMembership> contains_ray(const Matroid& m, const std::vector<long long>& v) {
  if (static_cast<int>(v.size()) != m.ground_size())
    throw TropError(ErrorKind::BadDimensions, "vector length != ground size");
  long long mn = v[0], mx = v[0];
  for (long long c : v) {
    mn = std::min(mn, c);
    mx = std::max(mx, c);
  }
  if (mn != 0 || mx == 0)
    throw TropError(ErrorKind::NotNormalized, "ray vector must be nonzero with minimum 0");

  auto rank1 = m.flats_of_rank(1);
  auto rank2 = m.flats_of_rank(2);
  // Minimal cone first: single flats (either rank), then chains in lex order.
  for (const Flat& g : rank1)
    if (auto t = ray_multiple(v, g)) return ConeMembership{g, std::nullopt, *t, 0};
  for (const Flat& g2 : rank2)
    if (auto t = ray_multiple(v, g2)) {
      for (const Flat& g1 : rank1) {
        if (std::includes(g2.members.begin(), g2.members.end(), g1.members.begin(),
                          g1.members.end()))
          return ConeMembership{g1, g2, 0, *t};
      }
    }
  for (const Flat& g1 : rank1)
    for (const Flat& g2 : rank2) {
      if (!std::includes(g2.members.begin(), g2.members.end(), g1.members.begin(),
                         g1.members.end()))
        continue;
      if (auto ab = chain_solution(v, g1, g2))
        return ConeMembership{g1, g2, ab->first, ab->second};
    }
  return std::nullopt;
}

}  // namespace tropreal
