#include "tropreal/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace tropreal {

namespace {

std::string vector_str(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

long long multiplicity(const LatticeVector& v) {
  long long g = 0;
  for (long long c : v) g = std::gcd(g, c);
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  long long g = multiplicity(v);
  if (g == 0) throw TropError(ErrorKind::ZeroVector, "primitive of the zero vector");
  LatticeVector u = v;
  for (long long& c : u) c /= g;
  return u;
}

TropicalCurve TropicalCurve::from_vectors(std::vector<LatticeVector> vs, int ambient) {
  if (vs.empty()) throw TropError(ErrorKind::ZeroVector, "empty vector list");
  for (const auto& v : vs) {
    if (static_cast<int>(v.size()) != ambient)
      throw TropError(ErrorKind::BadDimensions, "vector length != ambient " + vector_str(v));
    long long mn = *std::min_element(v.begin(), v.end());
    long long mx = *std::max_element(v.begin(), v.end());
    if (mn == mx)
      throw TropError(mn == 0 ? ErrorKind::ZeroVector : ErrorKind::NotNormalized,
                      "vector on the all-ones line " + vector_str(v));
    if (mn != 0) throw TropError(ErrorKind::NotNormalized, "minimum coordinate not 0 " + vector_str(v));
  }
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (vs[i] == vs[i + 1] || primitive(vs[i]) == primitive(vs[i + 1]))
      throw TropError(ErrorKind::ParallelRays,
                      vector_str(vs[i]) + " and " + vector_str(vs[i + 1]) + " share a ray");
  }
  LatticeVector sum(ambient, 0);
  for (const auto& v : vs)
    for (int i = 0; i < ambient; ++i) sum[i] += v[i];
  long long d = sum[0];
  for (long long c : sum)
    if (c != d) throw TropError(ErrorKind::Unbalanced, "vector sum " + vector_str(sum) + " is not d*(1,...,1)");
  if (d < 1) throw TropError(ErrorKind::Unbalanced, "degree must be positive");
  TropicalCurve c;
  c.vectors_ = std::move(vs);
  c.ambient_ = ambient;
  c.degree_ = d;
  return c;
}

long long TropicalCurve::ray_multiplicity(const LatticeVector& u) const {
  for (const auto& v : vectors_)
    if (primitive(v) == primitive(u)) return multiplicity(v);
  return 0;
}

PlaneTropicalCurve::PlaneTropicalCurve(TropicalCurve curve, std::array<int, 3> source_triple)
    : curve_(std::move(curve)), triple_(source_triple) {
  if (curve_.ambient() != 3)
    throw TropError(ErrorKind::BadDimensions, "plane curve must have ambient 3");
}

void validate_in_fan(const TropicalCurve& c, const Matroid& m) {
  if (c.ambient() != m.ground_size())
    throw TropError(ErrorKind::BadDimensions, "curve ambient != matroid ground size");
  for (const auto& v : c.vectors())
    if (!contains_ray(m, v))
      throw TropError(ErrorKind::RayOutsideFan, vector_str(v) + " is not in the fan");
}

PlaneTropicalCurve project(const TropicalCurve& c, const std::array<int, 3>& a) {
  for (int i : a)
    if (i < 0 || i >= c.ambient())
      throw TropError(ErrorKind::BadDimensions, "projection index out of range");
  if (!(a[0] < a[1] && a[1] < a[2]))
    throw TropError(ErrorKind::BadDimensions, "projection triple must be ascending");
  std::map<LatticeVector, LatticeVector> by_direction;  // primitive -> sum
  for (const auto& v : c.vectors()) {
    LatticeVector w{v[a[0]], v[a[1]], v[a[2]]};
    if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
    LatticeVector dir = primitive(w);
    auto it = by_direction.find(dir);
    if (it == by_direction.end()) {
      by_direction.emplace(dir, w);
    } else {
      for (int i = 0; i < 3; ++i) it->second[i] += w[i];
    }
  }
  std::vector<LatticeVector> vs;
  for (auto& [dir, w] : by_direction) {
    if (*std::min_element(w.begin(), w.end()) != 0)
      throw TropError(ErrorKind::InvariantViolation,
                      "projected vector not normalized; is the triple a basis?");
    vs.push_back(w);
  }
  TropicalCurve out = TropicalCurve::from_vectors(std::move(vs), 3);
  if (out.degree() != c.degree())
    throw TropError(ErrorKind::InvariantViolation, "projection changed the degree");
  return PlaneTropicalCurve(std::move(out), a);
}

std::vector<std::pair<TropicalCurve, TropicalCurve>> decompositions(const TropicalCurve& c) {
  const auto& vs = c.vectors();
  std::size_t r = vs.size();
  std::vector<long long> mult(r);
  std::vector<LatticeVector> prim(r);
  for (std::size_t i = 0; i < r; ++i) {
    mult[i] = multiplicity(vs[i]);
    prim[i] = primitive(vs[i]);
  }
  std::vector<std::pair<TropicalCurve, TropicalCurve>> out;
  std::vector<long long> t(r, 0);
  // odometer over the product of {0..m_i}
  while (true) {
    std::size_t pos = 0;
    while (pos < r && t[pos] == mult[pos]) {
      t[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
    ++t[pos];
    bool all = true, none = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (t[i] != mult[i]) all = false;
      if (t[i] != 0) none = false;
    }
    if (all || none) continue;
    LatticeVector sum(c.ambient(), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (int k = 0; k < c.ambient(); ++k) sum[k] += t[i] * prim[i][k];
    bool balanced = true;
    for (int k = 1; k < c.ambient(); ++k)
      if (sum[k] != sum[0]) balanced = false;
    if (!balanced || sum[0] == 0) continue;
    std::vector<LatticeVector> d1, d2;
    for (std::size_t i = 0; i < r; ++i) {
      if (t[i] > 0) {
        LatticeVector v = prim[i];
        for (long long& x : v) x *= t[i];
        d1.push_back(std::move(v));
      }
      if (t[i] < mult[i]) {
        LatticeVector v = prim[i];
        for (long long& x : v) x *= (mult[i] - t[i]);
        d2.push_back(std::move(v));
      }
    }
    TropicalCurve c1 = TropicalCurve::from_vectors(std::move(d1), c.ambient());
    TropicalCurve c2 = TropicalCurve::from_vectors(std::move(d2), c.ambient());
    if (c2 < c1) std::swap(c1, c2);
    out.emplace_back(std::move(c1), std::move(c2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> symmetric_group(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TropicalCurve apply_permutation(const TropicalCurve& c, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != c.ambient())
    throw TropError(ErrorKind::BadDimensions, "permutation size != ambient");
  std::vector<LatticeVector> vs;
  for (const auto& v : c.vectors()) {
    LatticeVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[perm[i]] = v[i];
    vs.push_back(std::move(w));
  }
  return TropicalCurve::from_vectors(std::move(vs), c.ambient());
}

TropicalCurve canonical_form(const TropicalCurve& c, const std::vector<std::vector<int>>& group) {
  if (group.empty()) throw TropError(ErrorKind::BadDimensions, "empty permutation group");
  TropicalCurve best = apply_permutation(c, group[0]);
  for (std::size_t i = 1; i < group.size(); ++i) {
    TropicalCurve img = apply_permutation(c, group[i]);
    if (img < best) best = img;
  }
  return best;
}

TropicalCurve rank1_flats_curve(const Matroid& m) {
  std::vector<LatticeVector> vs;
  for (const Flat& f : m.flats_of_rank(1)) vs.push_back(indicator(f, m.ground_size()));
  return TropicalCurve::from_vectors(std::move(vs), m.ground_size());
}

}  // namespace tropreal
