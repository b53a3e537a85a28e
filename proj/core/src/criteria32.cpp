#include "tropreal/criteria32.hpp"

#include <algorithm>
#include <numeric>

namespace tropreal {

namespace {

void require_l32(const TropicalCurve& c) {
  if (c.ambient() != 4)
    throw TropError(ErrorKind::BadDimensions, "criterion is specific to L^3_2 (ambient 4)");
  for (const auto& v : c.vectors()) {
    int support = 0;
    for (long long x : v)
      if (x != 0) ++support;
    if (support > 2)
      throw TropError(ErrorKind::RayOutsideFan, "ray with more than two nonzero coordinates");
  }
}

std::vector<int> support_of(const LatticeVector& v) {
  std::vector<int> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

LatticeVector unit(int i) {
  LatticeVector v(4, 0);
  v[i] = 1;
  return v;
}

LatticeVector unit_pair(int i, int j) {
  LatticeVector v(4, 0);
  v[i] = 1;
  v[j] = 1;
  return v;
}

// m_3, m_0, n_3, n_0 of the D_1 frame, read off the projected polygons.
struct Margins {
  long long m0 = 0, m3 = 0, n0 = 0, n3 = 0;
};

Margins margins(const TropicalCurve& c) {
  const long long d = c.degree();
  NewtonPolygon p3 = newton_polygon(project(c, {0, 1, 2}));
  NewtonPolygon p0 = newton_polygon(project(c, {1, 2, 3}));
  Margins out;
  long long min_sum = 2 * d, max_x = 0;
  for (const auto& v : p3.vertices()) min_sum = std::min(min_sum, v.x + v.y);
  for (const auto& v : p0.vertices()) max_x = std::max(max_x, v.x);
  out.m3 = min_sum;
  out.m0 = d - max_x;
  for (long long j = 0; j <= out.m3; ++j)
    if (!p3.contains({out.m3 - j, j})) ++out.n3;
  for (long long j = 0; j <= out.m0; ++j)
    if (!p0.contains({d - out.m0, j})) ++out.n0;
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Fires: return "fires";
    case Verdict::DoesNotFire: return "no";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

TropicalCurve ClassicalLine::curve() const {
  std::vector<LatticeVector> vs;
  LatticeVector a(4, 0), b(4, 0);
  for (int i = 0; i < 4; ++i) {
    if (i == pair[0] || i == pair[1])
      a[i] = 1;
    else
      b[i] = 1;
  }
  vs.push_back(a);
  vs.push_back(b);
  return TropicalCurve::from_vectors(std::move(vs), 4);
}

std::array<ClassicalLine, 3> classical_lines() {
  return {ClassicalLine{{0, 1}}, ClassicalLine{{0, 2}}, ClassicalLine{{0, 3}}};
}

long long intersection_product(const TropicalCurve& c1, const TropicalCurve& c2) {
  require_l32(c1);
  require_l32(c2);
  long long prod = c1.degree() * c2.degree();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      for (const auto& v : c1.vectors()) {
        if (support_of(v) != std::vector<int>{i, j}) continue;
        for (const auto& w : c2.vectors()) {
          if (support_of(w) != std::vector<int>{i, j}) continue;
          prod -= std::min(v[i] * w[j], v[j] * w[i]);
        }
      }
    }
  return prod;
}

long long line_intersection_via_newton(const TropicalCurve& c, const ClassicalLine& line) {
  require_l32(c);
  // Relabel so the line's ray pair becomes {0,1}.
  std::vector<int> perm(4);
  int k = 2;
  for (int i = 0; i < 4; ++i) {
    if (i == line.pair[0])
      perm[i] = 0;
    else if (i == line.pair[1])
      perm[i] = 1;
    else
      perm[i] = k++;
  }
  TropicalCurve cp = apply_permutation(c, perm);
  Margins mg = margins(cp);
  return c.degree() - mg.m0 - mg.m3;
}

TropicalCurve plane_cycle_intersection(const std::array<long long, 4>& normal) {
  long long sum = normal[0] + normal[1] + normal[2] + normal[3];
  bool all_zero = normal[0] == 0 && normal[1] == 0 && normal[2] == 0 && normal[3] == 0;
  if (sum != 0 || all_zero)
    throw TropError(ErrorKind::InvalidNormal, "normal must be nonzero with zero coordinate sum");
  long long d = 0;
  for (long long a : normal)
    if (a > 0) d += a;
  std::vector<LatticeVector> vs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (normal[i] > 0 && normal[j] < 0) {
        LatticeVector v(4, 0);
        v[j] = normal[i];
        v[i] = -normal[j];
        vs.push_back(std::move(v));
      }
    }
  for (int i = 0; i < 4; ++i)
    if (normal[i] == 0) {
      LatticeVector v(4, 0);
      v[i] = d;
      vs.push_back(std::move(v));
    }
  return TropicalCurve::from_vectors(std::move(vs), 4);
}

CriterionResult obstruction_intprod(const TropicalCurve& c) {
  require_l32(c);
  CriterionResult res;
  for (const ClassicalLine& line : classical_lines()) {
    int i = line.pair[0], j = line.pair[1];
    int k = -1, l = -1;
    for (int x = 0; x < 4; ++x)
      if (x != i && x != j) (k < 0 ? k : l) = x;
    long long k1 = c.ray_multiplicity(unit_pair(i, j));
    long long k2 = c.ray_multiplicity(unit_pair(k, l));
    long long bound = std::min(k1, k2);
    long long prod = intersection_product(c, line.curve());
    if (prod < -bound) {
      res.verdict = Verdict::Fires;
      res.labeling = {i, j, k, l};
      res.numbers = {{"product", prod}, {"k", bound}, {"k1", k1}, {"k2", k2}};
      return res;
    }
  }
  return res;
}

CriterionResult obstruction_newton_margin(const TropicalCurve& c) {
  require_l32(c);
  CriterionResult res;
  const long long d = c.degree();
  for (const auto& perm : symmetric_group(4)) {
    TropicalCurve cp = apply_permutation(c, perm);
    Margins mg = margins(cp);
    if (mg.n0 > d - mg.m3 || mg.n3 > d - mg.m0) {
      res.verdict = Verdict::Fires;
      for (int i = 0; i < 4; ++i) res.labeling[i] = perm[i];
      res.numbers = {{"m0", mg.m0}, {"m3", mg.m3}, {"n0", mg.n0}, {"n3", mg.n3}};
      return res;
    }
  }
  return res;
}

CriterionResult obstruction_commonray(const TropicalCurve& c) {
  require_l32(c);
  CriterionResult res;
  for (int i = 0; i < 4; ++i)
    for (int l = 0; l < 4; ++l) {
      if (l == i) continue;
      std::vector<int> jk;
      for (int x = 0; x < 4; ++x)
        if (x != i && x != l) jk.push_back(x);
      bool contained = true;
      for (const auto& v : c.vectors()) {
        auto s = support_of(v);
        if (s.size() == 2 && !std::binary_search(s.begin(), s.end(), i)) contained = false;
      }
      if (!contained) continue;
      if (c.ray_multiplicity(unit(jk[0])) != 0 || c.ray_multiplicity(unit(jk[1])) != 0) continue;
      if (c.ray_multiplicity(unit(l)) != 1) continue;
      res.verdict = Verdict::Fires;
      res.labeling = {i, jk[0], jk[1], l};
      res.numbers = {{"m_l", 1}};
      return res;
    }
  return res;
}

CriterionResult obstruction_oppositefaces(const TropicalCurve& c) {
  require_l32(c);
  CriterionResult res;
  for (int l = 0; l < 4; ++l)
    for (int k = 0; k < 4; ++k) {
      if (k == l) continue;
      std::vector<int> ij;
      for (int x = 0; x < 4; ++x)
        if (x != k && x != l) ij.push_back(x);
      bool contained = true;
      for (const auto& v : c.vectors()) {
        auto s = support_of(v);
        bool in_ij = std::includes(ij.begin(), ij.end(), s.begin(), s.end());
        std::vector<int> kl{std::min(k, l), std::max(k, l)};
        bool in_kl = std::includes(kl.begin(), kl.end(), s.begin(), s.end());
        if (!in_ij && !in_kl) contained = false;
      }
      if (!contained) continue;
      if (c.ray_multiplicity(unit(ij[0])) != 0 || c.ray_multiplicity(unit(ij[1])) != 0 ||
          c.ray_multiplicity(unit(k)) != 0)
        continue;
      if (c.ray_multiplicity(unit(l)) != 1) continue;
      res.verdict = Verdict::Fires;
      res.labeling = {ij[0], ij[1], k, l};
      res.numbers = {{"m_l", 1}};
      return res;
    }
  return res;
}

CriterionResult obstruction_oneside(const TropicalCurve& c, long long characteristic) {
  require_l32(c);
  CriterionResult res;
  const long long d = c.degree();
  if (characteristic > 0 && characteristic < d) {
    res.verdict = Verdict::NotApplicable;
    return res;
  }
  for (const auto& perm : symmetric_group(4)) {
    int i = perm[0], j = perm[1], k = perm[2], l = perm[3];
    bool blocked = false;
    long long c1 = 0, c2 = 0;
    for (const auto& v : c.vectors()) {
      auto s = support_of(v);
      auto within = [&](int a, int b) {
        for (int x : s)
          if (x != a && x != b) return false;
        return true;
      };
      if (within(i, j)) blocked = true;                     // cone(e_i, e_j)
      if (within(i, k) && v[i] >= v[k]) blocked = true;     // cone(e_i, e_i+e_k)
      if (within(i, l) && v[i] >= v[l]) blocked = true;     // cone(e_i, e_i+e_l)
      if (blocked) break;
      if (within(j, k)) c1 += v[j];
      if (within(i, k)) c2 += v[i];
    }
    if (blocked) continue;
    if (c1 != c2 && 0 < c2 && c2 < d) {
      res.verdict = Verdict::Fires;
      res.labeling = {i, j, k, l};
      res.numbers = {{"c1", c1}, {"c2", c2}};
      return res;
    }
  }
  return res;
}

CriterionResult obstruction_lattice(const TropicalCurve& c, long long characteristic) {
  require_l32(c);
  CriterionResult res;
  const long long d = c.degree();
  if (characteristic > 0 && characteristic < d) {
    res.verdict = Verdict::NotApplicable;
    return res;
  }
  for (const auto& perm : symmetric_group(4)) {
    TropicalCurve cp = apply_permutation(c, perm);
    NewtonPolygon p0 = newton_polygon(project(cp, {1, 2, 3}));
    NewtonPolygon p3 = newton_polygon(project(cp, {0, 1, 2}));
    for (long long cc = 1; cc < d; ++cc) {
      bool a_empty = true;
      for (long long k = 0; k <= d && a_empty; ++k) {
        if (k != cc && p0.contains({d - k, k})) a_empty = false;
        if (k < d && p0.contains({d - 1 - k, k})) a_empty = false;
      }
      if (!a_empty) continue;
      int b_count = 0;
      for (long long k = 0; k <= d; ++k)
        if (k != cc && p3.contains({0, d - k})) ++b_count;
      if (b_count == 1) {
        res.verdict = Verdict::Fires;
        for (int t = 0; t < 4; ++t) res.labeling[t] = perm[t];
        res.numbers = {{"c", cc}};
        return res;
      }
    }
  }
  return res;
}

namespace {

bool contains_classical_line(const TropicalCurve& c) {
  for (const ClassicalLine& line : classical_lines()) {
    int i = line.pair[0], j = line.pair[1];
    int k = -1, l = -1;
    for (int x = 0; x < 4; ++x)
      if (x != i && x != j) (k < 0 ? k : l) = x;
    if (c.ray_multiplicity(unit_pair(i, j)) > 0 && c.ray_multiplicity(unit_pair(k, l)) > 0)
      return true;
  }
  return false;
}

bool is_rational_multiple(const TropicalCurve& c, const TropicalCurve& d) {
  if (c.vectors().size() != d.vectors().size()) return false;
  // same rays with a uniform multiplicity ratio
  long long num = 0, den = 0;
  for (std::size_t i = 0; i < c.vectors().size(); ++i) {
    if (primitive(c.vectors()[i]) != primitive(d.vectors()[i])) return false;
    long long mc = multiplicity(c.vectors()[i]);
    long long md = multiplicity(d.vectors()[i]);
    if (num == 0) {
      num = mc;
      den = md;
    } else if (mc * den != md * num) {
      return false;
    }
  }
  return true;
}

}  // namespace

CriterionResult obstruction_bogartkatz(const TropicalCurve& c, long long characteristic) {
  require_l32(c);
  CriterionResult res;
  const long long d = c.degree();
  if (characteristic > 0 && characteristic < d) {
    res.verdict = Verdict::NotApplicable;
    return res;
  }
  // Normals of classical planes containing |C|: kernel of the P-vectors
  // stacked with the all-ones row, over Q.
  ExactMatrix sys(c.vectors().size() + 1, 4, 0);
  for (std::size_t i = 0; i < c.vectors().size(); ++i)
    for (int j = 0; j < 4; ++j) sys.set(i, j, FieldElement::integer(c.vectors()[i][j], 0));
  for (int j = 0; j < 4; ++j) sys.set(c.vectors().size(), j, FieldElement::one(0));
  auto kernel = mat_kernel(sys);
  if (kernel.empty()) return res;  // not contained in any classical plane
  for (const auto& vec : kernel) {
    // primitive integer normal
    mpz_class lcm_den = 1;
    for (const auto& e : vec)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.rat().get_den().get_mpz_t());
    std::array<long long, 4> a{};
    mpz_class content = 0;
    for (int j = 0; j < 4; ++j) {
      mpz_class z = vec[j].rat().get_num() * (lcm_den / vec[j].rat().get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
      a[j] = z.get_si();
    }
    long long g = content.get_si();
    for (auto& x : a) x /= g;
    TropicalCurve cut = plane_cycle_intersection(a);
    if (is_rational_multiple(c, cut)) continue;
    if (contains_classical_line(cut)) continue;
    if (contains_classical_line(c)) continue;
    res.verdict = Verdict::Fires;
    res.normal = a;
    res.numbers = {{"cut_degree", cut.degree()}};
    return res;
  }
  return res;
}

bool ObstructionReport::any_fires() const {
  return intprod.verdict == Verdict::Fires || newton_margin.verdict == Verdict::Fires ||
         commonray.verdict == Verdict::Fires || oppositefaces.verdict == Verdict::Fires ||
         oneside.verdict == Verdict::Fires || lattice.verdict == Verdict::Fires ||
         bogartkatz.verdict == Verdict::Fires;
}

ObstructionReport run_all(const TropicalCurve& c, long long characteristic) {
  ObstructionReport r;
  r.intprod = obstruction_intprod(c);
  r.newton_margin = obstruction_newton_margin(c);
  r.commonray = obstruction_commonray(c);
  r.oppositefaces = obstruction_oppositefaces(c);
  r.oneside = obstruction_oneside(c, characteristic);
  r.lattice = obstruction_lattice(c, characteristic);
  r.bogartkatz = obstruction_bogartkatz(c, characteristic);
  return r;
}

}  // namespace tropreal
