#include "tropreal/realize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropreal {

namespace {

std::array<int, 3> as_triple(const std::vector<int>& basis) {
  return {basis[0], basis[1], basis[2]};
}

bool is_vertex(const NewtonPolygon& p, const LatticePoint& pt) {
  return std::find(p.vertices().begin(), p.vertices().end(), pt) != p.vertices().end();
}

// Per-basis data of the linear system of Algorithm-style conditions.
struct BasisConditions {
  std::vector<std::vector<FieldElement>> equalities;
  std::vector<std::vector<FieldElement>> functionals;
};

BasisConditions conditions_for_basis(const Matroid& m, const std::vector<int>& ref,
                                     const std::vector<int>& a, const TropicalCurve& c,
                                     const MonomialBasis& mb) {
  BasisConditions out;
  PlaneTropicalCurve ca = project(c, as_triple(a));
  NewtonPolygon pa = newton_polygon(ca);
  ExactMatrix transfer = a == ref ? ExactMatrix::identity(mb.size(), m.q_matrix().characteristic())
                                  : substitution_expand(m.eliminate(ref, a), mb.degree());
  for (std::size_t idx = 0; idx < mb.size(); ++idx) {
    const auto& e = mb.exponents(idx);
    LatticePoint pt{e[0], e[1]};
    if (!pa.contains(pt)) {
      out.equalities.push_back(transfer.row(idx));
    } else if (is_vertex(pa, pt)) {
      out.functionals.push_back(transfer.row(idx));
    }
  }
  return out;
}

// Primitive integer representative of a rational vector, first nonzero
// entry positive; identity on F_p vectors.
std::vector<FieldElement> normalize_solution(const std::vector<FieldElement>& v) {
  if (v.empty() || v[0].characteristic() != 0) return v;
  mpz_class lcm_den = 1;
  for (const auto& e : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.rat().get_den().get_mpz_t());
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const auto& e : v) {
    mpz_class z = e.rat().get_num() * (lcm_den / e.rat().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  if (content == 0) return v;
  int sign = 1;
  for (const auto& z : ints) {
    if (z != 0) {
      sign = z < 0 ? -1 : 1;
      break;
    }
  }
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (const auto& z : ints) out.push_back(FieldElement::rational(mpq_class(sign * z / content)));
  return out;
}

}  // namespace

ExactMatrix substitution_expand(const ExactMatrix& sub, long long d) {
  if (sub.rows() != 3 || sub.cols() != 3)
    throw TropError(ErrorKind::BadDimensions, "substitution must be 3x3");
  const long p = sub.characteristic();
  MonomialBasis mb(d);
  ExactMatrix out(mb.size(), mb.size(), p);
  using Key = std::array<long long, 3>;
  for (std::size_t col = 0; col < mb.size(); ++col) {
    const auto& nu = mb.exponents(col);
    std::map<Key, FieldElement> poly{{Key{0, 0, 0}, FieldElement::one(p)}};
    for (int l = 0; l < 3; ++l) {
      for (long long rep = 0; rep < nu[l]; ++rep) {
        std::map<Key, FieldElement> next;
        for (const auto& [key, coeff] : poly) {
          for (int mvar = 0; mvar < 3; ++mvar) {
            const FieldElement& s = sub.at(l, mvar);
            if (s.is_zero()) continue;
            Key k = key;
            ++k[mvar];
            auto it = next.find(k);
            if (it == next.end())
              next.emplace(k, coeff * s);
            else
              it->second += coeff * s;
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [key, coeff] : poly) out.set(mb.index(key), col, coeff);
  }
  return out;
}

RealizationResult realization_space(const PlaneIdeal& plane, const TropicalCurve& c,
                                    const std::optional<std::vector<int>>& reference_basis) {
  Matroid m(plane);
  validate_in_fan(c, m);
  const long long d = c.degree();
  MonomialBasis mb(d);
  auto bases = m.bases();
  std::vector<int> ref = reference_basis.value_or(bases.front());
  if (!m.is_basis(ref)) throw TropError(ErrorKind::NotABasis, "reference basis fails the rank test");
  std::vector<std::vector<FieldElement>> equalities;
  std::vector<std::vector<FieldElement>> functionals;
  for (const auto& a : bases) {
    BasisConditions bc = conditions_for_basis(m, ref, a, c, mb);
    for (auto& r : bc.equalities) equalities.push_back(std::move(r));
    for (auto& r : bc.functionals) functionals.push_back(std::move(r));
  }
  ExactMatrix eq(equalities.size(), mb.size(), plane.characteristic());
  for (std::size_t i = 0; i < equalities.size(); ++i)
    for (std::size_t j = 0; j < mb.size(); ++j) eq.set(i, j, equalities[i][j]);
  auto kernel = mat_kernel(eq);
  RealizationResult res;
  res.vertex_functionals = std::move(functionals);
  if (kernel.empty()) return res;
  // A generic kernel point avoids all vertex hyperplanes iff no functional
  // vanishes on the whole kernel (the closure of the prime field is infinite).
  for (const auto& phi : res.vertex_functionals) {
    bool nonzero_somewhere = false;
    for (const auto& v : kernel)
      if (!dot(phi, v).is_zero()) {
        nonzero_somewhere = true;
        break;
      }
    if (!nonzero_somewhere) return res;
  }
  for (auto& v : kernel) res.solution_basis.push_back(normalize_solution(v));
  res.status = RealizationStatus::NonEmpty;
  res.proj_dim = static_cast<long long>(res.solution_basis.size()) - 1;
  return res;
}

long long realization_dim(const PlaneIdeal& plane, const TropicalCurve& c) {
  return realization_space(plane, c).proj_dim;
}

bool tropicalizes_to(const PlaneIdeal& plane, const HomoPoly& f, const TropicalCurve& c) {
  if (f.degree() != c.degree())
    throw TropError(ErrorKind::DegreeMismatch,
                    "polynomial degree " + std::to_string(f.degree()) + " vs curve degree " +
                        std::to_string(c.degree()));
  if (f.characteristic() != plane.characteristic())
    throw TropError(ErrorKind::FieldMismatch, "polynomial field differs from the plane field");
  Matroid m(plane);
  validate_in_fan(c, m);
  std::vector<int> fvars(f.variables().begin(), f.variables().end());
  if (!m.is_basis(fvars))
    throw TropError(ErrorKind::NotABasis, "polynomial variables are not a basis of M(L)");
  const long long d = c.degree();
  MonomialBasis mb(d);
  for (const auto& a : m.bases()) {
    ExactMatrix transfer = a == fvars
                               ? ExactMatrix::identity(mb.size(), plane.characteristic())
                               : substitution_expand(m.eliminate(fvars, a), d);
    std::vector<FieldElement> fa = transfer.apply(f.coefficients());
    std::vector<LatticePoint> support;
    for (std::size_t idx = 0; idx < mb.size(); ++idx)
      if (!fa[idx].is_zero()) support.push_back({mb.exponents(idx)[0], mb.exponents(idx)[1]});
    std::vector<LatticePoint> hull = convex_hull(std::move(support));
    NewtonPolygon pa = newton_polygon(project(c, as_triple(a)));
    if (hull != pa.vertices()) return false;
  }
  return true;
}

HomoPoly realization_poly(const PlaneIdeal& plane, const TropicalCurve& c) {
  if (plane.characteristic() != 0)
    throw TropError(ErrorKind::CharNotZero, "witness search works over Q only");
  RealizationResult res = realization_space(plane, c);
  if (res.status == RealizationStatus::Empty)
    throw TropError(ErrorKind::NotRealizable, "realization space is empty");
  Matroid m(plane);
  const std::vector<int> ref = m.bases().front();
  const std::size_t k = res.solution_basis.size();
  const std::size_t n_coeff = res.solution_basis[0].size();
  // Kernel combinations with small integer coefficients, by increasing
  // max-abs, deterministic digit order 0, 1, -1, 2, -2, ...
  for (long long bound = 1; bound <= 64; ++bound) {
    std::vector<long long> digits(k, 0);
    auto value = [](long long digit) -> long long {
      return digit % 2 == 1 ? (digit + 1) / 2 : -digit / 2;
    };
    while (true) {
      long long max_abs = 0;
      for (long long dg : digits) max_abs = std::max(max_abs, std::llabs(value(dg)));
      if (max_abs == bound) {
        std::vector<FieldElement> cand(n_coeff, FieldElement::zero(0));
        for (std::size_t i = 0; i < k; ++i) {
          long long lambda = value(digits[i]);
          if (lambda == 0) continue;
          FieldElement fl = FieldElement::integer(lambda, 0);
          for (std::size_t j = 0; j < n_coeff; ++j)
            cand[j] += fl * res.solution_basis[i][j];
        }
        bool ok = true;
        for (const auto& phi : res.vertex_functionals)
          if (dot(phi, cand).is_zero()) {
            ok = false;
            break;
          }
        if (ok) {
          HomoPoly f(c.degree(), as_triple(ref), normalize_solution(cand));
          if (tropicalizes_to(plane, f, c)) return f;
        }
      }
      // odometer over digits 0..2*bound
      std::size_t pos = 0;
      while (pos < k && digits[pos] == 2 * bound) {
        digits[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
      ++digits[pos];
    }
  }
  throw TropError(ErrorKind::InvariantViolation, "no small-coefficient witness found");
}

long long irr_realization_dim(const PlaneIdeal& plane, const TropicalCurve& c, DimCache* cache) {
  auto dim_of = [&](const TropicalCurve& x) -> long long {
    if (cache) {
      auto it = cache->find(x.vectors());
      if (it != cache->end()) return it->second;
    }
    long long v = realization_dim(plane, x);
    if (cache) cache->emplace(x.vectors(), v);
    return v;
  };
  long long m = dim_of(c);
  if (m < 0) return -1;
  for (const auto& [d1, d2] : decompositions(c)) {
    long long m1 = dim_of(d1);
    if (m1 < 0) continue;
    long long m2 = dim_of(d2);
    if (m2 < 0) continue;
    if (m1 + m2 > m)
      throw TropError(ErrorKind::InvariantViolation,
                      "decomposition dimensions exceed the total dimension");
    if (m1 + m2 == m) return -1;
  }
  return m;
}

namespace {

constexpr long kGenericConstants[] = {1,  2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                      37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                      89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139};

// Lemma-style realization of a curve with at most one ray off the rank-1
// flats: f = c0 x_{r0}^d + c1 x_{r1}^d + c2 x_{r0}^b x_{r2}^{d-b}
//           + c3 x_{r1}^a x_{r2}^{d-a}, generic constants validated by
// tropicalization; constants are retried deterministically.
HomoPoly realize_single_ray_curve(const PlaneIdeal& plane, const TropicalCurve& curve,
                                  std::array<int, 3> vars_unsorted, long long a, long long b) {
  const long long d = curve.degree();
  std::array<int, 3> sorted = vars_unsorted;
  std::sort(sorted.begin(), sorted.end());
  std::array<int, 3> pos{};  // position of r0, r1, r2 in the sorted triple
  for (int t = 0; t < 3; ++t)
    pos[t] = static_cast<int>(std::find(sorted.begin(), sorted.end(), vars_unsorted[t]) -
                              sorted.begin());
  MonomialBasis mb(d);
  auto exps = [&](int var_slot, long long e_slot, int var_slot2,
                  long long e_slot2) -> std::array<long long, 3> {
    std::array<long long, 3> e{0, 0, 0};
    e[pos[var_slot]] += e_slot;
    e[pos[var_slot2]] += e_slot2;
    return e;
  };
  for (int attempt = 0; attempt + 4 <= static_cast<int>(std::size(kGenericConstants)) &&
                        attempt < 32;
       ++attempt) {
    std::vector<FieldElement> coeffs(mb.size(), FieldElement::zero(0));
    auto add = [&](std::array<long long, 3> e, long cst) {
      coeffs[mb.index(e)] += FieldElement::integer(cst, 0);
    };
    add(exps(0, d, 0, 0), kGenericConstants[attempt]);
    add(exps(1, d, 1, 0), kGenericConstants[attempt + 1]);
    add(exps(0, b, 2, d - b), kGenericConstants[attempt + 2]);
    add(exps(1, a, 2, d - a), kGenericConstants[attempt + 3]);
    HomoPoly f(d, sorted, std::move(coeffs));
    if (tropicalizes_to(plane, f, curve)) return f;
  }
  throw TropError(ErrorKind::InvariantViolation, "generic constants failed 32 times");
}

}  // namespace

std::vector<CyclePiece> realize_as_cycle(const PlaneIdeal& plane, const TropicalCurve& c) {
  if (plane.characteristic() != 0)
    throw TropError(ErrorKind::CharNotZero, "cycle realization picks constants over Q");
  Matroid m(plane);
  validate_in_fan(c, m);
  const int n = m.ground_size();
  const auto rank1 = m.flats_of_rank(1);
  std::vector<LatticeVector> flat_dirs;
  for (const Flat& f : rank1) flat_dirs.push_back(indicator(f, n));

  std::vector<CyclePiece> pieces;
  std::vector<long long> flat_spend(rank1.size(), 0);  // sum over v of (d_v - a_i)
  for (const auto& v : c.vectors()) {
    bool is_flat_ray = false;
    for (const auto& dir : flat_dirs)
      if (primitive(v) == dir) is_flat_ray = true;
    if (is_flat_ray) continue;
    auto mem = contains_ray(m, v);
    if (!mem || !mem->g2)
      throw TropError(ErrorKind::InvariantViolation, "non-flat ray without a 2-flat chain");
    // [v] = sum a_i [v_{F_i}]: alpha+beta on G1, beta on the other rank-1
    // flats inside G2.
    std::vector<long long> a(rank1.size(), 0);
    for (std::size_t i = 0; i < rank1.size(); ++i) {
      const Flat& f = rank1[i];
      bool in_g2 = std::includes(mem->g2->members.begin(), mem->g2->members.end(),
                                 f.members.begin(), f.members.end());
      if (f == mem->g1)
        a[i] = mem->alpha + mem->beta;
      else if (in_g2)
        a[i] = mem->beta;
    }
    long long dv = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<LatticeVector> pv{v};
    for (std::size_t i = 0; i < rank1.size(); ++i) {
      LatticeVector w = flat_dirs[i];
      for (long long& x : w) x *= (dv - a[i]);
      pv.push_back(std::move(w));
      flat_spend[i] += dv - a[i];
    }
    TropicalCurve piece_curve = TropicalCurve::from_vectors(std::move(pv), n);
    // Lemma variables: a representative of G1, of G2 \ G1, and of the
    // complement of G2; exponents a = alpha+beta, b = beta.
    int r0 = mem->g1.members.front();
    int r1 = -1, r2 = -1;
    for (int x = 0; x < n && (r1 < 0 || r2 < 0); ++x) {
      bool in1 = std::binary_search(mem->g1.members.begin(), mem->g1.members.end(), x);
      bool in2 = std::binary_search(mem->g2->members.begin(), mem->g2->members.end(), x);
      if (r1 < 0 && in2 && !in1) r1 = x;
      if (r2 < 0 && !in2) r2 = x;
    }
    HomoPoly f = realize_single_ray_curve(plane, piece_curve, {r0, r1, r2},
                                          mem->alpha + mem->beta, mem->beta);
    pieces.push_back(CyclePiece{1, 1, std::move(f), std::move(piece_curve)});
  }

  long long lambda = 0;
  for (std::size_t i = 0; i < rank1.size(); ++i) {
    long long on_curve = c.ray_multiplicity(flat_dirs[i]);
    long long coeff = on_curve - flat_spend[i];
    if (i == 0)
      lambda = coeff;
    else if (coeff != lambda)
      throw TropError(ErrorKind::InvariantViolation, "flat-ray residue is not a multiple of D");
  }
  if (lambda != 0) {
    TropicalCurve d_curve = rank1_flats_curve(m);
    const std::vector<int> ref = m.bases().front();
    MonomialBasis mb(1);
    HomoPoly lin = [&] {
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<FieldElement> coeffs(3, FieldElement::zero(0));
        for (int t = 0; t < 3; ++t)
          coeffs[t] = FieldElement::integer(kGenericConstants[attempt + t], 0);
        HomoPoly f(1, as_triple(ref), std::move(coeffs));
        if (tropicalizes_to(plane, f, d_curve)) return f;
      }
      throw TropError(ErrorKind::InvariantViolation, "generic linear form failed 32 times");
    }();
    pieces.insert(pieces.begin(),
                  CyclePiece{lambda < 0 ? -1 : 1, std::llabs(lambda), std::move(lin),
                             std::move(d_curve)});
  }
  return pieces;
}

}  // namespace tropreal
