#ifndef TROPREAL_PLANE_HPP
#define TROPREAL_PLANE_HPP

#include <optional>
#include <vector>

#include "tropreal/matrix.hpp"

namespace tropreal {

/// A linear ideal L = (l_1, ..., l_{n-2}) in n+1 variables cutting out a
/// plane E in the torus: the forms are independent, so dim(S/L) = 3, and no
/// variable vanishes identically on E.
class PlaneIdeal {
 public:
  /// Builds and validates a plane from integer form coefficients, reduced
  /// into the field of the given characteristic.
  static PlaneIdeal from_forms(const std::vector<std::vector<long>>& coeffs, long characteristic);

  int n_plus_1() const { return static_cast<int>(forms_.cols()); }
  long characteristic() const { return forms_.characteristic(); }
  const ExactMatrix& forms() const { return forms_; }

 private:
  explicit PlaneIdeal(ExactMatrix forms) : forms_(std::move(forms)) {}
  ExactMatrix forms_;
};

/// Closed subset of the ground set together with its rank.
struct Flat {
  std::vector<int> members;  // sorted ascending
  int rank = 0;

  bool operator==(const Flat& other) const { return members == other.members; }
  bool operator<(const Flat& other) const { return members < other.members; }
};

/// Indicator vector of a flat in Z^{n+1}.
std::vector<long long> indicator(const Flat& flat, int n_plus_1);

/// The matroid M(L) of a plane, represented by a 3 x (n+1) matrix Q whose
/// rows span the solution space of the forms; rank queries are exact column
/// ranks of Q.
class Matroid {
 public:
  explicit Matroid(const PlaneIdeal& plane);

  int ground_size() const { return static_cast<int>(q_.cols()); }
  const ExactMatrix& q_matrix() const { return q_; }

  int rank(const std::vector<int>& subset) const;
  std::vector<int> closure(const std::vector<int>& subset) const;
  bool is_basis(const std::vector<int>& subset) const;

  /// All 3-subsets of the ground set with column rank 3, lexicographic.
  std::vector<std::vector<int>> bases() const;
  /// All rank-r flats, r in {1,2}, sorted by member lists.
  std::vector<Flat> flats_of_rank(int r) const;

  /// Substitution matrix c with x_b = sum_a c[b][a] x_a modulo L, for
  /// b ranging over from_basis and a over to_basis (3x3, exact).
  ExactMatrix eliminate(const std::vector<int>& from_basis,
                        const std::vector<int>& to_basis) const;

 private:
  ExactMatrix q_;
  ExactMatrix columns(const std::vector<int>& subset) const;
};

/// Location of a ray inside the Bergman fan: v = alpha*v_{g1} + beta*v_{g2},
/// with g2 absent (beta = 0) when v lies on a rank-1 flat ray, and alpha = 0
/// when v lies on a rank-2 flat ray.
struct ConeMembership {
  Flat g1;
  std::optional<Flat> g2;
  long long alpha = 0;
  long long beta = 0;
};

/// Decides [v] in |B(M)| and returns the minimal cone containing v in its
/// relative interior; nullopt when v is outside the fan.  v must be nonzero
/// with minimum coordinate 0.
std::optional<ConeMembership> contains_ray(const Matroid& m, const std::vector<long long>& v);

}  // namespace tropreal

#endif
