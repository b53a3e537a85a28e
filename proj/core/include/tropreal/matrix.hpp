#ifndef TROPREAL_MATRIX_HPP
#define TROPREAL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropreal/field.hpp"

namespace tropreal {

/// Dense matrix over Q or F_p.  All entries share the matrix characteristic.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, long characteristic);
  static ExactMatrix from_ints(const std::vector<std::vector<long>>& entries, long characteristic);
  static ExactMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows, long characteristic);
  static ExactMatrix identity(std::size_t n, long characteristic);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long characteristic() const { return characteristic_; }

  const FieldElement& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& v);

  std::vector<FieldElement> row(std::size_t i) const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;  // m * v
  ExactMatrix transposed() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  bool operator==(const ExactMatrix& other) const;

 private:
  std::size_t rows_, cols_;
  long characteristic_;
  std::vector<FieldElement> entries_;  // row-major
};

/// Rank over the matrix field (exact Gaussian elimination; pivot rule:
/// first nonzero column, first nonzero row).
std::size_t mat_rank(const ExactMatrix& m);

/// Basis of the right null space; size cols - rank; each vector satisfies
/// m * v = 0 exactly.  Deterministic for a given input.
std::vector<std::vector<FieldElement>> mat_kernel(const ExactMatrix& m);

/// One exact solution of m * x = b, or nullopt when inconsistent.
std::optional<std::vector<FieldElement>> mat_solve(const ExactMatrix& m,
                                                   const std::vector<FieldElement>& b);

/// Exact dot product; vectors must share the field and length.
FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

}  // namespace tropreal

#endif
