#include "tropreal/matrix.hpp"

#include <utility>

namespace tropreal {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, long characteristic)
    : rows_(rows),
      cols_(cols),
      characteristic_(characteristic),
      entries_(rows * cols, FieldElement::zero(characteristic)) {}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& entries,
                                   long characteristic) {
  std::size_t r = entries.size();
  std::size_t c = r == 0 ? 0 : entries[0].size();
  ExactMatrix m(r, c, characteristic);
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i].size() != c)
      throw TropError(ErrorKind::BadDimensions, "ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, FieldElement::integer(entries[i][j], characteristic));
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows,
                                   long characteristic) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  ExactMatrix m(r, c, characteristic);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw TropError(ErrorKind::BadDimensions, "ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, long characteristic) {
  ExactMatrix m(n, n, characteristic);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(characteristic));
  return m;
}

const FieldElement& ExactMatrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * cols_ + j];
}

void ExactMatrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (v.characteristic() != characteristic_)
    throw TropError(ErrorKind::FieldMismatch, "entry field differs from matrix field");
  entries_[i * cols_ + j] = v;
}

std::vector<FieldElement> ExactMatrix::row(std::size_t i) const {
  return std::vector<FieldElement>(entries_.begin() + i * cols_,
                                   entries_.begin() + (i + 1) * cols_);
}

std::vector<FieldElement> ExactMatrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw TropError(ErrorKind::BadDimensions, "vector length != cols");
  std::vector<FieldElement> out(rows_, FieldElement::zero(characteristic_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_, characteristic_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw TropError(ErrorKind::BadDimensions, "matrix product shape");
  if (a.characteristic() != b.characteristic())
    throw TropError(ErrorKind::FieldMismatch, "matrix product fields differ");
  ExactMatrix c(a.rows(), b.cols(), a.characteristic());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.set(i, j, c.at(i, j) + a.at(i, k) * b.at(k, j));
      }
    }
  return c;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || characteristic_ != other.characteristic_)
    return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != other.entries_[i]) return false;
  return true;
}

namespace {

struct Rref {
  std::vector<std::vector<FieldElement>> rows;
  std::vector<std::size_t> pivot_cols;  // ascending
};

// Reduced row echelon form.  Pivot rule: scan columns left to right, take the
// first row (top to bottom among unused rows) with a nonzero entry.
Rref rref(const ExactMatrix& m) {
  Rref out;
  out.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.rows.push_back(m.row(i));
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < out.rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < out.rows.size() && out.rows[sel][col].is_zero()) ++sel;
    if (sel == out.rows.size()) continue;
    std::swap(out.rows[pivot_row], out.rows[sel]);
    FieldElement inv = out.rows[pivot_row][col].inverse();
    for (std::size_t j = col; j < m.cols(); ++j) out.rows[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      if (i == pivot_row || out.rows[i][col].is_zero()) continue;
      FieldElement f = out.rows[i][col];
      for (std::size_t j = col; j < m.cols(); ++j)
        out.rows[i][j] -= f * out.rows[pivot_row][j];
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return out;
}

}  // namespace

std::size_t mat_rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<FieldElement>> mat_kernel(const ExactMatrix& m) {
  Rref r = rref(m);
  const long p = m.characteristic();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElement> v(m.cols(), FieldElement::zero(p));
    v[free_col] = FieldElement::one(p);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
      v[r.pivot_cols[k]] = -r.rows[k][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElement>> mat_solve(const ExactMatrix& m,
                                                   const std::vector<FieldElement>& b) {
  if (b.size() != m.rows()) throw TropError(ErrorKind::BadDimensions, "rhs length != rows");
  ExactMatrix aug(m.rows(), m.cols() + 1, m.characteristic());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  Rref r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), FieldElement::zero(m.characteristic()));
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
    x[r.pivot_cols[k]] = r.rows[k][m.cols()];
  return x;
}

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) throw TropError(ErrorKind::BadDimensions, "dot length mismatch");
  FieldElement acc = a.empty() ? FieldElement() : FieldElement::zero(a[0].characteristic());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace tropreal
