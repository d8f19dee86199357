#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "relqh/field.hpp"

namespace relqh {

// Dense row-major matrix over GF(p) or Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& row_major);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& rows);
  static Matrix unit_vector(const Field& f, std::size_t n, std::size_t i);
  static Matrix hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& parts);
  static Matrix vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts);
  static Matrix block_diag(const Field& f, const std::vector<Matrix>& parts);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void set_int(std::size_t i, std::size_t j, long long v);
  bool is_zero_at(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  // this += s * o
  void add_scaled(const Matrix& o, const Scalar& s);
  Matrix transpose() const;
  Scalar trace() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix col(std::size_t j) const { return block(0, j, r_, 1); }
  // Reshape into a single column (row-major order).
  Matrix flatten() const;

  std::vector<std::uint32_t>& mod_data() { return a_; }
  const std::vector<std::uint32_t>& mod_data() const { return a_; }
  std::vector<mpq_class>& rat_data() { return q_; }
  const std::vector<mpq_class>& rat_data() const { return q_; }

  std::uint64_t fingerprint() const;

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::uint32_t> a_;
  std::vector<mpq_class> q_;
};

struct Echelon {
  Matrix r;                          // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Right null space as columns; the transpose of the result is in RREF.
Matrix mat_kernel(const Matrix& m);
// Leftmost-pivot particular solution of a x = b.
std::optional<Matrix> mat_solve(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
// e <- 3e^2 - 2e^3 until stable.
Matrix lift_idempotent(const Matrix& e0, std::size_t nil_bound);

// Column-space basis B with B.select_rows(pivot_rows) = identity.
struct ColumnBasis {
  Matrix basis;
  std::vector<std::size_t> pivot_rows;
  std::size_t dim() const { return pivot_rows.size(); }
  // Coordinates of a vector already known to lie in the span.
  Matrix coords(const Matrix& v) const { return v.select_rows(pivot_rows); }
  bool contains(const Matrix& v) const;
};
ColumnBasis column_space(const Matrix& m);
ColumnBasis column_space(const Field& f, std::size_t n, const std::vector<Matrix>& cols);

// Quotient of F^n by a subspace: coordinates on the complement rows.
struct QuotientSpace {
  ColumnBasis sub;
  std::vector<std::size_t> free_rows;
  std::size_t ambient = 0;
  std::size_t dim() const { return free_rows.size(); }
  Matrix project(const Matrix& v) const;
  // Preimage matrix: columns are the unit vectors on free rows.
  Matrix section() const;
};
QuotientSpace quotient_space(const ColumnBasis& sub, std::size_t ambient);

}  // namespace relqh
