#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subcode/field.hpp"

namespace subcode {

/// Dense row-major matrix with entries in F_q (as labels). The field is passed
/// to each operation rather than stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Fq>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Fq& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Fq operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Fq> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Fq> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Fq> entries() const noexcept { return entries_; }

  std::vector<std::vector<Fq>> to_rows() const;

  /// Rows [first, first + count) as a new matrix.
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Columns [first, first + count) as a new matrix.
  Matrix col_block(std::size_t first, std::size_t count) const;

  void append_row(std::span<const Fq> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq> entries_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

void check_entries(const BaseField& F, const Matrix& m);

Matrix add(const BaseField& F, const Matrix& a, const Matrix& b);
Matrix multiply(const BaseField& F, const Matrix& a, const Matrix& b);
/// Row vector times matrix.
std::vector<Fq> multiply(const BaseField& F, std::span<const Fq> v, const Matrix& m);
/// Square-and-multiply power of a square matrix.
Matrix power(const BaseField& F, const Matrix& a, const BigInt& e);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const BaseField& F, const Matrix& a);
/// Vertical concatenation; column counts must agree.
Matrix stack(const Matrix& top, const Matrix& bottom);
/// Horizontal concatenation; row counts must agree.
Matrix concat(const Matrix& left, const Matrix& right);
/// Block-diagonal matrix with the given square blocks.
Matrix block_diagonal(std::span<const Matrix> blocks);

struct RrefResult {
  Matrix reduced;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot of each step is the first nonzero
/// entry met scanning columns left to right and, within a column, rows top
/// down; pivot rows are scaled to 1 and cleared above and below.
RrefResult rref(const BaseField& F, Matrix m);
std::size_t rank(const BaseField& F, const Matrix& m);

/// dim(rs A) + dim(rs B) - rank of the stacked matrix.
std::size_t intersection_dim(const BaseField& F, const Matrix& a, const Matrix& b);

/// Row-wise companion matrix: ones on the superdiagonal and last row
/// (-p_0, ..., -p_{k-1}). Usage error when `poly` is not monic.
Matrix companion_matrix(const BaseField& F, const Poly& poly);

/// rho(a): the k x k image of a under F_q[alpha] -> F_q[P]. Row 1 is psi_inv(a),
/// each further row is the previous one times P (shift right, then add the
/// dropped last coordinate times the companion's last row).
Matrix rho(const ExtField& F, const FieldElement& a);
/// Reads psi-coordinates off the first row and verifies that rho reproduces
/// the matrix; consistency error otherwise.
FieldElement rho_inv(const ExtField& F, const Matrix& m);

/// P^i for the companion matrix P of the field modulus, built row by row from
/// alpha^i. Exponents at or above ord(P) wrap around (alpha^i is periodic).
Matrix companion_power(const ExtField& F, const BigInt& i);
/// Same, with alpha^i already known (skips the exponentiation).
Matrix companion_power(const ExtField& F, const FieldElement& alpha_i);

/// Plain text: one row per line, entries as integer labels separated by
/// single spaces. Lines starting with '#' are comments when parsing.
std::string to_text(const Matrix& m);
Matrix parse_matrix_text(std::string_view text);

}  // namespace subcode
