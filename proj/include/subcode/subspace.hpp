#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subcode/field.hpp"
#include "subcode/matrix.hpp"

namespace subcode {

/// A subspace of F_q^n held as its reduced row echelon basis, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  /// The zero subspace of F_q^n.
  explicit Subspace(std::size_t ambient = 0);

  /// Row space of an arbitrary generator matrix.
  static Subspace row_space(const BaseField& F, const Matrix& generators);

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(const BaseField& F, std::span<const Fq> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return MatrixHash{}(s.basis()); }
};

/// dim U + dim V - 2 dim(U n V).
std::size_t subspace_distance(const BaseField& F, const Subspace& u, const Subspace& v);

/// A point of the projective space G_{q^k}(1, m): a nonzero vector over
/// F_{q^k} whose first nonzero coordinate is 1.
class ProjPoint {
 public:
  /// Validates normalization; use normalize_point() for arbitrary vectors.
  ProjPoint(const ExtField& F, std::vector<FieldElement> coords);

  std::span<const FieldElement> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  /// 0-based position of the leading 1.
  std::size_t leading() const noexcept { return leading_; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<FieldElement> coords_;
  std::size_t leading_ = 0;
};

/// Divides v by its first nonzero coordinate; usage error for the zero vector.
ProjPoint normalize_point(const ExtField& F, std::span<const FieldElement> v);

/// Splits a vector of F_q^(km) into m blocks of k and lifts each with psi_k.
std::vector<FieldElement> lift_vector(const ExtField& F, std::span<const Fq> v);

/// Construction I: replace each coordinate by its k x k block rho(u_i) and
/// take the row space.
Subspace des(const ExtField& F, const ProjPoint& pt);

/// Inverse of des on spread codewords: lifts the first row of the RREF basis
/// and normalizes; not_codeword error when des does not reproduce the input.
ProjPoint des_inv(const ExtField& F, const Subspace& u);

}  // namespace subcode
