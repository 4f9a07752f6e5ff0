#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "subcode/field.hpp"
#include "subcode/matrix.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

/// U -> sigma(U A), sigma the Frobenius power x -> x^(p^s) applied entrywise.
struct SemiLinearIsometry {
  Matrix a;
  unsigned frobenius_power = 0;

  static SemiLinearIsometry identity(std::size_t n) { return {Matrix::identity(n), 0}; }
};

/// Usage error unless A is square and invertible and 0 <= s < r.
void check_isometry(const BaseField& F, const SemiLinearIsometry& iso);

Subspace apply_isometry(const BaseField& F, const Subspace& u, const SemiLinearIsometry& iso);
std::vector<Fq> apply_isometry(const BaseField& F, std::span<const Fq> v, const SemiLinearIsometry& iso);
/// sigma^-1(v) A^-1
std::vector<Fq> invert_isometry(const BaseField& F, std::span<const Fq> v, const SemiLinearIsometry& iso);

/// Encodes with C1's map and sends through the isometry into C2; retrieval
/// pulls one nonzero vector of the received codeword back into C1 and hands
/// it to C1's vector retriever.
class HybridEncoder {
 public:
  using Encode = std::function<Subspace(const BigInt&)>;
  using RetrieveVector = std::function<BigInt(std::span<const Fq>)>;

  HybridEncoder(std::shared_ptr<const BaseField> base, SemiLinearIsometry iso, Encode encode, RetrieveVector retrieve);

  const SemiLinearIsometry& isometry() const noexcept { return iso_; }

  Subspace encode(const BigInt& i) const;
  BigInt retrieve(const Subspace& received) const;

  /// Consistency error unless the image of `c1` is exactly `c2` (as sets).
  void check_maps_onto(std::span<const Subspace> c1, std::span<const Subspace> c2) const;

 private:
  std::shared_ptr<const BaseField> base_;
  SemiLinearIsometry iso_;
  Matrix a_inv_;
  Encode encode_;
  RetrieveVector retrieve_;
};

/// Brute-force search for A in GL_n(F_2) with c1 A = c2, n <= 4.
std::optional<Matrix> find_linear_isometry(const BaseField& F, std::span<const Subspace> c1,
                                           std::span<const Subspace> c2);

}  // namespace subcode
