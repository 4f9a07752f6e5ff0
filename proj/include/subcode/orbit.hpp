#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subcode/factor.hpp"
#include "subcode/field.hpp"
#include "subcode/matrix.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

enum class OrbitKind { primitive, irreducible_nonprimitive, completely_reducible, general };

std::string_view to_string(OrbitKind kind) noexcept;
OrbitKind parse_orbit_kind(std::string_view text);

/// Least e > 0 with P^e = I, by repeated multiplication. Usage error past `limit`.
BigInt matrix_order(const BaseField& F, const Matrix& p, std::uint64_t limit = 1u << 22);

/// Least j > 0 with U P^j = U, given ord(P) and its factorization.
BigInt orbit_order(const BaseField& F, const Subspace& u, const Matrix& p, const BigInt& gen_order,
                   const Factorization& gen_factors);
/// Same, with ord(P) found by matrix_order().
BigInt orbit_order(const BaseField& F, const Subspace& u, const Matrix& p);

/// Factorization of a divisor d of n, read off the factorization of n.
Factorization factor_divisor(const Factorization& of_n, const BigInt& d);

/// log_alpha(beta) in [0, ord(alpha)), prime by prime with baby-step
/// giant-step and recombined by CRT. not_in_subgroup error when beta is not a
/// power of alpha.
BigInt pohlig_hellman(const ExtField& F, const FieldElement& beta, const FieldElement& alpha,
                      const Factorization& order_factors);
/// Linear scan over the powers of alpha.
BigInt dlog_naive(const ExtField& F, const FieldElement& beta, const FieldElement& alpha);

/// x mod lcm(moduli) with x = residues[i] mod moduli[i]. Moduli need not be
/// coprime; inconsistent error when no solution exists.
std::pair<BigInt, BigInt> crt(std::span<const BigInt> residues, std::span<const BigInt> moduli);

/// Cyclic orbit code U<P>. P is the companion matrix of one irreducible
/// modulus, a block diagonal of several, or any invertible matrix (general).
class CyclicOrbitCode {
 public:
  static CyclicOrbitCode irreducible(std::shared_ptr<const ExtField> field, Subspace initial);
  static CyclicOrbitCode completely_reducible(std::vector<std::shared_ptr<const ExtField>> blocks, Subspace initial);
  static CyclicOrbitCode general(std::shared_ptr<const BaseField> base, Matrix generator, Subspace initial);

  OrbitKind kind() const noexcept { return kind_; }
  const BaseField& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseField>& base_ptr() const noexcept { return base_; }
  const std::vector<std::shared_ptr<const ExtField>>& blocks() const noexcept { return blocks_; }
  const Matrix& generator() const noexcept { return generator_; }
  const Subspace& initial() const noexcept { return initial_; }
  std::size_t n() const noexcept { return generator_.rows(); }
  std::size_t k() const noexcept { return initial_.dim(); }

  /// ord(P)
  const BigInt& gen_order() const noexcept { return gen_order_; }
  const Factorization& gen_factors() const noexcept { return gen_factors_; }
  /// |orbit|, the size of the message set.
  const BigInt& orbit_order() const noexcept { return orbit_order_; }

  /// P^i, reduced mod ord(P).
  Matrix generator_power(const BigInt& i) const;

  Subspace enc2(const BigInt& i) const;
  /// Message from P^i as handed over by an error decoder, reduced mod the orbit order.
  BigInt retrieve2(const Matrix& power) const;
  /// Per-block exponents i_j of a block-diagonal P^i.
  std::vector<BigInt> block_exponents(const Matrix& power) const;
  /// Message of a codeword by walking the orbit. not_codeword error if absent.
  BigInt retrieve2_codeword(const Subspace& u) const;
  /// Walks the orbit once; nullopt when u is not on it.
  std::optional<BigInt> locate(const Subspace& u) const;

  std::vector<Subspace> codebook(std::size_t limit = 1u << 20) const;

 private:
  CyclicOrbitCode() = default;
  void finish();

  OrbitKind kind_ = OrbitKind::general;
  std::shared_ptr<const BaseField> base_;
  std::vector<std::shared_ptr<const ExtField>> blocks_;
  std::vector<BigInt> block_orders_;
  Matrix generator_;
  Subspace initial_;
  BigInt gen_order_;
  Factorization gen_factors_;
  BigInt orbit_order_;
};

/// i mod lcm(ord P_j) from exponents i_j mod ord(P_j) of a completely
/// reducible code. inconsistent error when the congruences have no solution.
BigInt reducible_retrieve(const CyclicOrbitCode& code, std::span<const BigInt> exponents);

/// Minimum pairwise subspace distance; usage error for fewer than two codewords.
std::size_t min_distance(const BaseField& F, std::span<const Subspace> codebook);

/// Union of orbits U_1<P>, ..., U_z<P> of equal size c*. Message i is sent as
/// U_{j} P^l with j = i / c* + 1 and l = i mod c*.
class OrbitUnionCode {
 public:
  explicit OrbitUnionCode(std::vector<CyclicOrbitCode> orbits);

  const std::vector<CyclicOrbitCode>& orbits() const noexcept { return orbits_; }
  std::size_t z() const noexcept { return orbits_.size(); }
  const BigInt& c_star() const noexcept { return orbits_.front().orbit_order(); }
  BigInt size() const { return c_star() * z(); }

  Subspace enc3(const BigInt& i) const;
  /// orbit_id is 1-based.
  BigInt retrieve3(std::size_t orbit_id, const Matrix& power) const;
  /// (orbit id, exponent) of a codeword, by search.
  std::pair<std::size_t, BigInt> locate(const Subspace& u) const;
  BigInt retrieve3_codeword(const Subspace& u) const;
  /// True when no codeword lies on two orbits.
  bool verify_disjoint(std::size_t limit = 1u << 20) const;

 private:
  std::vector<CyclicOrbitCode> orbits_;
};

}  // namespace subcode
