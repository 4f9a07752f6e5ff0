#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "subcode/factor.hpp"
#include "subcode/message_index.hpp"

namespace subcode {

/// Element of F_q, labelled by its p-adic integer: the element sum u_i b^(i-1)
/// of F_p[b] carries the label sum u_i p^(i-1). For prime q the label is the
/// residue itself. Labels double as the digits of q-adic message indices.
using Fq = std::uint32_t;

/// Polynomial over F_q, lowest coefficient first.
using Poly = std::vector<Fq>;

/// The field F_q with q = p^r, built over F_p from a monic irreducible modulus
/// of degree r (empty modulus for r = 1).
class BaseField {
 public:
  explicit BaseField(std::uint32_t p, Poly modulus = {});

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return r_; }
  std::uint32_t order() const noexcept { return q_; }
  const Poly& modulus() const noexcept { return modulus_; }
  bool contains(Fq a) const noexcept { return a < q_; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const;
  Fq pow(Fq a, std::uint64_t e) const;
  /// a^(p^s), the s-th power of the Frobenius automorphism.
  Fq frobenius(Fq a, unsigned s) const;

  friend bool operator==(const BaseField& a, const BaseField& b) { return a.p_ == b.p_ && a.modulus_ == b.modulus_; }

 private:
  Fq mul_slow(Fq a, Fq b) const;

  std::uint32_t p_;
  unsigned r_;
  std::uint32_t q_;
  Poly modulus_;
  // log/exp tables for q <= 2^16 with r > 1; empty otherwise
  std::vector<std::uint32_t> log_;
  std::vector<Fq> exp_;
};

// Polynomial helpers over F_q.
void poly_trim(Poly& f);
Poly poly_add(const BaseField& F, const Poly& a, const Poly& b);
Poly poly_sub(const BaseField& F, const Poly& a, const Poly& b);
Poly poly_mul(const BaseField& F, const Poly& a, const Poly& b);
/// Remainder of a modulo nonzero f.
Poly poly_mod(const BaseField& F, Poly a, const Poly& f);
Poly poly_gcd(const BaseField& F, Poly a, Poly b);
Poly poly_powmod(const BaseField& F, const Poly& base, const BigInt& e, const Poly& f);
/// Rabin's test. `f` need not be monic but must be nonzero.
bool poly_is_irreducible(const BaseField& F, const Poly& f);

/// Element of an extension F_q[a]: coefficient vector over F_q, lowest first,
/// of length equal to the extension degree.
struct FieldElement {
  std::vector<Fq> coeffs;

  bool is_zero() const noexcept;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct FieldElementHash {
  std::size_t operator()(const FieldElement& a) const noexcept;
};

/// The extension F_{q^k} = F_q[a] with a a root of a monic irreducible modulus.
/// Always handled through shared_ptr; the group-order factorization is
/// computed on first use and shared.
class ExtField {
 public:
  ExtField(std::shared_ptr<const BaseField> base, Poly modulus);
  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

  const BaseField& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseField>& base_ptr() const noexcept { return base_; }
  unsigned degree() const noexcept { return k_; }
  const Poly& modulus() const noexcept { return modulus_; }
  /// q^k
  BigInt size() const;
  /// q^k - 1
  BigInt group_order() const;
  const Factorization& group_order_factors() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The root a of the modulus.
  FieldElement generator() const;
  FieldElement constant(Fq c) const;

  bool valid(const FieldElement& a) const noexcept;
  void check(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, Fq c) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  /// Square-and-multiply; 0^0 is 1.
  FieldElement pow(const FieldElement& a, const BigInt& e) const;
  /// Same, driven by the digit vector (one radix-power step per digit).
  FieldElement pow(const FieldElement& a, const MessageIndex& e) const;

  /// Multiplicative order; usage error on zero.
  BigInt element_order(const FieldElement& a) const;
  /// True when the root of the modulus has order q^k - 1.
  bool is_primitive() const;

  /// Integer label of an element (sum of coefficient labels times q^(i-1)).
  BigInt label(const FieldElement& a) const;
  FieldElement from_label(const BigInt& label) const;

 private:
  std::shared_ptr<const BaseField> base_;
  unsigned k_;
  Poly modulus_;
  mutable std::once_flag factors_once_;
  mutable Factorization factors_;
};

/// psi_k: coordinate vector in F_q^k to the element sum v_j a^(j-1).
FieldElement psi(const ExtField& F, std::span<const Fq> v);
std::vector<Fq> psi_inv(const ExtField& F, const FieldElement& a);

/// Inverse q^k-adic expansion phi_{k,m}: sum phi(u_i) q^(k(i-1)), returned as
/// a q-adic index of exactly k*m digits.
MessageIndex phi_adic(const ExtField& F, std::span<const FieldElement> u);
/// q^k-adic expansion into m elements; usage error when index >= q^(km).
std::vector<FieldElement> phi_adic_inv(const ExtField& F, const MessageIndex& index, std::size_t m);

/// Default modulus of the given degree over F: built-in table first, then the
/// lexicographically smallest (low-to-high coefficients) primitive monic
/// polynomial, falling back to the smallest irreducible.
Poly default_modulus(const BaseField& F, unsigned degree);

/// The chain F_p < F_q < F_{q^k}.
struct FieldTower {
  std::shared_ptr<const BaseField> base;
  std::shared_ptr<const ExtField> ext;

  /// Empty moduli select defaults. Validates irreducibility.
  static FieldTower make(std::uint32_t p, unsigned r, Poly modulus_q, unsigned k, Poly modulus_k);

  std::uint32_t p() const noexcept { return base->characteristic(); }
  unsigned r() const noexcept { return base->degree(); }
  std::uint32_t q() const noexcept { return base->order(); }
  unsigned k() const noexcept { return ext->degree(); }
  bool primitive() const { return ext->is_primitive(); }
};

std::shared_ptr<const BaseField> make_base_field(std::uint32_t p, unsigned r, Poly modulus_q = {});

}  // namespace subcode
