#include "subcode/field.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "subcode/error.hpp"

namespace subcode {

namespace {

std::vector<std::uint32_t> label_digits(Fq a, std::uint32_t p, unsigned r) {
  std::vector<std::uint32_t> d(r);
  for (unsigned i = 0; i < r; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Fq digits_label(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Fq a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

std::size_t poly_degree(const Poly& f) {
  std::size_t n = f.size();
  while (n > 0 && f[n - 1] == 0) --n;
  return n == 0 ? 0 : n - 1;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(const BaseField& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  require(!b.empty(), "polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  const Fq lead_inv = F.inv(b.back());
  Poly quot(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Fq c = F.mul(a[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  poly_trim(a);
  poly_trim(quot);
  return {quot, a};
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::uint32_t p, Poly modulus) : p_(p), r_(1), q_(p), modulus_(std::move(modulus)) {
  require(p >= 2 && is_prime(BigInt(p)), "characteristic must be prime, got " + std::to_string(p));
  if (modulus_.empty()) return;
  poly_trim(modulus_);
  require(modulus_.size() >= 2, "modulus of F_q must have degree at least 1");
  require(modulus_.back() == 1, "modulus of F_q must be monic");
  for (Fq c : modulus_) require(c < p, "modulus coefficient outside F_p");
  const BaseField prime(p);
  require(poly_is_irreducible(prime, modulus_), "modulus of F_q is not irreducible over F_p");
  r_ = static_cast<unsigned>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r_; ++i) {
    q *= p;
    require(q < (std::uint64_t{1} << 31), "F_q too large: q must stay below 2^31");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (r_ == 1) {
    modulus_.clear();
    return;
  }
  if (q_ > (1u << 16)) return;

  // Log/exp tables through any generator of F_q^*.
  const Factorization f = factorize(BigInt(q_ - 1));
  auto slow_pow = [&](Fq a, std::uint64_t e) {
    Fq r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Fq g = 2;
  for (;; ++g) {
    bool generates = true;
    for (const auto& pp : f) {
      if (slow_pow(g, (q_ - 1) / static_cast<std::uint64_t>(pp.prime)) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) break;
  }
  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  Fq x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = mul_slow(x, g);
  }
}

Fq BaseField::add(Fq a, Fq b) const {
  if (r_ == 1) return static_cast<Fq>((std::uint64_t{a} + b) % p_);
  if (p_ == 2) return a ^ b;
  auto da = label_digits(a, p_, r_), db = label_digits(b, p_, r_);
  for (unsigned i = 0; i < r_; ++i) da[i] = (da[i] + db[i]) % p_;
  return digits_label(da, p_);
}

Fq BaseField::neg(Fq a) const {
  if (r_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  auto d = label_digits(a, p_, r_);
  for (auto& x : d) x = x == 0 ? 0 : p_ - x;
  return digits_label(d, p_);
}

Fq BaseField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq BaseField::mul_slow(Fq a, Fq b) const {
  const auto da = label_digits(a, p_, r_), db = label_digits(b, p_, r_);
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i)
    for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  for (std::size_t i = prod.size(); i-- > r_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < r_; ++j) prod[i - r_ + j] = (prod[i - r_ + j] + (p_ - c) * modulus_[j]) % p_;
    prod[i] = 0;
  }
  std::vector<std::uint32_t> out(r_);
  for (unsigned i = 0; i < r_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return digits_label(out, p_);
}

Fq BaseField::mul(Fq a, Fq b) const {
  if (r_ == 1) return static_cast<Fq>(std::uint64_t{a} * b % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Fq BaseField::inv(Fq a) const {
  if (a == 0) fail(ErrorKind::zero_divisor, "inverse of zero in F_q");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Fq BaseField::div(Fq a, Fq b) const {
  if (b == 0) fail(ErrorKind::zero_divisor, "division by zero in F_q");
  return mul(a, inv(b));
}

Fq BaseField::pow(Fq a, std::uint64_t e) const {
  Fq r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fq BaseField::frobenius(Fq a, unsigned s) const {
  for (unsigned i = 0; i < s % r_; ++i) a = pow(a, p_);
  return a;
}

std::shared_ptr<const BaseField> make_base_field(std::uint32_t p, unsigned r, Poly modulus_q) {
  require(r >= 1, "extension degree r must be at least 1");
  if (r == 1) {
    require(modulus_q.empty() || modulus_q.size() == 2, "prime field takes no modulus");
    return std::make_shared<const BaseField>(p);
  }
  if (modulus_q.empty()) modulus_q = default_modulus(BaseField(p), r);
  auto F = std::make_shared<const BaseField>(p, std::move(modulus_q));
  require(F->degree() == r, "modulus_q degree does not match r");
  return F;
}

// ---------------------------------------------------------------------------
// Polynomials

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_add(const BaseField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(out);
  return out;
}

Poly poly_sub(const BaseField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(out);
  return out;
}

Poly poly_mul(const BaseField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(out);
  return out;
}

Poly poly_mod(const BaseField& F, Poly a, const Poly& f) { return poly_divmod(F, std::move(a), f).second; }

Poly poly_gcd(const BaseField& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(const BaseField& F, const Poly& base, const BigInt& e, const Poly& f) {
  Poly result{1};
  result = poly_mod(F, result, f);
  Poly b = poly_mod(F, base, f);
  if (e == 0) return result;
  for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
    result = poly_mod(F, poly_mul(F, result, result), f);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = poly_mod(F, poly_mul(F, result, b), f);
  }
  return result;
}

bool poly_is_irreducible(const BaseField& F, const Poly& f_in) {
  Poly f = f_in;
  poly_trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const Poly x{0, 1};
  // x^(q^i) mod f for i = 1..d
  std::vector<Poly> frob(d + 1);
  frob[0] = poly_mod(F, x, f);
  for (std::size_t i = 1; i <= d; ++i) frob[i] = poly_powmod(F, frob[i - 1], BigInt(F.order()), f);
  if (poly_sub(F, frob[d], frob[0]) != Poly{}) return false;
  for (const auto& t : factorize(BigInt(d))) {
    const std::size_t i = d / static_cast<std::size_t>(t.prime);
    const Poly g = poly_gcd(F, f, poly_sub(F, frob[i], frob[0]));
    if (poly_degree(g) != 0 || g.empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Extension field

bool FieldElement::is_zero() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Fq c) { return c == 0; });
}

std::size_t FieldElementHash::operator()(const FieldElement& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Fq c : a.coeffs) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

ExtField::ExtField(std::shared_ptr<const BaseField> base, Poly modulus)
    : base_(std::move(base)), k_(0), modulus_(std::move(modulus)) {
  require(base_ != nullptr, "extension field needs a base field");
  poly_trim(modulus_);
  require(modulus_.size() >= 2, "extension modulus must have degree at least 1");
  require(modulus_.back() == 1, "extension modulus must be monic");
  for (Fq c : modulus_) require(base_->contains(c), "extension modulus coefficient outside F_q");
  require(poly_is_irreducible(*base_, modulus_), "extension modulus is not irreducible over F_q");
  k_ = static_cast<unsigned>(modulus_.size() - 1);
}

BigInt ExtField::size() const { return boost::multiprecision::pow(BigInt(base_->order()), k_); }

BigInt ExtField::group_order() const { return size() - 1; }

const Factorization& ExtField::group_order_factors() const {
  std::call_once(factors_once_, [this] { factors_ = factorize(group_order()); });
  return factors_;
}

FieldElement ExtField::zero() const { return FieldElement{std::vector<Fq>(k_, 0)}; }

FieldElement ExtField::one() const { return constant(1); }

FieldElement ExtField::constant(Fq c) const {
  require(base_->contains(c), "constant outside F_q");
  FieldElement a = zero();
  a.coeffs[0] = c;
  return a;
}

FieldElement ExtField::generator() const {
  if (k_ == 1) return constant(base_->neg(modulus_[0]));
  FieldElement a = zero();
  a.coeffs[1] = 1;
  return a;
}

bool ExtField::valid(const FieldElement& a) const noexcept {
  return a.coeffs.size() == k_ &&
         std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](Fq c) { return base_->contains(c); });
}

void ExtField::check(const FieldElement& a) const {
  require(valid(a), "field element does not belong to F_{q^" + std::to_string(k_) + "}");
}

FieldElement ExtField::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement out = a;
  for (unsigned i = 0; i < k_; ++i) out.coeffs[i] = base_->add(a.coeffs[i], b.coeffs[i]);
  return out;
}

FieldElement ExtField::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement out = a;
  for (unsigned i = 0; i < k_; ++i) out.coeffs[i] = base_->sub(a.coeffs[i], b.coeffs[i]);
  return out;
}

FieldElement ExtField::neg(const FieldElement& a) const {
  check(a);
  FieldElement out = a;
  for (auto& c : out.coeffs) c = base_->neg(c);
  return out;
}

FieldElement ExtField::scale(const FieldElement& a, Fq c) const {
  check(a);
  FieldElement out = a;
  for (auto& x : out.coeffs) x = base_->mul(x, c);
  return out;
}

FieldElement ExtField::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const BaseField& F = *base_;
  std::vector<Fq> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = F.add(prod[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  }
  // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  for (std::size_t i = prod.size(); i-- > k_;) {
    const Fq c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i - k_ + j] = F.sub(prod[i - k_ + j], F.mul(c, modulus_[j]));
  }
  prod.resize(k_);
  return FieldElement{std::move(prod)};
}

FieldElement ExtField::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) fail(ErrorKind::zero_divisor, "inverse of zero in F_{q^k}");
  const BaseField& F = *base_;
  // Extended Euclid on (modulus, a); s tracks the cofactor of a.
  Poly r0 = modulus_, r1 = a.coeffs;
  poly_trim(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(F, r0, r1);
    Poly s2 = poly_sub(F, s0, poly_mul(F, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  const Fq c_inv = F.inv(r0[0]);
  FieldElement out = zero();
  for (std::size_t i = 0; i < s0.size() && i < k_; ++i) out.coeffs[i] = F.mul(s0[i], c_inv);
  return out;
}

FieldElement ExtField::div(const FieldElement& a, const FieldElement& b) const {
  check(b);
  if (b.is_zero()) fail(ErrorKind::zero_divisor, "division by zero in F_{q^k}");
  return mul(a, inv(b));
}

FieldElement ExtField::pow(const FieldElement& a, const BigInt& e) const {
  check(a);
  require(e >= 0, "negative exponent");
  FieldElement result = one();
  if (e == 0) return result;
  for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = mul(result, a);
  }
  return result;
}

FieldElement ExtField::pow(const FieldElement& a, const MessageIndex& e) const {
  check(a);
  const BigInt radix = e.radix();
  std::vector<FieldElement> small;  // a^0 .. a^(radix-1), filled lazily
  small.push_back(one());
  FieldElement result = one();
  for (std::size_t i = e.significant_length(); i-- > 0;) {
    result = pow(result, radix);
    const std::uint32_t d = e.digit(i);
    while (small.size() <= d) small.push_back(mul(small.back(), a));
    result = mul(result, small[d]);
  }
  return result;
}

BigInt ExtField::element_order(const FieldElement& a) const {
  check(a);
  require(!a.is_zero(), "the zero element has no multiplicative order");
  BigInt order = group_order();
  const FieldElement unit = one();
  for (const auto& f : group_order_factors()) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      if (pow(a, order / f.prime) != unit) break;
      order /= f.prime;
    }
  }
  return order;
}

bool ExtField::is_primitive() const {
  const FieldElement a = generator();
  return !a.is_zero() && element_order(a) == group_order();
}

BigInt ExtField::label(const FieldElement& a) const {
  check(a);
  BigInt v = 0;
  for (std::size_t i = k_; i-- > 0;) v = v * base_->order() + a.coeffs[i];
  return v;
}

FieldElement ExtField::from_label(const BigInt& label) const {
  require(label >= 0 && label < size(), "label outside F_{q^k}");
  FieldElement a = zero();
  BigInt rest = label;
  for (unsigned i = 0; i < k_; ++i) {
    a.coeffs[i] = static_cast<Fq>(rest % base_->order());
    rest /= base_->order();
  }
  return a;
}

// ---------------------------------------------------------------------------
// Bijections

FieldElement psi(const ExtField& F, std::span<const Fq> v) {
  require(v.size() == F.degree(), "psi_k expects a vector of length k = " + std::to_string(F.degree()));
  FieldElement a{std::vector<Fq>(v.begin(), v.end())};
  F.check(a);
  return a;
}

std::vector<Fq> psi_inv(const ExtField& F, const FieldElement& a) {
  F.check(a);
  return a.coeffs;
}

MessageIndex phi_adic(const ExtField& F, std::span<const FieldElement> u) {
  std::vector<std::uint32_t> digits;
  digits.reserve(u.size() * F.degree());
  for (const auto& a : u) {
    F.check(a);
    digits.insert(digits.end(), a.coeffs.begin(), a.coeffs.end());
  }
  return MessageIndex::from_digits(F.base().order(), std::move(digits));
}

std::vector<FieldElement> phi_adic_inv(const ExtField& F, const MessageIndex& index, std::size_t m) {
  const MessageIndex idx = index.rebased(F.base().order());
  const std::size_t k = F.degree();
  require(idx.significant_length() <= k * m, "index out of range for the q^k-adic expansion of length " +
                                                 std::to_string(m));
  std::vector<FieldElement> u(m, F.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) u[i].coeffs[j] = idx.digit(i * k + j);
  return u;
}

// ---------------------------------------------------------------------------
// Moduli

Poly default_modulus(const BaseField& F, unsigned degree) {
  require(degree >= 1, "modulus degree must be at least 1");
  if (F.order() == 2) {
    switch (degree) {
      case 2: return {1, 1, 1};
      case 3: return {1, 1, 0, 1};
      case 4: return {1, 1, 0, 0, 1};
      default: break;
    }
  }
  const std::uint32_t q = F.order();
  const BigInt group = boost::multiprecision::pow(BigInt(q), degree) - 1;
  const Factorization factors = factorize(group);
  const Poly x{0, 1};
  auto primitive = [&](const Poly& f) {
    if (poly_powmod(F, x, group, f) != Poly{1}) return false;
    for (const auto& pp : factors)
      if (poly_powmod(F, x, group / pp.prime, f) == Poly{1}) return false;
    return true;
  };
  // Odometer over (c_0, ..., c_{degree-1}) with c_0 most significant.
  std::vector<Fq> tail(degree, 0);
  if (degree >= 2) tail[0] = 1;  // c_0 = 0 means x divides f
  std::optional<Poly> first_irreducible;
  for (;;) {
    Poly f = tail;
    f.push_back(1);
    if (poly_is_irreducible(F, f)) {
      if (primitive(f)) return f;
      if (!first_irreducible) first_irreducible = f;
    }
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++tail[i] < q) break;
      tail[i] = 0;
      if (i == 0) return *first_irreducible;
    }
  }
}

FieldTower FieldTower::make(std::uint32_t p, unsigned r, Poly modulus_q, unsigned k, Poly modulus_k) {
  require(k >= 1, "extension degree k must be at least 1");
  FieldTower t;
  t.base = make_base_field(p, r, std::move(modulus_q));
  if (modulus_k.empty()) modulus_k = default_modulus(*t.base, k);
  t.ext = std::make_shared<const ExtField>(t.base, std::move(modulus_k));
  require(t.ext->degree() == k, "modulus_k degree does not match k");
  return t;
}

}  // namespace subcode
