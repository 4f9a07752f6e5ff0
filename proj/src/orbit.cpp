#include "subcode/orbit.hpp"

#include <boost/multiprecision/integer.hpp>
#include <unordered_map>

#include "subcode/error.hpp"

namespace subcode {
namespace {

constexpr std::uint64_t kSearchLimit = 1u << 22;
constexpr std::uint64_t kBabyStepLimit = 1u << 24;

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r0 = m, r1 = mod_pos(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const BigInt t = r0 / r1;
    r0 -= t * r1;
    std::swap(r0, r1);
    s0 -= t * s1;
    std::swap(s0, s1);
  }
  return mod_pos(s0, m);
}

Subspace times(const BaseField& F, const Subspace& u, const Matrix& p) {
  return Subspace::row_space(F, multiply(F, u.basis(), p));
}

std::uint64_t small(const BigInt& v, std::uint64_t limit, const char* what) {
  if (v > limit) fail(ErrorKind::usage, std::string(what) + " too large to enumerate (" + v.str() + ")");
  return static_cast<std::uint64_t>(v);
}

// Discrete log of h to the base gamma of prime order p.
BigInt baby_giant(const ExtField& F, const FieldElement& gamma, const FieldElement& h, const BigInt& p) {
  const BigInt root = boost::multiprecision::sqrt(p) + 1;
  if (root > kBabyStepLimit) fail(ErrorKind::budget_exceeded, "baby-step table for prime " + p.str() + " too large");
  const auto m = static_cast<std::uint64_t>(root);
  std::unordered_map<FieldElement, std::uint64_t, FieldElementHash> table;
  table.reserve(m);
  FieldElement cur = F.one();
  for (std::uint64_t j = 0; j < m; ++j) {
    table.emplace(cur, j);
    cur = F.mul(cur, gamma);
  }
  const FieldElement giant = F.inv(F.pow(gamma, BigInt(m)));
  FieldElement y = h;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = table.find(y); it != table.end()) return mod_pos(BigInt(i) * m + it->second, p);
    y = F.mul(y, giant);
  }
  fail(ErrorKind::not_in_subgroup, "element is not a power of the base");
}

}  // namespace

std::string_view to_string(OrbitKind kind) noexcept {
  switch (kind) {
    case OrbitKind::primitive: return "primitive";
    case OrbitKind::irreducible_nonprimitive: return "irreducible_nonprimitive";
    case OrbitKind::completely_reducible: return "completely_reducible";
    case OrbitKind::general: return "general";
  }
  return "general";
}

OrbitKind parse_orbit_kind(std::string_view text) {
  for (auto kind : {OrbitKind::primitive, OrbitKind::irreducible_nonprimitive, OrbitKind::completely_reducible,
                    OrbitKind::general})
    if (text == to_string(kind)) return kind;
  fail(ErrorKind::usage, "unknown orbit kind '" + std::string(text) + "'");
}

BigInt matrix_order(const BaseField& F, const Matrix& p, std::uint64_t limit) {
  require(p.rows() == p.cols(), "generator must be square");
  require(inverse(F, p).has_value(), "generator is not invertible");
  const Matrix id = Matrix::identity(p.rows());
  Matrix cur = p;
  for (std::uint64_t e = 1; e <= limit; ++e) {
    if (cur == id) return e;
    cur = multiply(F, cur, p);
  }
  fail(ErrorKind::usage, "matrix order exceeds search limit");
}

Factorization factor_divisor(const Factorization& of_n, const BigInt& d) {
  Factorization out;
  BigInt rest = d;
  for (const auto& f : of_n) {
    unsigned e = 0;
    while (e < f.exponent && rest % f.prime == 0) {
      rest /= f.prime;
      ++e;
    }
    if (e > 0) out.push_back({f.prime, e, f.probable});
  }
  require(rest == 1, "value does not divide the factored number");
  return out;
}

BigInt orbit_order(const BaseField& F, const Subspace& u, const Matrix& p, const BigInt& gen_order,
                   const Factorization& gen_factors) {
  require(u.ambient() == p.rows(), "initial point and generator sizes differ");
  BigInt o = gen_order;
  for (const auto& f : gen_factors) {
    for (unsigned i = 0; i < f.exponent && o % f.prime == 0; ++i) {
      if (times(F, u, power(F, p, o / f.prime)) != u) break;
      o /= f.prime;
    }
  }
  return o;
}

BigInt orbit_order(const BaseField& F, const Subspace& u, const Matrix& p) {
  const BigInt order = matrix_order(F, p);
  return orbit_order(F, u, p, order, factorize(order));
}

BigInt pohlig_hellman(const ExtField& F, const FieldElement& beta, const FieldElement& alpha,
                      const Factorization& order_factors) {
  F.check(beta);
  F.check(alpha);
  require(!alpha.is_zero(), "base of a discrete log must be nonzero");
  if (beta.is_zero()) fail(ErrorKind::not_in_subgroup, "zero is not a power of the base");
  const BigInt n = recombine(order_factors);
  require(F.pow(alpha, n) == F.one(), "factorization does not match the order of the base");

  std::vector<BigInt> residues, moduli;
  const FieldElement alpha_inv = F.inv(alpha);
  for (const auto& f : order_factors) {
    const FieldElement gamma = F.pow(alpha, n / f.prime);
    BigInt x = 0, pj = 1;
    for (unsigned j = 0; j < f.exponent; ++j) {
      const FieldElement shifted = F.mul(beta, F.pow(alpha_inv, x));
      const FieldElement h = F.pow(shifted, n / (pj * f.prime));
      x += baby_giant(F, gamma, h, f.prime) * pj;
      pj *= f.prime;
    }
    residues.push_back(x);
    moduli.push_back(pj);
  }
  const BigInt x = residues.empty() ? BigInt(0) : crt(residues, moduli).first;
  if (F.pow(alpha, x) != beta) fail(ErrorKind::not_in_subgroup, "element is not a power of the base");
  return x;
}

BigInt dlog_naive(const ExtField& F, const FieldElement& beta, const FieldElement& alpha) {
  F.check(beta);
  F.check(alpha);
  require(!alpha.is_zero(), "base of a discrete log must be nonzero");
  const FieldElement unit = F.one();
  FieldElement cur = unit;
  BigInt i = 0;
  do {
    if (cur == beta) return i;
    cur = F.mul(cur, alpha);
    ++i;
  } while (cur != unit);
  fail(ErrorKind::not_in_subgroup, "element is not a power of the base");
}

std::pair<BigInt, BigInt> crt(std::span<const BigInt> residues, std::span<const BigInt> moduli) {
  require(residues.size() == moduli.size(), "crt needs one residue per modulus");
  BigInt x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    require(moduli[i] > 0, "crt moduli must be positive");
    const BigInt a = mod_pos(residues[i], moduli[i]);
    const BigInt g = boost::multiprecision::gcd(m, moduli[i]);
    const BigInt diff = a - x;
    if (diff % g != 0) fail(ErrorKind::inconsistent, "congruences have no common solution");
    const BigInt mg = m / g, ng = moduli[i] / g;
    const BigInt t = mod_pos((diff / g) * inverse_mod(mg, ng), ng);
    const BigInt l = m * ng;
    x = mod_pos(x + m * t, l);
    m = l;
  }
  return {x, m};
}

CyclicOrbitCode CyclicOrbitCode::irreducible(std::shared_ptr<const ExtField> field, Subspace initial) {
  require(field != nullptr, "orbit code needs a field");
  CyclicOrbitCode code;
  code.base_ = field->base_ptr();
  code.generator_ = companion_matrix(field->base(), field->modulus());
  const FieldElement alpha = field->generator();
  require(!alpha.is_zero(), "modulus x is not allowed for a cyclic generator");
  code.gen_order_ = field->element_order(alpha);
  code.gen_factors_ = factor_divisor(field->group_order_factors(), code.gen_order_);
  code.kind_ = code.gen_order_ == field->group_order() ? OrbitKind::primitive : OrbitKind::irreducible_nonprimitive;
  code.block_orders_ = {code.gen_order_};
  code.blocks_ = {std::move(field)};
  code.initial_ = std::move(initial);
  code.finish();
  return code;
}

CyclicOrbitCode CyclicOrbitCode::completely_reducible(std::vector<std::shared_ptr<const ExtField>> blocks,
                                                      Subspace initial) {
  require(!blocks.empty(), "reducible orbit code needs at least one block");
  CyclicOrbitCode code;
  code.base_ = blocks.front()->base_ptr();
  std::vector<Matrix> companions;
  BigInt order = 1;
  for (const auto& b : blocks) {
    require(b != nullptr && b->base() == *code.base_, "all blocks must share the base field");
    const FieldElement alpha = b->generator();
    require(!alpha.is_zero(), "modulus x is not allowed for a cyclic generator");
    companions.push_back(companion_matrix(b->base(), b->modulus()));
    const BigInt o = b->element_order(alpha);
    code.block_orders_.push_back(o);
    order = boost::multiprecision::lcm(order, o);
  }
  code.generator_ = block_diagonal(companions);
  code.gen_order_ = order;
  code.gen_factors_ = factorize(order);
  code.kind_ = OrbitKind::completely_reducible;
  code.blocks_ = std::move(blocks);
  code.initial_ = std::move(initial);
  code.finish();
  return code;
}

CyclicOrbitCode CyclicOrbitCode::general(std::shared_ptr<const BaseField> base, Matrix generator, Subspace initial) {
  require(base != nullptr, "orbit code needs a base field");
  check_entries(*base, generator);
  CyclicOrbitCode code;
  code.gen_order_ = matrix_order(*base, generator);
  code.gen_factors_ = factorize(code.gen_order_);
  code.base_ = std::move(base);
  code.generator_ = std::move(generator);
  code.initial_ = std::move(initial);
  code.kind_ = OrbitKind::general;
  code.finish();
  return code;
}

void CyclicOrbitCode::finish() {
  require(initial_.ambient() == generator_.rows(), "initial point and generator sizes differ");
  require(initial_.dim() > 0, "initial point must be nonzero");
  orbit_order_ = subcode::orbit_order(*base_, initial_, generator_, gen_order_, gen_factors_);
}

Matrix CyclicOrbitCode::generator_power(const BigInt& i) const {
  require(i >= 0, "negative exponent");
  switch (kind_) {
    case OrbitKind::primitive:
    case OrbitKind::irreducible_nonprimitive:
      return companion_power(*blocks_.front(), i % gen_order_);
    case OrbitKind::completely_reducible: {
      std::vector<Matrix> parts;
      for (std::size_t j = 0; j < blocks_.size(); ++j) parts.push_back(companion_power(*blocks_[j], i % block_orders_[j]));
      return block_diagonal(parts);
    }
    case OrbitKind::general:
      break;
  }
  return power(*base_, generator_, i % gen_order_);
}

Subspace CyclicOrbitCode::enc2(const BigInt& i) const {
  if (i < 0 || i >= orbit_order_) fail(ErrorKind::usage, "message exceeds code size");
  return times(*base_, initial_, generator_power(i));
}

std::vector<BigInt> CyclicOrbitCode::block_exponents(const Matrix& pw) const {
  require(kind_ != OrbitKind::general, "general orbit codes have no block structure");
  require(pw.rows() == n() && pw.cols() == n(), "power matrix has the wrong size");
  check_entries(*base_, pw);
  std::vector<BigInt> out;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const ExtField& F = *blocks_[j];
    const std::size_t d = F.degree();
    const Matrix rows = pw.row_block(offset, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < n(); ++c)
        if ((c < offset || c >= offset + d) && rows(r, c) != 0)
          fail(ErrorKind::not_in_subgroup, "matrix is not a power of the generator");
    const FieldElement beta = rho_inv(F, rows.col_block(offset, d));
    out.push_back(pohlig_hellman(F, beta, F.generator(), factor_divisor(F.group_order_factors(), block_orders_[j])));
    offset += d;
  }
  return out;
}

BigInt CyclicOrbitCode::retrieve2(const Matrix& pw) const {
  if (kind_ == OrbitKind::general) {
    require(pw.rows() == n() && pw.cols() == n(), "power matrix has the wrong size");
    const std::uint64_t steps = small(gen_order_, kSearchLimit, "generator order");
    Matrix cur = Matrix::identity(n());
    for (std::uint64_t i = 0; i < steps; ++i) {
      if (cur == pw) return BigInt(i) % orbit_order_;
      cur = multiply(*base_, cur, generator_);
    }
    fail(ErrorKind::not_in_subgroup, "matrix is not a power of the generator");
  }
  const auto exps = block_exponents(pw);
  if (kind_ == OrbitKind::completely_reducible) return reducible_retrieve(*this, exps) % orbit_order_;
  return exps.front() % orbit_order_;
}

std::optional<BigInt> CyclicOrbitCode::locate(const Subspace& u) const {
  if (u.ambient() != n() || u.dim() != k()) return std::nullopt;
  const std::uint64_t steps = small(orbit_order_, kSearchLimit, "orbit");
  Subspace cur = initial_;
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (cur == u) return BigInt(i);
    cur = times(*base_, cur, generator_);
  }
  return std::nullopt;
}

BigInt CyclicOrbitCode::retrieve2_codeword(const Subspace& u) const {
  if (auto i = locate(u)) return *i;
  fail(ErrorKind::not_codeword, "not a codeword of this orbit code");
}

std::vector<Subspace> CyclicOrbitCode::codebook(std::size_t limit) const {
  const std::uint64_t count = small(orbit_order_, limit, "orbit");
  std::vector<Subspace> out;
  out.reserve(count);
  Subspace cur = initial_;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = times(*base_, cur, generator_);
  }
  return out;
}

BigInt reducible_retrieve(const CyclicOrbitCode& code, std::span<const BigInt> exponents) {
  require(code.kind() == OrbitKind::completely_reducible || code.kind() == OrbitKind::primitive ||
              code.kind() == OrbitKind::irreducible_nonprimitive,
          "reducible_retrieve needs a block-structured code");
  require(exponents.size() == code.blocks().size(), "one exponent per block is required");
  std::vector<BigInt> moduli;
  for (const auto& b : code.blocks()) moduli.push_back(b->element_order(b->generator()));
  return crt(exponents, moduli).first;
}

std::size_t min_distance(const BaseField& F, std::span<const Subspace> codebook) {
  require(codebook.size() >= 2, "minimum distance needs at least two codewords");
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < codebook.size(); ++i)
    for (std::size_t j = i + 1; j < codebook.size(); ++j)
      best = std::min(best, subspace_distance(F, codebook[i], codebook[j]));
  return best;
}

OrbitUnionCode::OrbitUnionCode(std::vector<CyclicOrbitCode> orbits) : orbits_(std::move(orbits)) {
  require(!orbits_.empty(), "orbit union needs at least one orbit");
  const auto& first = orbits_.front();
  for (const auto& o : orbits_) {
    require(o.base() == first.base() && o.generator() == first.generator(), "orbits in a union must share the generator");
    require(o.k() == first.k(), "orbits in a union must have the same dimension");
    if (o.orbit_order() != first.orbit_order())
      fail(ErrorKind::usage, "orbits have unequal cardinalities (" + o.orbit_order().str() + " vs " +
                                 first.orbit_order().str() + ")");
  }
}

Subspace OrbitUnionCode::enc3(const BigInt& i) const {
  if (i < 0 || i >= size()) fail(ErrorKind::usage, "message exceeds code size");
  const auto j = static_cast<std::size_t>(i / c_star());
  return orbits_[j].enc2(i % c_star());
}

BigInt OrbitUnionCode::retrieve3(std::size_t orbit_id, const Matrix& pw) const {
  if (orbit_id < 1 || orbit_id > z()) fail(ErrorKind::usage, "unknown orbit id " + std::to_string(orbit_id));
  return orbits_[orbit_id - 1].retrieve2(pw) + c_star() * (orbit_id - 1);
}

std::pair<std::size_t, BigInt> OrbitUnionCode::locate(const Subspace& u) const {
  for (std::size_t j = 0; j < z(); ++j)
    if (auto l = orbits_[j].locate(u)) return {j + 1, *l};
  fail(ErrorKind::not_codeword, "not a codeword of this union code");
}

BigInt OrbitUnionCode::retrieve3_codeword(const Subspace& u) const {
  const auto [j, l] = locate(u);
  return l + c_star() * (j - 1);
}

bool OrbitUnionCode::verify_disjoint(std::size_t limit) const {
  std::unordered_map<Subspace, std::size_t, SubspaceHash> seen;
  for (std::size_t j = 0; j < z(); ++j)
    for (auto& u : orbits_[j].codebook(limit))
      if (!seen.emplace(std::move(u), j).second) return false;
  return true;
}

}  // namespace subcode
