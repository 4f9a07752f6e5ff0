#include "subcode/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>

#include "subcode/error.hpp"

namespace subcode {

namespace {

std::vector<std::uint32_t> sieve(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& primes_up_to(std::uint64_t bound) {
  // Shared by every factorize() call with the default bound.
  static const std::vector<std::uint32_t> default_primes = sieve(FactorBudget{}.trial_bound);
  if (bound == FactorBudget{}.trial_bound) return default_primes;
  thread_local std::vector<std::uint32_t> custom;
  thread_local std::uint64_t custom_bound = 0;
  if (custom_bound != bound) {
    custom = sieve(bound);
    custom_bound = bound;
  }
  return custom;
}

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return (a * b) % m; }

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 on failure.
BigInt brent(const BigInt& n, std::uint64_t c, std::uint64_t& remaining) {
  constexpr std::uint64_t batch = 128;
  BigInt y = 2, x, ys, g = 1, acc = 1;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t steps = std::min(batch, r - k);
      if (remaining < steps) fail(ErrorKind::budget_exceeded, "factorization exceeded budget");
      remaining -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = (mulmod(y, y, n) + c) % n;
        acc = mulmod(acc, x > y ? x - y : y - x, n);
      }
      g = boost::multiprecision::gcd(acc, n);
      k += steps;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (mulmod(ys, ys, n) + c) % n;
      g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

void split(const BigInt& n, std::map<BigInt, PrimePower>& found, std::uint64_t& remaining) {
  if (n == 1) return;
  bool certain = true;
  if (is_prime(n, &certain)) {
    auto& entry = found[n];
    entry.prime = n;
    entry.exponent += 1;
    entry.probable = !certain;
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    BigInt d = brent(n, c, remaining);
    if (d != 0) {
      split(d, found, remaining);
      split(n / d, found, remaining);
      return;
    }
  }
}

}  // namespace

FactorBudget FactorBudget::from_environment() {
  FactorBudget budget;
  if (const char* env = std::getenv("SUBSPACE_FACTOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) budget.rho_iterations = v;
  }
  return budget;
}

bool is_prime(const BigInt& n, bool* certain) {
  if (certain) *certain = true;
  if (n < 2) return false;
  static constexpr unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : bases) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s && witness; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  if (certain && n >= (BigInt(1) << 64)) *certain = false;
  return true;
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  require(n >= 1, "factorize requires a positive integer");
  std::map<BigInt, PrimePower> found;
  BigInt rest = n;
  for (std::uint32_t p : primes_up_to(budget.trial_bound)) {
    if (BigInt(p) * p > rest) break;
    if (rest % p != 0) continue;
    PrimePower pp{BigInt(p), 0, false};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
    }
    found[pp.prime] = pp;
  }
  std::uint64_t remaining = budget.rho_iterations;
  split(rest, found, remaining);
  Factorization out;
  for (auto& [p, pp] : found) out.push_back(pp);
  return out;
}

BigInt recombine(const Factorization& factors) {
  BigInt v = 1;
  for (const auto& f : factors) v *= boost::multiprecision::pow(f.prime, f.exponent);
  return v;
}

std::vector<BigInt> divisors(const Factorization& factors) {
  std::vector<BigInt> out{1};
  for (const auto& f : factors) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SmoothnessRow analyze_group_order(std::uint64_t q, unsigned n, const FactorBudget& budget) {
  require(q >= 2 && n >= 1, "analyze_group_order requires q >= 2 and n >= 1");
  SmoothnessRow row;
  row.n = n;
  row.n_squared = std::uint64_t{n} * n;
  const BigInt order = boost::multiprecision::pow(BigInt(q), n) - 1;
  try {
    row.factors = factorize(order, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget_exceeded) throw;
    row.known = false;
    return row;
  }
  row.distinct = row.factors.size();
  row.smooth = true;
  for (const auto& f : row.factors) {
    row.max_prime = std::max(row.max_prime, f.prime);
    row.max_exponent = std::max(row.max_exponent, f.exponent);
    row.cost_bound = std::max(row.cost_bound, std::max<BigInt>(BigInt(f.exponent) * n, BigInt(f.prime * f.exponent)));
    if (f.prime > row.n_squared) row.smooth = false;
  }
  return row;
}

std::vector<SmoothnessRow> smoothness_report(std::uint64_t q, unsigned n_max, unsigned n_min,
                                             const FactorBudget& budget) {
  require(n_max <= budget.table_limit,
          "smoothness_report: n_max exceeds the table limit of " + std::to_string(budget.table_limit));
  std::vector<SmoothnessRow> rows;
  for (unsigned n = std::max(n_min, 1u); n <= n_max; ++n) {
    SmoothnessRow row = analyze_group_order(q, n, budget);
    if (!row.known || row.smooth) rows.push_back(std::move(row));
  }
  return rows;
}

std::string pohlig_hellman_cost_class(const SmoothnessRow& row, std::optional<unsigned> k) {
  std::ostringstream out;
  if (!row.known) return "unknown: factorization budget exceeded";
  if (row.smooth) {
    if (!k || row.max_exponent <= *k) {
      out << "n^2-smooth: O_q(n^3 k r log2 q) with r = " << row.distinct;
    } else {
      out << "n^2-smooth, max e_i = " << row.max_exponent << " > k = " << *k
          << ": O_q(n^3 log2 q sum e_i + n^2 sum e_i sqrt p_i)";
    }
  } else {
    const double root = std::sqrt(row.max_prime.convert_to<double>());
    out << "not n^2-smooth: baby-step giant-step on p = " << row.max_prime << " needs ~" << std::llround(std::ceil(root))
        << " steps";
  }
  return out.str();
}

}  // namespace subcode
