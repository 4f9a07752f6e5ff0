#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subcode/message_index.hpp"

namespace subcode {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  /// Set when primality of a factor >= 2^64 rests on a fixed-base Miller-Rabin run.
  bool probable = false;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by ascending prime.
using Factorization = std::vector<PrimePower>;

/// Effort cap for factorize(). Trial division runs to `trial_bound`, then
/// Pollard-Brent rho takes over for at most `rho_iterations` steps in total.
struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 50'000'000;
  /// Largest n accepted by smoothness_report().
  unsigned table_limit = 60;

  /// Default budget, with `rho_iterations` overridden by SUBSPACE_FACTOR_BUDGET
  /// when that variable holds a positive integer.
  static FactorBudget from_environment();
};

/// Miller-Rabin with the first twelve prime bases: deterministic below 2^64.
/// `certain` (optional) is cleared for larger inputs.
bool is_prime(const BigInt& n, bool* certain = nullptr);

/// Complete factorization of n >= 1 (1 gives the empty list). Deterministic:
/// rho uses fixed seeds. Throws budget_exceeded when the cap is hit.
Factorization factorize(const BigInt& n, const FactorBudget& budget = FactorBudget::from_environment());

BigInt recombine(const Factorization& factors);

/// All positive divisors, ascending.
std::vector<BigInt> divisors(const Factorization& factors);

/// One row of the q^n - 1 smoothness table.
struct SmoothnessRow {
  unsigned n = 0;
  bool known = true;          // false when the factorization budget ran out
  Factorization factors;
  BigInt max_prime;
  unsigned max_exponent = 0;
  BigInt cost_bound;          // max over i of max(e_i * n, e_i * p_i)
  std::size_t distinct = 0;   // r
  std::uint64_t n_squared = 0;
  bool smooth = false;        // every p_i <= n^2
};

/// Factors q^n - 1 and fills in the table columns.
SmoothnessRow analyze_group_order(std::uint64_t q, unsigned n, const FactorBudget& budget = FactorBudget::from_environment());

/// Rows for n_min <= n <= n_max where q^n - 1 is n^2-smooth. Rows whose
/// factorization exceeded the budget are kept with `known == false`.
/// The default n_min = 6 is the smallest n admitting 3 <= k <= n/2.
std::vector<SmoothnessRow> smoothness_report(std::uint64_t q, unsigned n_max, unsigned n_min = 6,
                                             const FactorBudget& budget = FactorBudget::from_environment());

/// Pohlig-Hellman cost class for a group of order q^n - 1 with code dimension k.
std::string pohlig_hellman_cost_class(const SmoothnessRow& row, std::optional<unsigned> k = std::nullopt);

}  // namespace subcode
