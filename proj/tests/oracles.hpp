// Independent reference implementations used only by the tests. None of them
// call the routine they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "subcode/field.hpp"
#include "subcode/matrix.hpp"
#include "subcode/message_index.hpp"
#include "subcode/subspace.hpp"

namespace oracle {

using subcode::BaseField;
using subcode::BigInt;
using subcode::ExtField;
using subcode::FieldElement;
using subcode::Fq;
using subcode::Matrix;

// splitmix64, good enough to drive property generators.
struct Gen {
  std::uint64_t state;
  explicit Gen(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  Fq entry(const BaseField& F) { return static_cast<Fq>(below(F.order())); }
  FieldElement element(const ExtField& F) {
    FieldElement a{std::vector<Fq>(F.degree())};
    for (auto& c : a.coeffs) c = entry(F.base());
    return a;
  }
  FieldElement nonzero(const ExtField& F) {
    for (;;) {
      auto a = element(F);
      if (!a.is_zero()) return a;
    }
  }
  Matrix matrix(const BaseField& F, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(F);
    return m;
  }
};

inline BigInt ipow(std::uint64_t b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// min{l : sum_{j=0}^{l} q^{jk} >= i + 1}
inline std::size_t epsilon(const BigInt& i, std::uint64_t q, unsigned k) {
  BigInt sum = 0;
  for (std::size_t l = 0;; ++l) {
    sum += ipow(q, static_cast<unsigned>(k * l));
    if (sum >= i + 1) return l;
  }
}

// Schoolbook polynomial product and remainder, independent of the library's
// field code. Coefficients live in F_p with p prime.
inline FieldElement poly_mulmod_prime(const FieldElement& a, const FieldElement& b, const std::vector<Fq>& modulus,
                                      std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t t = 0; t < k; ++t) prod[d - k + t] = (prod[d - k + t] + (p - modulus[t]) * c) % p;
    if (d == k) break;
  }
  FieldElement out{std::vector<Fq>(k)};
  for (std::size_t i = 0; i < k; ++i) out.coeffs[i] = static_cast<Fq>(prod[i]);
  return out;
}

// Plain triple-loop product and repeated multiplication.
inline Matrix mat_mul(const BaseField& F, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Fq acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc = F.add(acc, F.mul(a(i, t), b(t, j)));
      out(i, j) = acc;
    }
  return out;
}

inline Matrix mat_pow(const BaseField& F, const Matrix& a, std::uint64_t e) {
  Matrix out = Matrix::identity(a.rows());
  for (std::uint64_t i = 0; i < e; ++i) out = mat_mul(F, out, a);
  return out;
}

// Every vector of the row space, by enumerating all coefficient combinations.
inline std::set<std::vector<Fq>> span(const BaseField& F, const Matrix& m) {
  std::set<std::vector<Fq>> out;
  std::vector<Fq> coeffs(m.rows(), 0);
  for (;;) {
    std::vector<Fq> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = F.add(v[c], F.mul(coeffs[r], m(r, c)));
    out.insert(v);
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == F.order()) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
  }
  return out;
}

inline std::size_t log_q(std::size_t count, std::size_t q) {
  std::size_t d = 0;
  while (count > 1) {
    count /= q;
    ++d;
  }
  return d;
}

inline std::size_t intersection_dim(const BaseField& F, const Matrix& a, const Matrix& b) {
  const auto sa = span(F, a), sb = span(F, b);
  std::size_t common = 0;
  for (const auto& v : sa) common += sb.count(v);
  return log_q(common, F.order());
}

inline std::size_t dim(const BaseField& F, const Matrix& a) { return log_q(span(F, a).size(), F.order()); }

// All normalized points of the projective space over F, sorted by the
// lexicographic order of their labels. Position in this list is ind.
inline std::vector<std::vector<FieldElement>> sorted_points(const ExtField& F, std::size_t m) {
  const auto size = static_cast<std::uint64_t>(F.size());
  std::vector<std::vector<std::uint64_t>> labels;
  std::vector<std::uint64_t> cur(m, 0);
  for (;;) {
    auto lead = std::find_if(cur.begin(), cur.end(), [](std::uint64_t x) { return x != 0; });
    if (lead != cur.end() && *lead == 1) labels.push_back(cur);
    std::size_t i = m;
    while (i > 0 && ++cur[i - 1] == size) cur[--i] = 0;
    if (i == 0) break;
  }
  std::sort(labels.begin(), labels.end());
  std::vector<std::vector<FieldElement>> out;
  for (const auto& l : labels) {
    std::vector<FieldElement> pt;
    for (auto x : l) pt.push_back(F.from_label(x));
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace oracle
