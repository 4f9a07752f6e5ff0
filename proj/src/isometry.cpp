#include "subcode/isometry.hpp"

#include <algorithm>
#include <unordered_set>

#include "subcode/error.hpp"

namespace subcode {
namespace {

std::vector<Fq> frobenius(const BaseField& F, std::span<const Fq> v, unsigned s) {
  std::vector<Fq> out(v.begin(), v.end());
  if (s != 0)
    for (auto& x : out) x = F.frobenius(x, s);
  return out;
}

Matrix frobenius(const BaseField& F, const Matrix& m, unsigned s) {
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = F.frobenius(m(r, c), s);
  return out;
}

bool same_set(std::span<const Subspace> a, std::span<const Subspace> b) {
  if (a.size() != b.size()) return false;
  std::unordered_set<Subspace, SubspaceHash> set(b.begin(), b.end());
  return set.size() == b.size() && std::all_of(a.begin(), a.end(), [&](const Subspace& u) { return set.count(u) == 1; });
}

}  // namespace

void check_isometry(const BaseField& F, const SemiLinearIsometry& iso) {
  require(iso.a.rows() == iso.a.cols() && iso.a.rows() > 0, "isometry matrix must be square");
  check_entries(F, iso.a);
  require(inverse(F, iso.a).has_value(), "isometry matrix is not invertible");
  require(iso.frobenius_power < F.degree(), "frobenius power must be below the degree of F_q over F_p");
}

Subspace apply_isometry(const BaseField& F, const Subspace& u, const SemiLinearIsometry& iso) {
  check_isometry(F, iso);
  require(u.ambient() == iso.a.rows(), "subspace and isometry sizes differ");
  if (u.dim() == 0) return u;
  return Subspace::row_space(F, frobenius(F, multiply(F, u.basis(), iso.a), iso.frobenius_power));
}

std::vector<Fq> apply_isometry(const BaseField& F, std::span<const Fq> v, const SemiLinearIsometry& iso) {
  require(v.size() == iso.a.rows(), "vector and isometry sizes differ");
  return frobenius(F, multiply(F, v, iso.a), iso.frobenius_power);
}

std::vector<Fq> invert_isometry(const BaseField& F, std::span<const Fq> v, const SemiLinearIsometry& iso) {
  require(v.size() == iso.a.rows(), "vector and isometry sizes differ");
  const auto a_inv = inverse(F, iso.a);
  require(a_inv.has_value(), "isometry matrix is not invertible");
  const unsigned back = iso.frobenius_power == 0 ? 0 : F.degree() - iso.frobenius_power;
  return multiply(F, frobenius(F, v, back), *a_inv);
}

HybridEncoder::HybridEncoder(std::shared_ptr<const BaseField> base, SemiLinearIsometry iso, Encode encode,
                             RetrieveVector retrieve)
    : base_(std::move(base)), iso_(std::move(iso)), encode_(std::move(encode)), retrieve_(std::move(retrieve)) {
  require(base_ != nullptr, "hybrid encoder needs a base field");
  check_isometry(*base_, iso_);
  a_inv_ = *inverse(*base_, iso_.a);
}

Subspace HybridEncoder::encode(const BigInt& i) const { return apply_isometry(*base_, encode_(i), iso_); }

BigInt HybridEncoder::retrieve(const Subspace& received) const {
  require(received.ambient() == iso_.a.rows(), "codeword and isometry sizes differ");
  if (received.dim() == 0) fail(ErrorKind::not_codeword, "the zero subspace is not a codeword");
  return retrieve_(invert_isometry(*base_, received.basis().row(0), iso_));
}

void HybridEncoder::check_maps_onto(std::span<const Subspace> c1, std::span<const Subspace> c2) const {
  std::vector<Subspace> image;
  image.reserve(c1.size());
  for (const auto& u : c1) image.push_back(apply_isometry(*base_, u, iso_));
  if (!same_set(image, c2)) fail(ErrorKind::consistency, "isometry does not map the first code onto the second");
}

std::optional<Matrix> find_linear_isometry(const BaseField& F, std::span<const Subspace> c1,
                                           std::span<const Subspace> c2) {
  require(F.order() == 2, "isometry search is limited to q = 2");
  require(!c1.empty() && c1.size() == c2.size(), "codes must be nonempty and of equal size");
  const std::size_t n = c1.front().ambient();
  require(n >= 1 && n <= 4, "isometry search is limited to n <= 4");
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n * n; ++i) a(i / n, i % n) = static_cast<Fq>((bits >> (n * n - 1 - i)) & 1u);
    if (!inverse(F, a)) continue;
    std::vector<Subspace> image;
    image.reserve(c1.size());
    for (const auto& u : c1) image.push_back(Subspace::row_space(F, multiply(F, u.basis(), a)));
    if (same_set(image, c2)) return a;
  }
  return std::nullopt;
}

}  // namespace subcode
