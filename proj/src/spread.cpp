#include "subcode/spread.hpp"

#include <algorithm>
#include <sstream>

#include "subcode/error.hpp"

namespace subcode {

std::string_view to_string(Convention c) noexcept { return c == Convention::adhoc ? "adhoc" : "enum"; }

Convention parse_convention(std::string_view text) {
  if (text == "adhoc") return Convention::adhoc;
  if (text == "enum" || text == "enumerative") return Convention::enumerative;
  fail(ErrorKind::usage, "unknown convention '" + std::string(text) + "' (expected adhoc or enum)");
}

SpreadCode::SpreadCode(FieldTower tower, std::size_t m) : tower_(std::move(tower)), m_(m) {
  require(tower_.base && tower_.ext, "spread code needs a field tower");
  require(m >= 1, "spread code needs m >= 1");
}

BigInt SpreadCode::size() const {
  const BigInt qk = ext().size();
  return (boost::multiprecision::pow(qk, static_cast<unsigned>(m_)) - 1) / (qk - 1);
}

MessageIndex SpreadCode::message(const BigInt& value) const { return MessageIndex::from_integer(value, q(), n()); }

void SpreadCode::check_message(const MessageIndex& i) const {
  if (i.to_integer() >= size()) fail(ErrorKind::usage, "message exceeds code size");
}

MessageIndex SpreadCode::power_sum(std::size_t l) const {
  std::vector<std::uint32_t> digits(std::max(n(), l * k() + 1), 0);
  for (std::size_t j = 0; j < l; ++j) digits[j * k()] = 1;
  return MessageIndex::from_digits(q(), std::move(digits));
}

std::size_t SpreadCode::epsilon(const MessageIndex& index) const {
  const MessageIndex i = index.rebased(q());
  check_message(i);
  const std::size_t len = i.significant_length();
  if (len == 0) return 0;
  // i has len digits, so q^(len-1) <= i < q^len.
  const std::size_t top = len - 1;
  if (top % k() != 0) return (top + k() - 1) / k();
  // sum_{j=0}^{t} q^{jk} - 1 has digit 1 at k, 2k, ..., tk and 0 elsewhere.
  const std::size_t t = top / k();
  std::vector<std::uint32_t> threshold(len, 0);
  for (std::size_t j = 1; j <= t; ++j) threshold[j * k()] = 1;
  return i > MessageIndex::from_digits(q(), std::move(threshold)) ? t + 1 : t;
}

ProjPoint SpreadCode::f_map(const MessageIndex& index) const {
  const MessageIndex i = index.rebased(q());
  const std::size_t eps = epsilon(i);
  const MessageIndex rest = i - power_sum(eps);
  std::vector<FieldElement> coords(m_ - eps - 1, ext().zero());
  coords.push_back(ext().one());
  for (auto& u : phi_adic_inv(ext(), rest, eps)) coords.push_back(std::move(u));
  return ProjPoint(ext(), std::move(coords));
}

MessageIndex SpreadCode::f_inv(const ProjPoint& pt) const {
  require(pt.size() == m_, "point has the wrong number of coordinates");
  const std::size_t eps = m_ - pt.leading() - 1;
  const auto tail = pt.coords().subspan(m_ - eps);
  return (phi_adic(ext(), tail) + power_sum(eps)).padded(n());
}

BigInt SpreadCode::enu(std::span<const FieldElement> prefix) const {
  require(prefix.size() <= m_, "enu prefix longer than m");
  auto it = std::find_if(prefix.begin(), prefix.end(), [](const FieldElement& a) { return !a.is_zero(); });
  for (const auto& a : prefix) ext().check(a);
  const BigInt qk = ext().size();
  const BigInt rest = boost::multiprecision::pow(qk, static_cast<unsigned>(m_ - prefix.size()));
  if (it == prefix.end()) return (rest - 1) / (qk - 1);
  require(*it == ext().one(), "enu prefix is not normalized");
  return rest;
}

MessageIndex SpreadCode::ind(const ProjPoint& pt) const {
  require(pt.size() == m_, "point has the wrong number of coordinates");
  const std::size_t eps = m_ - pt.leading() - 1;
  return (bar_phi(pt.coords().subspan(m_ - eps)) + power_sum(eps)).padded(n());
}

ProjPoint SpreadCode::ind_inv(const MessageIndex& index) const {
  const MessageIndex i = index.rebased(q());
  const std::size_t eps = epsilon(i);
  auto tail = phi_adic_inv(ext(), i - power_sum(eps), eps);
  std::reverse(tail.begin(), tail.end());
  std::vector<FieldElement> coords(m_ - eps - 1, ext().zero());
  coords.push_back(ext().one());
  for (auto& u : tail) coords.push_back(std::move(u));
  return ProjPoint(ext(), std::move(coords));
}

MessageIndex SpreadCode::bar_phi(std::span<const FieldElement> tail) const {
  std::vector<FieldElement> reversed(tail.rbegin(), tail.rend());
  return phi_adic(ext(), reversed);
}

Subspace SpreadCode::enc1(const MessageIndex& i) const { return des(ext(), f_map(i)); }

MessageIndex SpreadCode::retrieve1(const Subspace& u) const {
  if (u.ambient() != n()) fail(ErrorKind::not_codeword, "not a spread codeword");
  return f_inv(des_inv(ext(), u));
}

Subspace SpreadCode::enc1_bar(const MessageIndex& i) const { return des(ext(), ind_inv(i)); }

MessageIndex SpreadCode::retrieve_enum(const Subspace& u) const {
  if (u.ambient() != n()) fail(ErrorKind::not_codeword, "not a spread codeword");
  return ind(des_inv(ext(), u));
}

Subspace SpreadCode::encode(const MessageIndex& i, Convention c) const {
  return c == Convention::adhoc ? enc1(i) : enc1_bar(i);
}

MessageIndex SpreadCode::retrieve(const Subspace& u, Convention c) const {
  return c == Convention::adhoc ? retrieve1(u) : retrieve_enum(u);
}

MessageIndex SpreadCode::retrieve_from_vector(std::span<const Fq> v, Convention c) const {
  require(v.size() == n(), "vector length does not match n");
  const ProjPoint pt = normalize_point(ext(), lift_vector(ext(), v));
  return c == Convention::adhoc ? f_inv(pt) : ind(pt);
}

std::vector<Subspace> SpreadCode::codebook(Convention c, std::size_t limit) const {
  const BigInt total = size();
  require(total <= limit, "codebook too large to materialize (" + total.str() + " codewords)");
  std::vector<Subspace> out;
  const auto count = static_cast<std::size_t>(total);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(encode(message(i), c));
  return out;
}

std::string SpreadReport::summary() const {
  std::ostringstream out;
  out << (ok ? "spread: ok" : "spread: FAIL") << " (" << actual_size << " codewords, expected " << expected_size
      << "; covered " << covered << " of " << space << " nonzero vectors";
  if (!bad_shape.empty()) out << "; " << bad_shape.size() << " codewords of wrong shape";
  if (!offending_pairs.empty()) out << "; " << offending_pairs.size() << " nontrivially intersecting pairs";
  out << ")";
  return out.str();
}

SpreadReport verify_spread(const BaseField& F, std::span<const Subspace> codebook, std::size_t k, std::size_t n) {
  require(k >= 1 && n >= k, "verify_spread needs 1 <= k <= n");
  SpreadReport report;
  const BigInt q = F.order();
  report.space = boost::multiprecision::pow(q, static_cast<unsigned>(n)) - 1;
  report.expected_size = report.space / (boost::multiprecision::pow(q, static_cast<unsigned>(k)) - 1);
  report.actual_size = codebook.size();
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    if (codebook[i].dim() != k || codebook[i].ambient() != n) report.bad_shape.push_back(i);
    report.covered += boost::multiprecision::pow(q, static_cast<unsigned>(codebook[i].dim())) - 1;
  }
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    for (std::size_t j = i + 1; j < codebook.size(); ++j) {
      if (codebook[i].ambient() != codebook[j].ambient()) continue;
      const std::size_t d = intersection_dim(F, codebook[i].basis(), codebook[j].basis());
      if (d != 0) report.offending_pairs.push_back({i, j, d});
    }
  }
  report.ok = report.bad_shape.empty() && report.offending_pairs.empty() && report.expected_size == report.actual_size &&
              report.covered == report.space;
  return report;
}

}  // namespace subcode
