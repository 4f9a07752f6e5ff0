#include "subcode/channel.hpp"

#include "subcode/error.hpp"

namespace subcode {
namespace {

Fq draw(const BaseField& F, std::mt19937_64& rng) { return static_cast<Fq>(rng() % F.order()); }

}  // namespace

Subspace operator_channel(const BaseField& F, const Subspace& u, std::size_t erasures, std::size_t insertions,
                          std::mt19937_64& rng) {
  const std::size_t n = u.ambient();
  const std::size_t keep = erasures >= u.dim() ? 0 : u.dim() - erasures;
  Matrix kept(0, n);
  while (kept.rows() < keep) {
    std::vector<Fq> coeffs(u.dim());
    for (auto& c : coeffs) c = draw(F, rng);
    const auto v = multiply(F, coeffs, u.basis());
    Matrix trial = kept;
    trial.append_row(v);
    if (rank(F, trial) == trial.rows()) kept = std::move(trial);
  }
  const std::size_t target = std::min(n, keep + insertions);
  while (kept.rows() < target) {
    std::vector<Fq> v(n);
    for (auto& c : v) c = draw(F, rng);
    Matrix trial = kept;
    trial.append_row(v);
    if (rank(F, trial) == trial.rows()) kept = std::move(trial);
  }
  return kept.rows() == 0 ? Subspace(n) : Subspace::row_space(F, kept);
}

DecodeResult decode_min_distance(const BaseField& F, std::span<const Subspace> codebook, const Subspace& r) {
  require(!codebook.empty(), "cannot decode with an empty codebook");
  DecodeResult out;
  out.distance = SIZE_MAX;
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    const std::size_t d = subspace_distance(F, codebook[i], r);
    if (d < out.distance) {
      out.distance = d;
      out.ties = {i};
    } else if (d == out.distance) {
      out.ties.push_back(i);
    }
  }
  if (out.ties.size() == 1) out.index = out.ties.front();
  return out;
}

SimulationReport simulate(const LoadedCode& code, std::optional<Convention> c, std::span<const Subspace> codebook,
                          const BigInt& message, std::size_t erasures, std::size_t insertions, std::uint64_t seed) {
  SimulationReport rep;
  rep.seed = seed;
  rep.message = message;
  rep.erasures = erasures;
  rep.insertions = insertions;
  rep.sent = encode_message(code, message, c);
  std::mt19937_64 rng(seed);
  rep.received = operator_channel(code.base(), rep.sent, erasures, insertions, rng);
  rep.distance_sent_received = subspace_distance(code.base(), rep.sent, rep.received);
  rep.decoded = decode_min_distance(code.base(), codebook, rep.received);
  if (rep.decoded.index) {
    rep.retrieved = retrieve_message(code, codebook[*rep.decoded.index], c);
    rep.success = *rep.retrieved == message;
  }
  return rep;
}

}  // namespace subcode
