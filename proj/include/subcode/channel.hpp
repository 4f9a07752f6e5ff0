#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "subcode/codespec.hpp"

namespace subcode {

/// Operator channel: keep a random (dim - erasures)-dimensional subspace of u,
/// then adjoin `insertions` random vectors from outside the current span.
Subspace operator_channel(const BaseField& F, const Subspace& u, std::size_t erasures, std::size_t insertions,
                          std::mt19937_64& rng);

struct DecodeResult {
  std::optional<std::size_t> index;  // empty on a tie
  std::size_t distance = 0;
  std::vector<std::size_t> ties;
};

/// Exhaustive minimum subspace distance decoding.
DecodeResult decode_min_distance(const BaseField& F, std::span<const Subspace> codebook, const Subspace& r);

struct SimulationReport {
  std::uint64_t seed = 0;
  BigInt message;
  std::size_t erasures = 0, insertions = 0;
  Subspace sent, received;
  std::size_t distance_sent_received = 0;
  DecodeResult decoded;
  std::optional<BigInt> retrieved;
  bool success = false;
};

SimulationReport simulate(const LoadedCode& code, std::optional<Convention> c, std::span<const Subspace> codebook,
                          const BigInt& message, std::size_t erasures, std::size_t insertions, std::uint64_t seed);

}  // namespace subcode
