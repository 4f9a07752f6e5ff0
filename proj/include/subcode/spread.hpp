#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "subcode/field.hpp"
#include "subcode/message_index.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

/// Which message map a spread encoder or retriever uses. `adhoc` is
/// des o f with the plain q^k-adic expansion; `enumerative` is des o ind^{-1},
/// i.e. f with the block order of the expansion reversed. The two assign
/// different messages to the same codeword.
enum class Convention { adhoc, enumerative };

std::string_view to_string(Convention c) noexcept;
Convention parse_convention(std::string_view text);

/// Desarguesian spread in G_q(k, n), n = k m, built from F_{q^k} = F_q[alpha].
/// Nothing is enumerated unless codebook() is called.
class SpreadCode {
 public:
  SpreadCode(FieldTower tower, std::size_t m);

  const FieldTower& tower() const noexcept { return tower_; }
  const BaseField& base() const noexcept { return *tower_.base; }
  const ExtField& ext() const noexcept { return *tower_.ext; }
  std::uint32_t q() const noexcept { return tower_.q(); }
  std::size_t k() const noexcept { return tower_.k(); }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return k() * m_; }

  /// (q^n - 1) / (q^k - 1)
  BigInt size() const;

  /// Smallest l with sum_{j=0}^{l} q^{jk} >= i + 1, read off the digit vector.
  std::size_t epsilon(const MessageIndex& i) const;
  /// sum_{j=0}^{l-1} q^{jk} as an n-digit index.
  MessageIndex power_sum(std::size_t l) const;

  ProjPoint f_map(const MessageIndex& i) const;
  MessageIndex f_inv(const ProjPoint& pt) const;

  /// Number of points whose normalized form starts with `prefix`.
  BigInt enu(std::span<const FieldElement> prefix) const;
  /// Lexicographic index of a point (closed form).
  MessageIndex ind(const ProjPoint& pt) const;
  ProjPoint ind_inv(const MessageIndex& i) const;
  /// phi_adic applied to the tail read back to front.
  MessageIndex bar_phi(std::span<const FieldElement> tail) const;

  Subspace enc1(const MessageIndex& i) const;
  MessageIndex retrieve1(const Subspace& u) const;
  /// des o ind^{-1}, the encoder matching retrieve_enum.
  Subspace enc1_bar(const MessageIndex& i) const;
  MessageIndex retrieve_enum(const Subspace& u) const;

  Subspace encode(const MessageIndex& i, Convention c) const;
  MessageIndex retrieve(const Subspace& u, Convention c) const;
  /// Retrieval from a single nonzero vector of a codeword.
  MessageIndex retrieve_from_vector(std::span<const Fq> v, Convention c) const;

  /// All codewords in message order under `c`. Usage error past `limit`.
  std::vector<Subspace> codebook(Convention c = Convention::adhoc, std::size_t limit = 1u << 20) const;

  MessageIndex message(const BigInt& value) const;

 private:
  void check_message(const MessageIndex& i) const;

  FieldTower tower_;
  std::size_t m_;
};

struct SpreadReport {
  bool ok = false;
  BigInt expected_size;
  std::size_t actual_size = 0;
  /// Codewords with the wrong dimension or ambient space.
  std::vector<std::size_t> bad_shape;
  /// Pairs (i, j, dim of intersection) that intersect nontrivially.
  struct Pair {
    std::size_t first, second, intersection;
  };
  std::vector<Pair> offending_pairs;
  /// sum over codewords of (q^dim - 1) against q^n - 1.
  BigInt covered;
  BigInt space;

  std::string summary() const;
};

/// Checks that `codebook` is a spread in G_q(k, n).
SpreadReport verify_spread(const BaseField& F, std::span<const Subspace> codebook, std::size_t k, std::size_t n);

}  // namespace subcode
