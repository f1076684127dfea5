#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <string>
#include <vector>

#include "fwidth/error.hpp"
#include "fwidth/permutation_table.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

/// Largest block count a BinaryFormation can hold (one bit per block).
inline constexpr std::size_t kMaxBlocks = 63;

/// A binary (r, s)-formation: s blocks, each the ascending block 0..r-1 or
/// the descending block r-1..0. Block i is stored at bit (s-1-i), so the
/// first block is the most significant bit. The first block is always
/// ascending; every binary formation relabels to one of this form.
class BinaryFormation {
 public:
  BinaryFormation() = default;

  BinaryFormation(std::size_t r, std::size_t s, std::uint64_t bits) : r_(r), s_(s), bits_(bits) {
    if (s > kMaxBlocks) throw Error(Errc::cap_exceeded, "more than 63 blocks");
    if (s < 64 && (bits >> s) != 0) throw Error(Errc::invalid_argument, "orientation bits beyond block count");
    if (s > 0 && !ascending(0)) throw Error(Errc::invalid_argument, "first block must be ascending");
  }

  /// Parses an orientation string such as "1001" (1 = ascending).
  static BinaryFormation from_bits(std::size_t r, std::string_view bits) {
    std::uint64_t value = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') throw Error(Errc::parse, "orientation string must be 0/1");
      value = (value << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return BinaryFormation(r, bits.size(), value);
  }

  std::size_t alphabet_size() const noexcept { return r_; }
  std::size_t blocks() const noexcept { return s_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool ascending(std::size_t block) const noexcept { return (bits_ >> (s_ - 1 - block)) & 1U; }

  BinaryFormation child(bool ascending_block) const {
    return BinaryFormation(r_, s_ + 1, (bits_ << 1) | static_cast<std::uint64_t>(ascending_block));
  }

  std::string bit_string() const {
    std::string out;
    for (std::size_t i = 0; i < s_; ++i) out.push_back(ascending(i) ? '1' : '0');
    return out;
  }

  friend bool operator==(const BinaryFormation&, const BinaryFormation&) = default;

 private:
  std::size_t r_ = 0;
  std::size_t s_ = 0;
  std::uint64_t bits_ = 0;
};

inline Sequence materialize(const BinaryFormation& f) {
  const std::size_t r = f.alphabet_size();
  Word out;
  out.reserve(r * f.blocks());
  for (std::size_t b = 0; b < f.blocks(); ++b) {
    for (std::size_t i = 0; i < r; ++i) {
      out.push_back(static_cast<Letter>(f.ascending(b) ? i : r - 1 - i));
    }
  }
  return Sequence::from_normalized(std::move(out));
}

/// The 2^(s-1) canonical binary (r, s)-formations in increasing bit order.
inline auto all_binary_formations(std::size_t r, std::size_t s) {
  if (s == 0 || s > kMaxBlocks) throw Error(Errc::invalid_argument, "block count must be in 1..63");
  const std::uint64_t first = std::uint64_t{1} << (s - 1);
  const std::uint64_t last = first << 1;
  return std::views::iota(first, last) |
         std::views::transform([r, s](std::uint64_t bits) { return BinaryFormation(r, s, bits); });
}

/// Per-rank prefix match lengths for one formation: entries[rank] is the
/// longest initial segment of pi_rank(u) that is a literal subsequence of
/// the formation.
struct MatchVector {
  std::vector<std::uint16_t> entries;
  std::size_t n = 0;

  friend bool operator==(const MatchVector&, const MatchVector&) = default;
};

/// Greedily extends a matched prefix of pi_rank(u) through one block.
/// Each letter occurs once in a block, so the extension continues exactly
/// while block positions strictly increase.
inline std::size_t extend_prefix_in_block(const Sequence& u, Rank rank, std::size_t k, bool ascending,
                                          const PermutationTable& table) {
  const auto p = table.perm(rank);
  if (k > u.size()) throw Error(Errc::invalid_argument, "matched count exceeds sequence length");
  const std::size_t r = table.alphabet_size();
  int last = -1;
  while (k < u.size()) {
    const int pos = ascending ? p[u[k]] : static_cast<int>(r - 1 - p[u[k]]);
    if (pos <= last) break;
    last = pos;
    ++k;
  }
  return k;
}

inline MatchVector extend_vector(const MatchVector& vec, const Sequence& u, bool ascending,
                                 const PermutationTable& table) {
  if (vec.n != u.size() || vec.entries.size() != table.size()) {
    throw Error(Errc::invalid_argument, "match vector does not belong to this sequence");
  }
  MatchVector out{std::vector<std::uint16_t>(vec.entries.size()), vec.n};
  for (Rank rank = 0; rank < table.size(); ++rank) {
    out.entries[rank] =
        static_cast<std::uint16_t>(extend_prefix_in_block(u, rank, vec.entries[rank], ascending, table));
  }
  return out;
}

inline MatchVector zero_vector(const Sequence& u, const PermutationTable& table) {
  if (u.size() > 0xFFFF) throw Error(Errc::cap_exceeded, "sequence longer than 65535");
  return MatchVector{std::vector<std::uint16_t>(table.size(), 0), u.size()};
}

inline MatchVector initial_vector(const Sequence& u, const PermutationTable& table) {
  if (u.empty()) throw Error(Errc::empty_sequence, "initial vector of an empty sequence");
  if (u.alphabet_size() != table.alphabet_size()) throw Error(Errc::alphabet_mismatch, "table does not match");
  return extend_vector(zero_vector(u, table), u, true, table);
}

inline bool is_complete(std::span<const std::uint16_t> entries, std::size_t n) {
  if (n == 0) return true;
  return std::ranges::any_of(entries, [n](std::uint16_t e) { return e == n; });
}

inline bool is_complete(const MatchVector& vec) { return is_complete(vec.entries, vec.n); }

/// Precomputed block extensions for one sequence: for every rank and
/// matched count k, where the greedy match ends after one ascending or one
/// descending block. Turns extend_prefix_in_block into a table lookup.
class ExtensionTable {
 public:
  ExtensionTable(const Sequence& u, const PermutationTable& table)
      : n_(u.size()), ranks_(table.size()), asc_(ranks_ * (n_ + 1)), desc_(ranks_ * (n_ + 1)) {
    if (u.alphabet_size() != table.alphabet_size()) throw Error(Errc::alphabet_mismatch, "table does not match");
    if (n_ > 0xFFFF) throw Error(Errc::cap_exceeded, "sequence longer than 65535");
    for (Rank rank = 0; rank < ranks_; ++rank) {
      const auto p = table.perm(rank);
      std::uint16_t* asc = asc_.data() + rank * (n_ + 1);
      std::uint16_t* desc = desc_.data() + rank * (n_ + 1);
      asc[n_] = desc[n_] = static_cast<std::uint16_t>(n_);
      for (std::size_t k = n_; k-- > 0;) {
        const bool has_next = k + 1 < n_;
        asc[k] = has_next && p[u[k + 1]] > p[u[k]] ? asc[k + 1] : static_cast<std::uint16_t>(k + 1);
        desc[k] = has_next && p[u[k + 1]] < p[u[k]] ? desc[k + 1] : static_cast<std::uint16_t>(k + 1);
      }
    }
  }

  std::size_t sequence_length() const noexcept { return n_; }
  std::size_t ranks() const noexcept { return ranks_; }

  std::uint16_t extend(Rank rank, std::uint16_t k, bool ascending) const noexcept {
    const std::size_t idx = rank * (n_ + 1) + k;
    return ascending ? asc_[idx] : desc_[idx];
  }

  /// Writes the child of `parent` into `child` (both of length ranks()).
  void extend(std::span<const std::uint16_t> parent, std::span<std::uint16_t> child, bool ascending) const noexcept {
    const auto& ends = ascending ? asc_ : desc_;
    const std::size_t stride = n_ + 1;
    for (Rank rank = 0; rank < ranks_; ++rank) child[rank] = ends[rank * stride + parent[rank]];
  }

 private:
  std::size_t n_;
  std::size_t ranks_;
  std::vector<std::uint16_t> asc_;
  std::vector<std::uint16_t> desc_;
};

}  // namespace fwidth
