#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwidth/containment.hpp"
#include "fwidth/error.hpp"
#include "fwidth/formations.hpp"
#include "fwidth/permutation_table.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

enum class Algorithm { binary, tree, pv };

inline std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::binary: return "binary";
    case Algorithm::tree: return "tree";
    case Algorithm::pv: return "pv";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "binary") return Algorithm::binary;
  if (name == "tree") return Algorithm::tree;
  if (name == "pv") return Algorithm::pv;
  throw Error(Errc::parse, "unknown algorithm '" + std::string(name) + "'");
}

struct FwResult {
  std::size_t s = 0;
  Algorithm algorithm = Algorithm::pv;
  /// A binary (r, s-1)-formation avoiding u, when one was tracked.
  std::optional<BinaryFormation> witness;
  /// Formations (binary, tree) or vectors (pv) alive in each round.
  std::vector<std::size_t> rounds;

  /// The witness is metadata and does not take part in comparisons.
  friend bool operator==(const FwResult& a, const FwResult& b) {
    return a.s == b.s && a.algorithm == b.algorithm && a.rounds == b.rounds;
  }
};

struct BinaryOptions {
  std::size_t s_cap = 20;
  std::size_t max_alphabet = 3;
};

/// Reference algorithm: the smallest s such that every canonical binary
/// (r, s)-formation contains u. Exponential in s; intended as an oracle.
inline FwResult fw_binary(const Sequence& u, const BinaryOptions& opts = {}) {
  FwResult result{0, Algorithm::binary, std::nullopt, {}};
  if (u.empty()) return result;
  const std::size_t r = u.alphabet_size();
  if (r > opts.max_alphabet) {
    throw Error(Errc::cap_exceeded, "binary algorithm limited to " + std::to_string(opts.max_alphabet) + " letters");
  }
  const auto& table = shared_table(r);
  std::optional<BinaryFormation> avoider = BinaryFormation(r, 0, 0);
  for (std::size_t s = 1; s <= std::min(opts.s_cap, kMaxBlocks); ++s) {
    std::optional<BinaryFormation> first_avoider;
    std::size_t avoiding = 0;
    for (const BinaryFormation f : all_binary_formations(r, s)) {
      if (!contains_isomorphic(materialize(f).view(), u, table)) {
        if (!first_avoider) first_avoider = f;
        ++avoiding;
      }
    }
    result.rounds.push_back(avoiding);
    if (avoiding == 0) {
      result.s = s;
      result.witness = avoider;
      return result;
    }
    avoider = first_avoider;
  }
  throw Error(Errc::cap_exceeded, "binary algorithm passed s_cap = " + std::to_string(opts.s_cap));
}

/// Walks the tree of canonical binary formations level by level, expanding
/// only formations that still avoid u.
inline FwResult fw_tree(const Sequence& u) {
  FwResult result{0, Algorithm::tree, std::nullopt, {}};
  if (u.empty()) return result;
  const std::size_t r = u.alphabet_size();
  const auto& table = shared_table(r);

  std::vector<BinaryFormation> level{BinaryFormation(r, 1, 1)};
  std::optional<BinaryFormation> avoider = BinaryFormation(r, 0, 0);
  for (std::size_t s = 1;; ++s) {
    result.rounds.push_back(level.size());
    std::vector<BinaryFormation> next;
    for (const auto& f : level) {
      if (contains_isomorphic(materialize(f).view(), u, table)) continue;
      if (next.empty()) avoider = f;
      if (s == kMaxBlocks) throw Error(Errc::cap_exceeded, "formation tree deeper than 63 blocks");
      next.push_back(f.child(true));
      next.push_back(f.child(false));
    }
    if (next.empty()) {
      result.s = s;
      result.witness = avoider;
      return result;
    }
    level = std::move(next);
  }
}

struct PvOptions {
  /// Drop any vector that entrywise dominates another one in the same round.
  bool dominance_pruning = false;
  /// Stop once the round count would pass this value; see fw_pv_at_most.
  std::optional<std::size_t> limit;
};

namespace detail {

// Flat storage of same-width match vectors plus the orientation bits of one
// formation each vector summarizes.
struct VectorFrontier {
  std::size_t width = 0;
  std::vector<std::uint16_t> data;
  std::vector<std::uint64_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::span<const std::uint16_t> at(std::size_t i) const noexcept { return {data.data() + i * width, width}; }
  std::span<std::uint16_t> grow(std::uint64_t formation_bits) {
    data.resize(data.size() + width);
    bits.push_back(formation_bits);
    return {data.data() + (bits.size() - 1) * width, width};
  }
};

inline bool dominates(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

// Sorts and deduplicates `in` into `out` (keeping the first-generated
// representative of equal vectors), optionally removing dominating vectors.
// `order` is scratch space.
inline void canonicalize(const VectorFrontier& in, bool dominance_pruning, VectorFrontier& out,
                         std::vector<std::size_t>& order) {
  order.resize(in.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
    return std::ranges::lexicographical_compare(in.at(a), in.at(b));
  });
  const auto last = std::unique(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::ranges::equal(in.at(a), in.at(b));
  });
  order.erase(last, order.end());
  if (dominance_pruning) {
    // A vector can only dominate vectors sorted before it.
    std::vector<std::size_t> minimal;
    for (std::size_t i = 0; i < order.size(); ++i) {
      bool dominated_other = false;
      for (std::size_t j = 0; j < i && !dominated_other; ++j) {
        dominated_other = dominates(in.at(order[i]), in.at(order[j]));
      }
      if (!dominated_other) minimal.push_back(order[i]);
    }
    order = std::move(minimal);
  }
  out.width = in.width;
  out.data.clear();
  out.bits.clear();
  for (std::size_t idx : order) {
    auto dst = out.grow(in.bits[idx]);
    std::ranges::copy(in.at(idx), dst.begin());
  }
}

}  // namespace detail

/// Match-vector algorithm: one r!-entry vector per class of formations,
/// extended block by block. The answer is the number of rounds until every
/// vector has a complete entry. Returns nullopt when opts.limit is set and
/// the answer exceeds it.
inline std::optional<FwResult> fw_pv_bounded(const Sequence& u, const PvOptions& opts) {
  FwResult result{0, Algorithm::pv, std::nullopt, {}};
  if (u.empty()) return result;
  const std::size_t r = u.alphabet_size();
  const auto& table = shared_table(r);
  const ExtensionTable ext(u, table);
  const std::size_t n = u.size();

  detail::VectorFrontier frontier{table.size(), {}, {}};
  {
    const std::vector<std::uint16_t> zero(table.size(), 0);
    ext.extend(zero, frontier.grow(1), true);
  }

  detail::VectorFrontier children{table.size(), {}, {}};
  std::vector<std::size_t> order;
  std::optional<BinaryFormation> avoider = BinaryFormation(r, 0, 0);
  for (std::size_t s = 1;; ++s) {
    result.rounds.push_back(frontier.size());
    children.data.clear();
    children.bits.clear();
    bool first_survivor = true;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const auto vec = frontier.at(i);
      if (is_complete(vec, n)) continue;
      if (first_survivor) {
        avoider = s <= kMaxBlocks ? std::optional(BinaryFormation(r, s, frontier.bits[i])) : std::nullopt;
        first_survivor = false;
      }
      const std::uint64_t bits = s < kMaxBlocks ? frontier.bits[i] << 1 : 0;
      ext.extend(vec, children.grow(bits | 1U), true);
      ext.extend(vec, children.grow(bits), false);
    }
    if (children.size() == 0) {
      if (opts.limit && s > *opts.limit) return std::nullopt;
      result.s = s;
      result.witness = avoider;
      return result;
    }
    if (opts.limit && s >= *opts.limit) return std::nullopt;
    detail::canonicalize(children, opts.dominance_pruning, frontier, order);
  }
}

inline FwResult fw_pv(const Sequence& u, const PvOptions& opts = {}) {
  PvOptions unbounded = opts;
  unbounded.limit.reset();
  return *fw_pv_bounded(u, unbounded);
}

/// fw(u) when it is at most `limit`, nullopt otherwise. Stops as soon as the
/// limit is passed, which is what makes prefix pruning cheap.
inline std::optional<std::size_t> fw_pv_at_most(const Sequence& u, std::size_t limit, bool dominance_pruning = true) {
  auto res = fw_pv_bounded(u, PvOptions{dominance_pruning, limit});
  if (!res) return std::nullopt;
  return res->s;
}

inline FwResult run_algorithm(const Sequence& u, Algorithm algo) {
  switch (algo) {
    case Algorithm::binary: return fw_binary(u, BinaryOptions{std::max<std::size_t>(20, u.size()), kMaxAlphabet});
    case Algorithm::tree: return fw_tree(u);
    case Algorithm::pv: return fw_pv(u);
  }
  throw Error(Errc::invalid_argument, "unknown algorithm");
}

/// Dispatches to one algorithm. With `crosscheck`, also runs pv and tree
/// (and binary when r <= 3 and n <= 8) and throws on any disagreement.
inline FwResult fw(const Sequence& u, Algorithm algo = Algorithm::pv, bool crosscheck = false) {
  FwResult primary = run_algorithm(u, algo);
  if (!crosscheck) return primary;
  std::vector<Algorithm> others{Algorithm::pv, Algorithm::tree};
  if (u.alphabet_size() <= 3 && u.size() <= 8) others.push_back(Algorithm::binary);
  for (Algorithm other : others) {
    if (other == algo) continue;
    const std::size_t s = run_algorithm(u, other).s;
    if (s != primary.s) {
      throw Error(Errc::crosscheck_mismatch, std::string(to_string(algo)) + " gave " + std::to_string(primary.s) +
                                                 ", " + std::string(to_string(other)) + " gave " + std::to_string(s));
    }
  }
  return primary;
}

}  // namespace fwidth
