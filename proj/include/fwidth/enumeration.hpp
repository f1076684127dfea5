#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fwidth/containment.hpp"
#include "fwidth/error.hpp"
#include "fwidth/fw.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

/// All normalized sequences with formation width x and alternation length
/// x+1. Since one block matches at most r letters, fw(u) >= ceil(n/r), so
/// r*x bounds the length of any member.
struct EnumerationQuery {
  std::size_t x = 1;
  std::size_t r = 3;
  std::optional<std::size_t> max_len;
  bool require_exact_alphabet = true;
  /// Uses the dominance-pruned match-vector frontier for the prefix checks.
  bool dominance_pruning = true;

  std::size_t length_cap() const { return max_len.value_or(r * x); }
};

namespace detail {

struct DfsNode {
  Sequence prefix;
  AlternationTracker alternation;
};

class FwAltSearch {
 public:
  explicit FwAltSearch(const EnumerationQuery& q) : q_(q), cap_(q.length_cap()) {}

  // Visits the children of `node`; accepted sequences go to `out`. When
  // `frontier_depth` is reached the child is parked in `parked` instead of
  // being expanded.
  void expand(const DfsNode& node, std::vector<Sequence>& out, std::vector<DfsNode>* parked,
              std::size_t frontier_depth) const {
    if (node.prefix.size() >= cap_) return;
    const std::size_t distinct = node.prefix.alphabet_size();
    const std::size_t top = std::min(distinct, q_.r - 1);
    for (std::size_t c = 0; c <= top; ++c) {
      DfsNode child = node;
      child.prefix.push_back(static_cast<Letter>(c));
      child.alternation.push(static_cast<Letter>(c));
      const std::size_t alt = child.alternation.length();
      if (alt > q_.x + 1) continue;
      // Alternation grows by at most one per appended letter.
      if (alt + (cap_ - child.prefix.size()) < q_.x + 1) continue;
      const auto width = fw_pv_at_most(child.prefix, q_.x, q_.dominance_pruning);
      if (!width) continue;
      if (*width == q_.x && alt == q_.x + 1 &&
          (!q_.require_exact_alphabet || child.prefix.alphabet_size() == q_.r)) {
        out.push_back(child.prefix);
      }
      if (parked != nullptr && child.prefix.size() == frontier_depth) {
        parked->push_back(std::move(child));
      } else {
        expand(child, out, parked, frontier_depth);
      }
    }
  }

  DfsNode root() const { return DfsNode{Sequence{}, AlternationTracker(q_.r)}; }

 private:
  EnumerationQuery q_;
  std::size_t cap_;
};

}  // namespace detail

/// Depth-first search over normalized words, pruning any prefix whose
/// width exceeds x or whose alternation length exceeds x+1 (both are
/// monotone under appending). Output is sorted by length, then
/// lexicographically, and does not depend on `threads`.
inline std::vector<Sequence> enumerate_fw_alt(const EnumerationQuery& q, std::size_t threads = 1) {
  if (q.x < 1) throw Error(Errc::invalid_argument, "x must be at least 1");
  if (q.r < 2) throw Error(Errc::invalid_argument, "r must be at least 2");
  if (q.r > kMaxAlphabet) throw Error(Errc::alphabet_cap, "r exceeds " + std::to_string(kMaxAlphabet));

  const detail::FwAltSearch search(q);
  std::vector<Sequence> out;
  if (threads <= 1) {
    search.expand(search.root(), out, nullptr, 0);
  } else {
    constexpr std::size_t kSplitDepth = 6;
    std::vector<detail::DfsNode> parked;
    search.expand(search.root(), out, &parked, kSplitDepth);
    std::vector<std::vector<Sequence>> partial(threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = next++; i < parked.size(); i = next++) {
          search.expand(parked[i], partial[t], nullptr, 0);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  }
  std::ranges::sort(out, [](const Sequence& a, const Sequence& b) { return shortlex_less(a, b); });
  return out;
}

/// Concatenation of abc (for '1') and acb (for '0') over letters 0, 1, 2.
inline Sequence bits_to_sequence(std::string_view bits) {
  if (bits.empty()) throw Error(Errc::parse, "empty bit string");
  if (bits.front() != '1') throw Error(Errc::parse, "bit string must start with 1");
  Word out;
  for (char ch : bits) {
    if (ch == '1') {
      out.insert(out.end(), {0, 1, 2});
    } else if (ch == '0') {
      out.insert(out.end(), {0, 2, 1});
    } else {
      throw Error(Errc::parse, "bit string must contain only 0 and 1");
    }
  }
  return Sequence::from_normalized(std::move(out));
}

struct AbcAcbRecord {
  std::string bits;
  Sequence sequence;
  std::size_t fw = 0;

  friend bool operator==(const AbcAcbRecord&, const AbcAcbRecord&) = default;
};

/// All 2^(t-1) abc/acb concatenations with t blocks, in increasing bit
/// order. With `filter`, keeps only those with fw = 2t-1, which is exactly
/// alternation length minus one (every such word has alternation length 2t).
inline std::vector<AbcAcbRecord> enumerate_abc_acb(std::size_t t, bool filter) {
  if (t < 1) throw Error(Errc::invalid_argument, "t must be at least 1");
  if (t > kMaxBlocks) throw Error(Errc::cap_exceeded, "t exceeds 63");
  std::vector<AbcAcbRecord> out;
  const std::uint64_t first = std::uint64_t{1} << (t - 1);
  for (std::uint64_t value = first; value < (first << 1); ++value) {
    std::string bits;
    for (std::size_t i = t; i-- > 0;) bits.push_back(((value >> i) & 1U) ? '1' : '0');
    Sequence u = bits_to_sequence(bits);
    if (filter) {
      const auto width = fw_pv_at_most(u, 2 * t - 1);
      if (!width || *width != 2 * t - 1 || alternation_length(u) != 2 * t) continue;
      out.push_back(AbcAcbRecord{std::move(bits), std::move(u), *width});
    } else {
      const std::size_t width = fw_pv(u).s;
      out.push_back(AbcAcbRecord{std::move(bits), std::move(u), width});
    }
  }
  return out;
}

}  // namespace fwidth
