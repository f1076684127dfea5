#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fwidth/error.hpp"
#include "fwidth/permutation_table.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

/// pi(u): renames every letter c of u to perm(rank)[c]. The result is in
/// general not normalized.
inline Word apply_permutation(const Sequence& u, Rank rank, const PermutationTable& table) {
  if (u.alphabet_size() > table.alphabet_size()) {
    throw Error(Errc::alphabet_mismatch, "sequence alphabet larger than permutation table");
  }
  const auto p = table.perm(rank);
  Word out;
  out.reserve(u.size());
  for (Letter c : u) out.push_back(p[c]);
  return out;
}

/// True iff `pattern` is obtained from `text` by deleting symbols (greedy
/// leftmost scan).
template <typename T>
bool is_literal_subsequence(std::span<const T> pattern, std::span<const T> text) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size() && k < pattern.size(); ++i) {
    if (text[i] == pattern[k]) ++k;
  }
  return k == pattern.size();
}

inline bool is_literal_subsequence(std::string_view pattern, std::string_view text) {
  return is_literal_subsequence(std::span<const char>(pattern), std::span<const char>(text));
}

inline bool is_literal_subsequence(const Word& pattern, const Word& text) {
  return is_literal_subsequence(std::span<const Letter>(pattern), std::span<const Letter>(text));
}

/// Returns the smallest rank whose application to u is a literal
/// subsequence of `text`, or nullopt when text avoids u. Both `text` and u
/// must use only letters below table.alphabet_size(); when u has fewer
/// letters the ranks still cover every injective renaming.
inline std::optional<Rank> contains_isomorphic(std::span<const Letter> text, const Sequence& u,
                                               const PermutationTable& table) {
  const std::size_t r = table.alphabet_size();
  if (u.alphabet_size() > r) {
    throw Error(Errc::alphabet_mismatch, "pattern has " + std::to_string(u.alphabet_size()) +
                                             " letters, table has " + std::to_string(r));
  }
  for (Letter c : text) {
    if (c >= r) throw Error(Errc::alphabet_mismatch, "text letter outside the table alphabet");
  }
  for (Rank rank = 0; rank < table.size(); ++rank) {
    const auto p = table.perm(rank);
    std::size_t k = 0;
    for (std::size_t i = 0; i < text.size() && k < u.size(); ++i) {
      if (text[i] == p[u[k]]) ++k;
    }
    if (k == u.size()) return rank;
  }
  return std::nullopt;
}

inline std::optional<Rank> contains_isomorphic(const Sequence& text, const Sequence& u,
                                               const PermutationTable& table) {
  return contains_isomorphic(text.view(), u, table);
}

namespace detail {

// Greedy scan of v against u that branches over the image of each new
// letter of v at its first occurrence. Earlier matches do not depend on the
// image of a letter that has not appeared yet, so this covers every
// injection.
inline bool contains_from(const Sequence& u, const Sequence& v, std::size_t vi, std::size_t ui,
                          std::vector<int>& image, std::vector<bool>& used) {
  for (; vi < v.size(); ++vi) {
    const Letter c = v[vi];
    if (image[c] < 0) {
      for (Letter target = 0; target < u.alphabet_size(); ++target) {
        if (used[target]) continue;
        image[c] = target;
        used[target] = true;
        const bool found = contains_from(u, v, vi, ui, image, used);
        used[target] = false;
        image[c] = -1;
        if (found) return true;
      }
      return false;
    }
    while (ui < u.size() && u[ui] != image[c]) ++ui;
    if (ui == u.size()) return false;
    ++ui;
  }
  return true;
}

}  // namespace detail

/// u contains v: some injective renaming of v's letters is a literal
/// subsequence of u.
inline bool contains_general(const Sequence& u, const Sequence& v) {
  if (v.alphabet_size() > u.alphabet_size() || v.size() > u.size()) return false;
  std::vector<int> image(v.alphabet_size(), -1);
  std::vector<bool> used(u.alphabet_size(), false);
  return detail::contains_from(u, v, 0, 0, image, used);
}

/// Incremental longest-alternation tracker over a fixed alphabet capacity.
///
/// For each ordered pair (p, q) it keeps the greedy alternation p q p q ...
/// in the two-letter restriction; greedy is optimal there because runs of
/// one letter collapse to a single symbol.
class AlternationTracker {
 public:
  explicit AlternationTracker(std::size_t capacity)
      : r_(capacity), count_(capacity * capacity, 0), expect_first_(capacity * capacity, true) {}

  void push(Letter c) {
    if (c >= r_) throw Error(Errc::invalid_argument, "letter beyond tracker capacity");
    any_ = true;
    for (std::size_t other = 0; other < r_; ++other) {
      if (other == c) continue;
      bump(c, other, true);
      bump(other, c, false);
    }
  }

  std::size_t length() const noexcept { return std::max<std::size_t>(best_, any_ ? 1 : 0); }

 private:
  // Pair (p, q) with c occupying slot p (first) or q (second).
  void bump(std::size_t p, std::size_t q, bool c_is_first) {
    const std::size_t idx = p * r_ + q;
    if (expect_first_[idx] == c_is_first) {
      ++count_[idx];
      expect_first_[idx] = !expect_first_[idx];
      best_ = std::max(best_, count_[idx]);
    }
  }

  std::size_t r_;
  std::vector<std::size_t> count_;
  std::vector<bool> expect_first_;
  std::size_t best_ = 0;
  bool any_ = false;
};

/// Longest alternation a b a b ... on two distinct letters contained in u;
/// a single letter counts as length 1, the empty sequence has length 0.
inline std::size_t alternation_length(const Sequence& u) {
  AlternationTracker tracker(u.alphabet_size());
  for (Letter c : u) tracker.push(c);
  return tracker.length();
}

}  // namespace fwidth
