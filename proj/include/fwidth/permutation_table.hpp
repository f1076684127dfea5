#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fwidth/error.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

using Rank = std::size_t;

inline std::size_t factorial(std::size_t r) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= r; ++i) f *= i;
  return f;
}

/// All r! orderings of 0..r-1 indexed by lexicographic rank.
///
/// perm(rank)[i] is the image of letter i, so applying a rank to a word
/// renames each letter c to perm(rank)[c]. Rank 0 is the identity and rank
/// r!-1 is its reverse.
class PermutationTable {
 public:
  explicit PermutationTable(std::size_t r) : r_(r), count_(0) {
    if (r > kMaxAlphabet) {
      throw Error(Errc::alphabet_cap,
                  "alphabet size " + std::to_string(r) + " exceeds " + std::to_string(kMaxAlphabet));
    }
    count_ = factorial(r);
    perms_.reserve(count_ * r_);
    Word p(r_);
    std::iota(p.begin(), p.end(), Letter{0});
    do {
      perms_.insert(perms_.end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));

    reversal_.resize(count_);
    for (Rank k = 0; k < count_; ++k) {
      Word rev(perm(k).rbegin(), perm(k).rend());
      reversal_[k] = rank_of(rev);
    }
  }

  std::size_t alphabet_size() const noexcept { return r_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const Letter> perm(Rank rank) const {
    check(rank);
    return {perms_.data() + rank * r_, r_};
  }

  /// Position of `letter` inside the ascending block once `rank` is applied,
  /// i.e. the renamed letter itself.
  Letter position(Rank rank, Letter letter) const noexcept { return perms_[rank * r_ + letter]; }

  Rank reversal(Rank rank) const {
    check(rank);
    return reversal_[rank];
  }

  /// Lehmer-code rank of a permutation of 0..r-1.
  Rank rank_of(std::span<const Letter> p) const {
    if (p.size() != r_) throw Error(Errc::invalid_argument, "permutation has wrong length");
    std::vector<bool> used(r_, false);
    Rank rank = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      if (p[i] >= r_ || used[p[i]]) throw Error(Errc::invalid_argument, "not a permutation");
      std::size_t smaller_unused = 0;
      for (Letter c = 0; c < p[i]; ++c) smaller_unused += used[c] ? 0 : 1;
      used[p[i]] = true;
      rank += smaller_unused * factorial(r_ - 1 - i);
    }
    return rank;
  }

  /// Inverse of rank_of, decoded directly from the factorial number system.
  Word unrank(Rank rank) const {
    check(rank);
    Word items(r_);
    std::iota(items.begin(), items.end(), Letter{0});
    Word out;
    out.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      const std::size_t f = factorial(r_ - 1 - i);
      const std::size_t idx = rank / f;
      rank %= f;
      out.push_back(items[idx]);
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
  }

  Rank identity() const noexcept { return 0; }

 private:
  void check(Rank rank) const {
    if (rank >= count_) {
      throw Error(Errc::rank_out_of_range,
                  "rank " + std::to_string(rank) + " with r! = " + std::to_string(count_));
    }
  }

  std::size_t r_;
  std::size_t count_;
  Word perms_;
  std::vector<Rank> reversal_;
};

/// Process-wide table for alphabet size r, built on first use.
inline const PermutationTable& shared_table(std::size_t r) {
  if (r > kMaxAlphabet) {
    throw Error(Errc::alphabet_cap,
                "alphabet size " + std::to_string(r) + " exceeds " + std::to_string(kMaxAlphabet));
  }
  static std::array<std::once_flag, kMaxAlphabet + 1> flags;
  static std::array<std::unique_ptr<PermutationTable>, kMaxAlphabet + 1> tables;
  std::call_once(flags[r], [r] { tables[r] = std::make_unique<PermutationTable>(r); });
  return *tables[r];
}

}  // namespace fwidth
