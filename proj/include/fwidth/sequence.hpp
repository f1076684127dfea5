#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fwidth/error.hpp"

namespace fwidth {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Largest alphabet the permutation machinery accepts (8! = 40320 ranks).
inline constexpr std::size_t kMaxAlphabet = 8;

/// True when the first occurrences of the distinct letters of `word` appear
/// in the order 0, 1, 2, ...
inline bool is_normalized(std::span<const Letter> word) {
  Letter next = 0;
  for (Letter c : word) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

/// A normalized word. Letters first appear in increasing order, so the
/// alphabet is exactly {0, ..., r-1}.
class Sequence {
 public:
  Sequence() = default;

  /// Wraps an already-normalized word; throws Errc::invalid_argument otherwise.
  static Sequence from_normalized(Word letters) {
    if (!is_normalized(letters)) {
      throw Error(Errc::invalid_argument, "word is not normalized");
    }
    return Sequence(std::move(letters));
  }

  const Word& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t alphabet_size() const noexcept { return r_; }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Appends a letter; it must be an existing letter or the next new one.
  void push_back(Letter c) {
    if (c > r_) throw Error(Errc::invalid_argument, "appended letter breaks normalization");
    letters_.push_back(c);
    if (c == r_) ++r_;
  }

  /// Length first, then lexicographic: the order the appendix lists use.
  friend bool shortlex_less(const Sequence& a, const Sequence& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence& a, const Sequence& b) { return a.letters_ <=> b.letters_; }

 private:
  explicit Sequence(Word letters) : letters_(std::move(letters)) {
    for (Letter c : letters_) r_ = std::max<std::size_t>(r_, std::size_t{c} + 1);
  }

  Word letters_;
  std::size_t r_ = 0;
};

/// Renames symbols to 0, 1, 2, ... in order of first appearance.
template <std::ranges::input_range R>
Sequence normalize(R&& raw) {
  using Symbol = std::ranges::range_value_t<R>;
  std::map<Symbol, Letter> names;
  Word out;
  for (const auto& symbol : raw) {
    auto [it, inserted] = names.try_emplace(symbol, static_cast<Letter>(names.size()));
    out.push_back(it->second);
  }
  return Sequence::from_normalized(std::move(out));
}

inline Sequence normalize(std::string_view raw) { return normalize(std::span<const char>(raw.data(), raw.size())); }
inline Sequence normalize(const char* raw) { return normalize(std::string_view(raw)); }

inline Sequence reverse_sequence(const Sequence& u) {
  Word reversed(u.letters().rbegin(), u.letters().rend());
  return normalize(reversed);
}

}  // namespace fwidth
