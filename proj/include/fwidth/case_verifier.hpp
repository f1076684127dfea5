#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fwidth/containment.hpp"
#include "fwidth/error.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

/// One case of the (3, 4)-formation coverage argument for the families
/// with fw = 2t+3. Witnesses and exceptions are concrete words over the
/// fixed letters x, y, z; containment here is literal.
struct CaseSpec {
  int id = 0;
  /// Family in the reduced form the coverage argument treats, e.g.
  /// "(a b c)^t b a c a b c".
  std::string family;
  std::vector<std::string> witnesses;
  std::vector<std::string> claimed_exceptions;
  /// Prefix repeated t times and fixed tail, over letters a, b, c.
  std::string repeated;
  std::string tail;

  Sequence family_sequence(std::size_t t) const {
    std::string word;
    for (std::size_t i = 0; i < t; ++i) word += repeated;
    return normalize(word + tail);
  }
};

inline std::vector<CaseSpec> builtin_case_specs() {
  return {
      // item 1
      {1, "(a b c)^t b a c a b c",
       {"yxzxyz", "xzyxyzx", "xyxzyzxy", "zyxyzxzyx", "zyxzxyzyxz", "zyxzyzxyxzy"},
       {"xyzxyzzyxzyx"}, "abc", "bacabc"},
      // item 2
      {2, "(a b c)^t b a c b a c",
       {"yxzyxz", "xzyxzyx", "xyxzyxzy", "zyxyzxyzx", "zyxzxyzxyz", "zyxzyzxyzxy"},
       {"xyzzyxxyzxyz"}, "abc", "bacbac"},
      // item 3
      {3, "(a b c)^t a c b a c b",
       {"xzyxzy", "xyxzyxz", "xyzyxzyx", "zyxzxyzxy", "zyxzyzxyzx", "zyxzyxyzxyz"},
       {"zyxxyzzyxxyz", "zyxxyzxyzzyx"}, "abc", "acbacb"},
      // item 4
      {4, "(a b c)^t a c b a b c",
       {"xzyxyz", "xyxzyzx", "xyzyxzxy", "zyxzxyzyx", "zyxzyzxyxz", "zyxzyxyzxzy"},
       {"zyxxyzzyxzyx"}, "abc", "acbabc"},
      // item 5
      {5, "(a b c)^(t+1) a c b",
       {"xyzxzy", "xyzxyxz", "xyzxyzyx", "zyxzyxzxy", "zyxzyxzyzx", "zyxzyxzyxyz"},
       {"zyxzyxxyzzyx", "zyxxyzzyxxyz"}, "abc", "abcacb"},
  };
}

/// The sixteen (3, 4)-formations on blocks xyz and zyx, ordered by their
/// block choices read as a 4-bit number with xyz = 1 (first block most
/// significant).
inline std::vector<std::string> all_xyz_formations() {
  std::vector<std::string> out;
  for (unsigned code = 0; code < 16; ++code) {
    std::string word;
    for (int b = 3; b >= 0; --b) word += ((code >> b) & 1U) ? "xyz" : "zyx";
    out.push_back(std::move(word));
  }
  return out;
}

inline void check_xyz_word(const std::string& w) {
  if (w.find_first_not_of("xyz") != std::string::npos) {
    throw Error(Errc::invalid_argument, "word '" + w + "' uses letters other than x, y, z");
  }
}

inline bool contains_any(const std::string& formation, const std::vector<std::string>& witnesses) {
  return std::ranges::any_of(witnesses, [&](const std::string& w) { return is_literal_subsequence(w, formation); });
}

/// Formations containing none of the witnesses.
inline std::vector<std::string> coverage_exceptions(const std::vector<std::string>& witnesses) {
  for (const auto& w : witnesses) check_xyz_word(w);
  std::vector<std::string> out;
  for (auto& f : all_xyz_formations()) {
    if (!contains_any(f, witnesses)) out.push_back(std::move(f));
  }
  return out;
}

struct CaseReport {
  int id = 0;
  std::vector<std::string> computed_exceptions;
  std::vector<std::string> claimed_exceptions;
  /// Every claimed exception avoids all witnesses.
  bool exceptions_avoid = false;
  /// Every formation outside the claimed list contains some witness.
  bool others_covered = false;
  bool pass = false;
};

inline CaseReport verify_case(const CaseSpec& spec) {
  for (const auto& w : spec.claimed_exceptions) {
    check_xyz_word(w);
    if (w.size() != 12) throw Error(Errc::invalid_argument, "claimed exception '" + w + "' is not 4 blocks");
  }
  CaseReport rep;
  rep.id = spec.id;
  rep.computed_exceptions = coverage_exceptions(spec.witnesses);
  rep.claimed_exceptions = spec.claimed_exceptions;

  rep.exceptions_avoid = std::ranges::none_of(
      spec.claimed_exceptions, [&](const std::string& f) { return contains_any(f, spec.witnesses); });
  rep.others_covered = true;
  for (const auto& f : all_xyz_formations()) {
    const bool claimed = std::ranges::find(spec.claimed_exceptions, f) != spec.claimed_exceptions.end();
    if (!claimed && !contains_any(f, spec.witnesses)) rep.others_covered = false;
  }

  auto computed = rep.computed_exceptions;
  auto claimed = rep.claimed_exceptions;
  std::ranges::sort(computed);
  std::ranges::sort(claimed);
  rep.pass = computed == claimed && rep.exceptions_avoid && rep.others_covered;
  return rep;
}

/// The five families as stated before the symmetry reduction:
/// abcacb(abc)^t, abcabc(acb)^t, (abc)^t acbacb, (abc)^t acbabc and
/// (abc)^(t+1) acb.
inline std::vector<Sequence> proposition_families(std::size_t t) {
  const auto rep = [](const std::string& block, std::size_t k) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i) s += block;
    return s;
  };
  return {
      normalize("abcacb" + rep("abc", t)),
      normalize("abcabc" + rep("acb", t)),
      normalize(rep("abc", t) + "acbacb"),
      normalize(rep("abc", t) + "acbabc"),
      normalize(rep("abc", t + 1) + "acb"),
  };
}

}  // namespace fwidth
