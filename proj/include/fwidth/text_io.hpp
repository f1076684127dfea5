#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fwidth/enumeration.hpp"
#include "fwidth/error.hpp"
#include "fwidth/formations.hpp"
#include "fwidth/sequence.hpp"

namespace fwidth {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_tokens(std::string_view s, std::string_view separators = " \t\r\n,") {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && separators.find(s[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < s.size() && separators.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Accepts a contiguous symbol string ("012021", "abcacb") or a list of
/// non-negative integers separated by whitespace or commas. With
/// `normalize_input` the symbols are relabelled by first appearance;
/// otherwise the input must already be a normalized digit/integer word.
inline Sequence parse_sequence(std::string_view text, bool normalize_input = true) {
  text = trim(text);
  if (text.empty()) return Sequence{};
  std::vector<long long> raw;
  const bool listed = text.find_first_of(" \t\r\n,") != std::string_view::npos;
  if (listed) {
    for (auto tok : split_tokens(text)) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
        throw Error(Errc::parse, "bad integer token '" + std::string(tok) + "'");
      }
      raw.push_back(value);
    }
  } else {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch)) != 0) continue;
      if (!normalize_input && std::isdigit(static_cast<unsigned char>(ch)) == 0) {
        throw Error(Errc::parse, "expected digits, got '" + std::string(1, ch) + "'");
      }
      if (std::isgraph(static_cast<unsigned char>(ch)) == 0) throw Error(Errc::parse, "unprintable symbol");
      raw.push_back(std::isdigit(static_cast<unsigned char>(ch)) != 0 ? ch - '0' : 1000 + ch);
    }
  }
  if (normalize_input) return normalize(raw);
  Word letters;
  for (long long v : raw) {
    if (v > 0xFFFF) throw Error(Errc::parse, "letter id too large");
    letters.push_back(static_cast<Letter>(v));
  }
  if (!is_normalized(letters)) throw Error(Errc::parse, "sequence is not normalized");
  return Sequence::from_normalized(std::move(letters));
}

/// Digit string for alphabets of at most ten letters, comma-separated ids
/// otherwise.
inline std::string format_sequence(const Sequence& u) {
  std::string out;
  if (u.alphabet_size() <= 10) {
    for (Letter c : u) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(u[i]);
  }
  return out;
}

/// Block-per-token form, e.g. "012 210 012". The first token defines the
/// ascending block and every other token must equal it or its reverse. A
/// single token of 0/1 characters is read as orientation bits over
/// `r_for_bits` letters instead.
inline BinaryFormation parse_formation(std::string_view text, std::size_t r_for_bits = 0) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) throw Error(Errc::parse, "empty formation");
  if (tokens.size() == 1 && r_for_bits > 0 &&
      tokens[0].find_first_not_of("01") == std::string_view::npos) {
    return BinaryFormation::from_bits(r_for_bits, tokens[0]);
  }
  const std::string forward(tokens[0]);
  const std::string backward(forward.rbegin(), forward.rend());
  if (std::string sorted = forward; std::ranges::sort(sorted), std::ranges::adjacent_find(sorted) != sorted.end()) {
    throw Error(Errc::parse, "block '" + forward + "' repeats a letter");
  }
  std::string bits;
  for (auto tok : tokens) {
    if (tok == forward) {
      bits.push_back('1');
    } else if (tok == backward) {
      bits.push_back('0');
    } else {
      throw Error(Errc::parse, "block '" + std::string(tok) + "' is neither '" + forward + "' nor its reverse");
    }
  }
  return BinaryFormation::from_bits(forward.size(), bits);
}

inline std::string format_formation(const BinaryFormation& f) {
  const Sequence word = materialize(f);
  const std::string digits = format_sequence(word);
  if (f.alphabet_size() > 10) return digits;
  std::string out;
  for (std::size_t b = 0; b < f.blocks(); ++b) {
    if (b > 0) out.push_back(' ');
    out += digits.substr(b * f.alphabet_size(), f.alphabet_size());
  }
  return out;
}

/// Appendix E line: "<bits> <sequence> <fw>".
inline std::string format_abc_record(const AbcAcbRecord& rec) {
  return rec.bits + " " + format_sequence(rec.sequence) + " " + std::to_string(rec.fw);
}

inline AbcAcbRecord parse_abc_record(std::string_view line) {
  const auto tokens = split_tokens(line, " \t\r\n");
  if (tokens.size() != 3) throw Error(Errc::parse, "expected '<bits> <sequence> <fw>'");
  AbcAcbRecord rec;
  rec.bits = std::string(tokens[0]);
  rec.sequence = parse_sequence(tokens[1], false);
  std::size_t width = 0;
  auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), width);
  if (ec != std::errc{} || ptr != tokens[2].data() + tokens[2].size()) throw Error(Errc::parse, "bad fw field");
  rec.fw = width;
  if (bits_to_sequence(rec.bits) != rec.sequence) throw Error(Errc::parse, "sequence does not match bit string");
  return rec;
}

/// Non-empty lines of a fixture stream, with trailing whitespace removed.
inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace fwidth
