#pragma once

// Line-oriented tokenizer shared by the text formats.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cvxtop/errors.hpp"

namespace cvxtop::detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-empty, comment-stripped lines.
inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

[[noreturn]] inline void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

inline std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace cvxtop::detail
