#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "posr/errors.hpp"

namespace posr::detail {

/// Whitespace-tokenized lines, skipping blanks and '#' comment lines.
class LineReader {
 public:
  struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
  };

  LineReader(std::string source, std::string_view text) : source_(std::move(source)) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++number;
      std::string_view raw = text.substr(pos, end - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::istringstream in{std::string(raw)};
      Line line{number, {}};
      for (std::string tok; in >> tok;) line.tokens.push_back(tok);
      if (!line.tokens.empty() && line.tokens.front()[0] != '#') lines_.push_back(std::move(line));
      if (end == text.size()) break;
      pos = end + 1;
    }
    last_ = number;
  }

  [[noreturn]] void fail(std::size_t line, const std::string& what) const { throw ParseError(source_, line, what); }

  const Line& next(const char* what) {
    if (at_ >= lines_.size()) fail(last_, std::string("unexpected end of input, expected ") + what);
    return lines_[at_++];
  }

  /// A line "<keyword> <args...>" with exactly `args` arguments.
  const Line& keyword(const std::string& kw, std::size_t args) {
    const Line& l = next(kw.c_str());
    if (l.tokens[0] != kw) fail(l.number, "expected '" + kw + "', found '" + l.tokens[0] + "'");
    if (l.tokens.size() != args + 1)
      fail(l.number, "'" + kw + "' takes " + std::to_string(args) + " argument(s), found " +
                         std::to_string(l.tokens.size() - 1));
    return l;
  }

  unsigned number(const Line& l, const std::string& tok) const {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail(l.number, "expected a non-negative integer, found '" + tok + "'");
    return v;
  }

  /// `rows` lines of exactly `cols` indices each, all below `bound`.
  std::vector<std::vector<unsigned>> matrix(std::size_t rows, std::size_t cols, unsigned bound, const char* what) {
    std::vector<std::vector<unsigned>> out;
    for (std::size_t i = 0; i < rows; ++i) {
      const Line& l = next(what);
      if (l.tokens.size() != cols)
        fail(l.number, std::string(what) + " row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                           std::to_string(cols));
      std::vector<unsigned> row;
      for (const auto& tok : l.tokens) {
        const unsigned v = number(l, tok);
        if (v >= bound) fail(l.number, "index " + tok + " out of range");
        row.push_back(v);
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  void finish() const {
    if (at_ < lines_.size()) fail(lines_[at_].number, "trailing content '" + lines_[at_].tokens[0] + "'");
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<Line> lines_;
  std::size_t at_ = 0;
  std::size_t last_ = 0;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Matrix>
std::string format_rows(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

}  // namespace posr::detail
