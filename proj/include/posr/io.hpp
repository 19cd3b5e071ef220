#pragma once

#include <fstream>
#include <string>
#include <string_view>

#include "posr/axioms.hpp"
#include "posr/lexer.hpp"
#include "posr/table.hpp"

namespace posr {

/// Parses the `psr 1` text format into raw tables without checking axioms.
/// Throws ParseError (with the line number) on lexical or shape problems.
inline RawTables parse_psr_raw(std::string_view text, const std::string& source = "<input>") {
  detail::LineReader in(source, text);
  const auto& magic = in.keyword("psr", 1);
  if (magic.tokens[1] != "1") in.fail(magic.number, "unsupported psr format version " + magic.tokens[1]);
  const auto& ord = in.keyword("order", 1);
  const unsigned n = in.number(ord, ord.tokens[1]);
  if (n < 2 || n > kMaxOrder) in.fail(ord.number, "order must lie in [2, " + std::to_string(kMaxOrder) + "]");
  const auto& names = in.keyword("names", n);
  RawTables t;
  t.names.assign(names.tokens.begin() + 1, names.tokens.end());
  in.keyword("add", 0);
  t.add = in.matrix(n, n, n, "add");
  in.keyword("mul", 0);
  t.mul = in.matrix(n, n, n, "mul");
  in.finish();
  try {
    check_structure(t);
  } catch (const StructuralError& e) {
    in.fail(names.number, e.what());
  }
  return t;
}

/// Parses and validates; axiom failures surface as InvalidInstance.
inline PoSemiringTable parse_psr(std::string_view text, const std::string& source = "<input>") {
  return PoSemiringTable(parse_psr_raw(text, source));
}

inline RawTables read_psr_raw(const std::string& path) { return parse_psr_raw(detail::slurp(path), path); }

inline PoSemiringTable read_psr_file(const std::string& path) { return parse_psr(detail::slurp(path), path); }

inline std::string format_psr(const RawTables& t) {
  std::string out = "psr 1\norder " + std::to_string(t.order()) + "\nnames";
  for (const auto& s : t.names) out += " " + s;
  out += "\nadd\n" + detail::format_rows(t.add) + "mul\n" + detail::format_rows(t.mul);
  return out;
}

inline std::string format_psr(const PoSemiringTable& a) { return format_psr(a.raw()); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  out << text;
  if (!out) throw ParseError(path, 0, "write failed");
}

inline void write_psr_file(const std::string& path, const PoSemiringTable& a) { write_text_file(path, format_psr(a)); }

}  // namespace posr
