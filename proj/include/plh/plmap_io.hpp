#pragma once

// Text serialization of PL maps:
//
//   plmap v1 <fn|lift>
//   piece x=<p/q> v=<p/q> s=<p/q>
//   ...
//
// Lines starting with '#' and blank lines are ignored. write() emits the
// canonical pieces, so read(write(m)) == m and write(read(write(m))) is
// byte-identical.

#include <istream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "plh/pl_map.hpp"

namespace plh {

/// Malformed input; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using PLMap = std::variant<PLFunc, PLLift>;

PLMap read_plmap(std::istream& in);
PLMap read_plmap(const std::string& text);
std::string write_plmap(const PLFunc& f);
std::string write_plmap(const PLLift& f);
std::string write_plmap(const PLMap& m);

std::string write_fixed_set(const FixedSet& s);

namespace io_detail {

/// Splits the document into (line number, content) pairs, dropping blank
/// and comment lines.
std::vector<std::pair<std::size_t, std::string>> significant_lines(std::istream& in);

/// Parses `piece x=.. v=.. s=..`.
Piece parse_piece(std::size_t line_no, const std::string& line);

std::string format_piece(const Piece& p);

}  // namespace io_detail

}  // namespace plh
