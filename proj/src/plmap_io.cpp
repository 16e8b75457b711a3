#include "plh/plmap_io.hpp"

#include <sstream>

namespace plh {

namespace io_detail {

std::vector<std::pair<std::size_t, std::string>> significant_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(n, line.substr(first, last - first + 1));
  }
  return out;
}

Piece parse_piece(std::size_t line_no, const std::string& line) {
  std::istringstream ls(line);
  std::string tag;
  ls >> tag;
  if (tag != "piece") throw ParseError(line_no, "expected 'piece', got '" + tag + "'");
  Rational fields[3];
  const char* names[] = {"x=", "v=", "s="};
  for (int i = 0; i < 3; ++i) {
    std::string tok;
    if (!(ls >> tok)) throw ParseError(line_no, std::string("missing field ") + names[i]);
    if (tok.rfind(names[i], 0) != 0) {
      throw ParseError(line_no, std::string("expected ") + names[i] + ", got '" + tok + "'");
    }
    try {
      fields[i] = Rational::parse(tok.substr(2));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  std::string extra;
  if (ls >> extra) throw ParseError(line_no, "trailing text '" + extra + "'");
  return {fields[0], fields[1], fields[2]};
}

std::string format_piece(const Piece& p) {
  return "piece x=" + p.x.str() + " v=" + p.v.str() + " s=" + p.s.str();
}

}  // namespace io_detail

PLMap read_plmap(std::istream& in) {
  const auto lines = io_detail::significant_lines(in);
  if (lines.empty()) throw ParseError(0, "empty document");
  std::istringstream hs(lines[0].second);
  std::string magic, version, kind, extra;
  hs >> magic >> version >> kind;
  if (magic != "plmap" || version != "v1" || (kind != "fn" && kind != "lift") || (hs >> extra)) {
    throw ParseError(lines[0].first, "expected header 'plmap v1 fn|lift'");
  }
  std::vector<Piece> pieces;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    pieces.push_back(io_detail::parse_piece(lines[i].first, lines[i].second));
  }
  try {
    if (kind == "fn") return PLFunc::from_pieces(std::move(pieces));
    return PLLift::from_pieces(std::move(pieces));
  } catch (const PLError& e) {
    throw ParseError(0, e.what());
  }
}

PLMap read_plmap(const std::string& text) {
  std::istringstream in(text);
  return read_plmap(in);
}

namespace {

std::string write_pieces(const char* kind, const std::vector<Piece>& pieces) {
  std::string out = std::string("plmap v1 ") + kind + "\n";
  for (const auto& p : pieces) out += io_detail::format_piece(p) + "\n";
  return out;
}

}  // namespace

std::string write_plmap(const PLFunc& f) { return write_pieces("fn", f.pieces()); }
std::string write_plmap(const PLLift& f) { return write_pieces("lift", f.pieces()); }

std::string write_plmap(const PLMap& m) {
  return std::visit([](const auto& f) { return write_plmap(f); }, m);
}

std::string write_fixed_set(const FixedSet& s) {
  std::string out = "fixset v1\n";
  if (s.is_full()) return out + "full\n";
  if (s.is_empty()) return out + "empty\n";
  for (const auto& it : s.items()) {
    if (it.is_point()) {
      out += "point " + it.lo.str() + "\n";
    } else {
      out += "interval " + it.lo.str() + " " + it.hi.str() + "\n";
    }
  }
  return out;
}

}  // namespace plh
