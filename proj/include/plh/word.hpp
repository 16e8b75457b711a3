#pragma once

// Words in the generators alpha, beta, gamma, delta, gamma_bar, delta_bar
// and the axis swap eta. Text syntax: whitespace-separated atoms `a`, `b`,
// `g`, `d`, `gb`, `db`, `e`, each optionally followed by `^<int>`, e.g.
// `a^6 g a^-6`. Words act right to left, like composition.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plh/skew.hpp"

namespace plh {

/// Malformed word; `position` is the 1-based atom index.
class WordParseError : public std::invalid_argument {
 public:
  WordParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("atom " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct RawAtom {
  std::string name;
  long exponent = 1;
};

/// Splits `name^exp` tokens without interpreting names.
std::vector<RawAtom> tokenize_word(std::string_view text);

struct Atom {
  Symbol symbol;
  long exponent = 1;
  friend bool operator==(const Atom&, const Atom&) = default;
};

using PlanarWord = std::vector<Atom>;

PlanarWord parse_planar_word(std::string_view text);
std::string format_word(const PlanarWord& w);
std::string_view symbol_name(Symbol s);

/// Exact image of p, atom by atom from the right.
Point word_eval(const PlanarWord& w, const Point& p);

/// Word whose atoms do not fit into a single skew normal form.
struct OpaqueWord {
  std::string reason;
};

/// Cancels eta pairs by conjugating the atoms between them, then composes
/// the resulting skew maps if they share an axis (translations adapt to
/// either). Otherwise the word is opaque and only word_eval applies.
std::variant<SkewMap, OpaqueWord> word_reduce(const PlanarWord& w);

}  // namespace plh
