#include "plh/word.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace plh {

namespace {

constexpr std::array<std::pair<std::string_view, Symbol>, 7> kNames{{
    {"a", Symbol::alpha},
    {"b", Symbol::beta},
    {"g", Symbol::gamma},
    {"d", Symbol::delta},
    {"gb", Symbol::gamma_bar},
    {"db", Symbol::delta_bar},
    {"e", Symbol::eta},
}};

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size() || s.size() > 18) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = std::strtol(std::string(s).c_str(), nullptr, 10);
  return true;
}

struct GeneratorTable {
  std::array<SkewMap, 6> forward;
  std::array<SkewMap, 6> backward;
};

const GeneratorTable& table() {
  static const GeneratorTable t = [] {
    auto make = [](bool inv) {
      auto g = [inv](Symbol s) { return inv ? inverse(generator(s)) : generator(s); };
      return std::array<SkewMap, 6>{g(Symbol::alpha), g(Symbol::beta),      g(Symbol::gamma),
                                    g(Symbol::delta), g(Symbol::gamma_bar), g(Symbol::delta_bar)};
    };
    return GeneratorTable{make(false), make(true)};
  }();
  return t;
}

}  // namespace

std::vector<RawAtom> tokenize_word(std::string_view text) {
  std::vector<RawAtom> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const std::size_t pos = out.size() + 1;
    RawAtom atom;
    const auto caret = tok.find('^');
    atom.name = tok.substr(0, caret);
    if (atom.name.empty()) throw WordParseError(pos, "missing generator name in '" + tok + "'");
    if (caret != std::string::npos && !parse_long(std::string_view(tok).substr(caret + 1), atom.exponent)) {
      throw WordParseError(pos, "bad exponent in '" + tok + "'");
    }
    out.push_back(std::move(atom));
  }
  return out;
}

std::string_view symbol_name(Symbol s) {
  for (const auto& [name, sym] : kNames) {
    if (sym == s) return name;
  }
  return "?";
}

PlanarWord parse_planar_word(std::string_view text) {
  PlanarWord w;
  const auto raw = tokenize_word(text);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::optional<Symbol> sym;
    for (const auto& [name, s] : kNames) {
      if (raw[i].name == name) sym = s;
    }
    if (!sym) throw WordParseError(i + 1, "unknown generator '" + raw[i].name + "'");
    if (*sym == Symbol::eta && raw[i].exponent != 1 && raw[i].exponent != -1) {
      throw WordParseError(i + 1, "eta admits only exponent 1 or -1");
    }
    w.push_back({*sym, raw[i].exponent});
  }
  return w;
}

std::string format_word(const PlanarWord& w) {
  std::string out;
  for (const auto& a : w) {
    if (!out.empty()) out += ' ';
    out += symbol_name(a.symbol);
    if (a.exponent != 1) out += "^" + std::to_string(a.exponent);
  }
  return out;
}

Point word_eval(const PlanarWord& w, const Point& p) {
  Point q = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->symbol == Symbol::eta) {
      q = {q.y, q.x};
      continue;
    }
    const auto idx = static_cast<std::size_t>(it->symbol);
    const SkewMap& m = it->exponent < 0 ? table().backward[idx] : table().forward[idx];
    const long n = it->exponent < 0 ? -it->exponent : it->exponent;
    for (long i = 0; i < n; ++i) q = m(q);
  }
  return q;
}

std::variant<SkewMap, OpaqueWord> word_reduce(const PlanarWord& w) {
  std::vector<SkewMap> factors;
  bool swapped = false;  // parity of eta atoms to the left
  for (const auto& a : w) {
    if (a.symbol == Symbol::eta) {
      swapped = !swapped;
      continue;
    }
    SkewMap m = power(generator(a.symbol), a.exponent);
    factors.push_back(swapped ? mirror(m) : std::move(m));
  }
  if (swapped) return OpaqueWord{"odd number of axis swaps"};

  std::optional<Axis> axis;
  for (const auto& m : factors) {
    if (m.as_translation()) continue;
    if (axis && *axis != m.axis()) return OpaqueWord{"factors over both axes"};
    axis = m.axis();
  }
  const Axis target = axis.value_or(Axis::over_x);
  SkewMap result = SkewMap::identity(target);
  for (const auto& m : factors) result = compose(result, *m.over(target));
  return result;
}

}  // namespace plh
