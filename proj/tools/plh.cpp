// Command-line front end: the verification suite, map and action files,
// word evaluation and rotation numbers.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plh/actions.hpp"
#include "plh/checks.hpp"
#include "plh/circle.hpp"
#include "plh/plmap_io.hpp"
#include "plh/word.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

plh::PLMap load_map(const std::string& path) {
  try {
    return plh::read_plmap(slurp(path));
  } catch (const plh::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

plh::PLLift require_lift(const plh::PLMap& m, const std::string& what) {
  if (const auto* f = std::get_if<plh::PLLift>(&m)) return *f;
  throw UsageError(what + " must be a lift");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    out.push_back(a == std::string::npos ? "" : item.substr(a, b - a + 1));
  }
  return out;
}

int run_verify(const std::vector<std::string>& only, const std::string& format) {
  std::vector<std::string> ids;
  for (const auto& o : only) {
    for (auto& id : split(o, ',')) {
      if (!id.empty()) ids.push_back(std::move(id));
    }
  }
  std::vector<plh::CheckResult> results;
  try {
    results = plh::verify_paper(ids);
  } catch (const plh::UnknownCheck& e) {
    throw UsageError(e.what());
  }
  std::cout << (format == "json" ? plh::format_json(results) : plh::format_text(results));
  for (const auto& r : results) {
    if (r.status != plh::CheckStatus::pass) return kFail;
  }
  return kPass;
}

int run_eval(const std::string& word, const std::string& point) {
  const auto coords = split(point, ',');
  if (coords.size() != 2) throw UsageError("point must be 'x,y'");
  plh::Point p;
  try {
    p = {plh::Rational::parse(coords[0]), plh::Rational::parse(coords[1])};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("point: ") + e.what());
  }
  plh::PlanarWord w;
  try {
    w = plh::parse_planar_word(word);
  } catch (const plh::WordParseError& e) {
    throw UsageError(std::string("word: ") + e.what());
  }
  const plh::Point q = plh::word_eval(w, p);
  std::cout << q.x << ", " << q.y << '\n';
  return kPass;
}

int run_map(const std::string& file, const std::string& op, const std::string& with) {
  const plh::PLMap m = load_map(file);
  if (op == "compose") {
    if (with.empty()) throw UsageError("--op compose needs --with");
    const plh::PLLift inner = require_lift(load_map(with), "--with map");
    if (const auto* f = std::get_if<plh::PLLift>(&m)) {
      std::cout << plh::write_plmap(plh::compose(*f, inner));
    } else {
      std::cout << plh::write_plmap(plh::compose(std::get<plh::PLFunc>(m), inner));
    }
  } else if (op == "invert") {
    std::cout << plh::write_plmap(plh::inverse(require_lift(m, "map")));
  } else if (op == "fix") {
    std::cout << plh::write_fixed_set(plh::fixed_set(require_lift(m, "map")));
  } else if (op == "disp") {
    if (const auto* f = std::get_if<plh::PLLift>(&m)) {
      std::cout << plh::sup_displacement(*f) << '\n';
    } else {
      std::cout << plh::sup_abs(std::get<plh::PLFunc>(m)) << '\n';
    }
  } else {
    throw UsageError("unknown --op '" + op + "'");
  }
  return kPass;
}

int run_rot(const std::string& file, long qmax, const std::string& width) {
  plh::RotationOptions opts;
  opts.q_max = qmax;
  try {
    opts.width = plh::Rational::parse(width);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--width: ") + e.what());
  }
  if (opts.q_max < 1 || opts.width.sign() <= 0) throw UsageError("--qmax must be >= 1 and --width > 0");
  const plh::CircleMap m(require_lift(load_map(file), "map"));
  const plh::RotationResult r = plh::rotation_number(m, opts);
  std::cout << r.str() << '\n';
  if (r.kind == plh::RotationResult::Kind::bracket && !r.width_met) {
    std::cerr << "budget exhausted after " << r.iterations << " iterations\n";
  }
  return kPass;
}

int run_action(const std::string& file, const std::string& window, bool check) {
  plh::ActionSpec spec = [&] {
    try {
      return plh::read_action(slurp(file));
    } catch (const plh::ParseError& e) {
      throw UsageError(file + ": " + e.what());
    }
  }();
  const auto bounds = split(window, ',');
  long lo = 0, hi = 0;
  try {
    if (bounds.size() != 2) throw std::invalid_argument("");
    lo = std::stol(bounds[0]);
    hi = std::stol(bounds[1]);
  } catch (const std::exception&) {
    throw UsageError("--window must be 'a,b'");
  }
  if (lo > hi) throw UsageError("--window must satisfy a <= b");
  const plh::WindowedMap g = plh::extend_action(spec, lo, hi);
  if (!check) {
    for (long n = lo; n <= hi; ++n) {
      const auto& b = g.block(n);
      std::cout << "block " << n << " [" << b.lo() << ", " << b.hi() << "] " << plh::pieces_str(b.pieces()) << '\n';
    }
    return kPass;
  }
  const plh::FixLemmaReport report = plh::check_fix_lemmas(spec, g);
  std::cout << report.str();
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact piecewise-linear homeomorphism toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> only;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "run the named check suite");
  verify->add_option("--only", only, "comma-separated check ids or names");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string word, point;
  auto* eval = app.add_subcommand("eval", "evaluate a planar word at a rational point");
  eval->add_option("--word", word, "word, e.g. \"a^6 g a^-6\"")->required();
  eval->add_option("--point", point, "point \"x,y\"")->required();

  std::string map_file, op, with;
  auto* map = app.add_subcommand("map", "operate on a plmap file");
  map->add_option("file", map_file)->required();
  map->add_option("--op", op, "compose|invert|fix|disp")->required();
  map->add_option("--with", with, "inner lift for compose");

  std::string rot_file, width = "1/1024";
  long qmax = 64;
  auto* rot = app.add_subcommand("rot", "rotation number of a circle map");
  rot->add_option("file", rot_file)->required();
  rot->add_option("--qmax", qmax, "largest period tested exactly");
  rot->add_option("--width", width, "bracket width");

  std::string action_file, window = "-8,8";
  bool check = false;
  auto* action = app.add_subcommand("action", "extend a Z2 or K action from its seed");
  action->add_option("file", action_file)->required();
  action->add_option("--window", window, "block range a,b");
  action->add_flag("--check", check, "check the fixed-point lemmas and the relation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_verify(only, format);
    if (*eval) return run_eval(word, point);
    if (*map) return run_map(map_file, op, with);
    if (*rot) return run_rot(rot_file, qmax, width);
    if (*action) return run_action(action_file, window, check);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
