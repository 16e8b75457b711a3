#pragma once

// The named verification suite C1..C16. Every check is an exact equality
// witness over rationals; none has a tolerance.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plh {

enum class CheckStatus { pass, fail, error };

std::string_view status_name(CheckStatus s);

struct CheckResult {
  std::string id;    // C1..C16
  std::string name;  // e.g. key-relation
  CheckStatus status = CheckStatus::error;
  std::string witness;   // computed exact data
  std::string expected;  // expected exact data
  std::vector<std::string> notes;  // sub-items, including negative controls
  double elapsed_ms = 0.0;
};

struct CheckInfo {
  std::string id;
  std::string name;
  std::string summary;
};

/// The suite in its fixed order.
const std::vector<CheckInfo>& check_catalog();

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs the selected checks (by id or name; all when empty) concurrently and
/// returns them in catalog order. Throws UnknownCheck for a bad selector.
std::vector<CheckResult> verify_paper(std::span<const std::string> selection = {});

/// One line per check plus a summary line. Elapsed times are omitted so the
/// report is reproducible byte for byte.
std::string format_text(const std::vector<CheckResult>& results);
std::string format_json(const std::vector<CheckResult>& results);

}  // namespace plh
