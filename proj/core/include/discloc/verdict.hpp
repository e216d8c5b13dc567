#pragma once

#include <string>
#include <utility>
#include <vector>

namespace discloc {

/// Outcome of an exhaustive check. A failed verdict names the check and
/// carries the lexicographically least witness found.
struct Verdict {
  bool holds = true;
  std::string check;
  std::string detail;
  std::vector<std::string> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string check, std::string detail,
                      std::vector<std::string> witness = {}) {
    return {false, std::move(check), std::move(detail), std::move(witness)};
  }

  explicit operator bool() const { return holds; }
};

}  // namespace discloc
