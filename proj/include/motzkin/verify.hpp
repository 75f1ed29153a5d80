#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace motzkin::verify {

// Quick trims the brute-force bounds for an interactive run; Full runs every
// identity at its stated desk-scale bound.
enum class Level { Quick, Full };

struct Check {
  std::string name;
  std::function<bool(std::ostream& diagnostics)> run;
};

/// The standard battery: every closed form cross-checked against its
/// independent route (brute enumeration, direct counting, or a second
/// algebraic path).
std::vector<Check> standard_checks(Level level);

/// Runs the checks in order, printing one PASS/FAIL line each; returns true
/// iff everything passed.
bool run_checks(const std::vector<Check>& checks, std::ostream& out);

bool run(Level level, std::ostream& out);

}  // namespace motzkin::verify
