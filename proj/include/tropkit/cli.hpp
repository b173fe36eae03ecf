#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropkit::cli {

// Runs the command line given without the program name. Returns the exit
// code: 0 on success, 1 on precondition violations, 2 on parse errors.
// Errors are written to err as a JSON object {"error": kind, "message": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass() const { return expected == actual; }
};

// The table behind `tropkit reproduce paper`.
std::vector<GoldenCheck> golden_checks();

}  // namespace tropkit::cli
