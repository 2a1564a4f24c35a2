#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlegraph {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Runs the ten acceptance criteria, printing one line per criterion to `log`
/// as it finishes. A criterion fails if its check fails or it exceeds its
/// time budget.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

struct GoldenCase {
  std::string id;
  std::vector<std::string> args;
  std::string stdin_text;
  int exit_code;
};

/// Fixed corpus of CLI invocations covering every subcommand.
const std::vector<GoldenCase>& golden_cases();
/// Expected stdout for a golden case id; empty if not embedded.
const std::string* golden_output(const std::string& id);

}  // namespace circlegraph
