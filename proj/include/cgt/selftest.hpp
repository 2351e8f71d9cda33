#pragma once

#include <string>
#include <vector>

#include "cgt/game.hpp"

namespace cgt {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failing checks
};

// Runs every invariant suite (engine algebra, order, canonical forms, the
// theorem identities, ruleset symmetries, reductions, Lemma-1 paths).
std::vector<SuiteResult> run_selftests();

// All dicotic canonical forms with birthday <= day (exhaustive for small day).
std::vector<Game> dicotic_canonical_born_by(int day);

}  // namespace cgt
