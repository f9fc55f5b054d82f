#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "convrad/diffmod.hpp"

namespace convrad {

// The bundled instance set used by the verification suite and the CLI
// `verify` subcommand.
struct BundledInstance {
  std::string name;
  DiffModule dm;
  int order;
};
std::vector<BundledInstance> bundled_instances();

// Runs every verification criterion, printing one pass/fail line each;
// returns true iff all pass.
bool acceptance_run_all(std::ostream& os);

}  // namespace convrad
