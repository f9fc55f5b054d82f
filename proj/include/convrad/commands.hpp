#pragma once

#include <iosfwd>
#include <string>

#include "convrad/manifest.hpp"

namespace convrad {

// Payload of one subcommand: the human-readable report plus the TSV
// sample grid (presentation only; every verdict lives in the report).
struct CommandResult {
  std::string report;
  std::string samples_tsv;
};

CommandResult cmd_radius(const Manifest& m);
CommandResult cmd_polygon(const Manifest& m);
CommandResult cmd_laplacian(const Manifest& m);
CommandResult cmd_dirichlet(const Manifest& m);
// Runs the full verification suite; true iff every criterion passes.
bool cmd_verify(std::ostream& os);

// Full CLI: subcommands radius | polygon | laplacian | dirichlet | verify,
// flags --manifest PATH, --order N, --tail J, --samples COUNT, --out DIR.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
int run_cli(int argc, char** argv);

}  // namespace convrad
