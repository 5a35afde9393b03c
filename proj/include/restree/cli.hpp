#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace restree {

// Runs the command-line driver on already-split arguments (no program name).
// Reads tree input from `in` when a path is "-". Exit code 0 on success, 1 on
// a domain failure (not rational under --require-rational, oracle mismatch
// under --verify, indefinite input where definiteness is required), 2 on
// usage, IO or parse errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace restree
