#pragma once

// Command-line surface.  Subcommands:
//
//   info <real-form>          orbit half-dimensions, Hermitian flag, minimal
//                             real orbit count, Satake diagram, O^C_{min,g}
//   pair <g> <h>              full decision: both routes, dual, associate,
//                             properness, bounded-multiplicity certificates,
//                             condition (*)
//   dual <g> <h>              the dual real form and its certificate
//   tables --which 1|2|3|4    the published reference tables at a bound
//   enumerate-empty           every empty-intersection pair at a bound
//   catalog --dump            the shipped catalog files (pairs or satake)
//
// Global flags: --json (versioned schema minorb-cli/1), --bound N (default
// 12).  Real-form names follow the documented grammar and aliases (su*_4,
// su*4, su-star-4 all name the same algebra); unknown names exit with
// near-miss suggestions.
//
// Exit status: 0 success; 2 malformed arguments or unknown names; 3 catalog
// integrity failure (route disagreement, dual non-uniqueness, bad shipped
// data) -- 3 signals a bug, never bad user input.

#include <iosfwd>
#include <string>
#include <vector>

namespace minorb::cli {

// Execute one command (arguments only, no program name), writing results to
// `out` and problems to `err`; returns the exit status described above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// main()-shaped convenience overload: skips argv[0], uses std::cout/cerr.
int run(int argc, const char* const* argv);

}  // namespace minorb::cli
