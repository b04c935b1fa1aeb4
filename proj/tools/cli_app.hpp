#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffsynth::cli {

// Runs the command-line interface on the given arguments (program name
// excluded) and streams. Exit codes:
//   0  success
//   1  verify found a mismatch
//   2  usage, I/O or parse error
//   3  input matrix not invertible / not symplectic
//   4  class database missing, unreadable or insufficient for the input
//   5  search abandoned or capped before reaching a terminal form
//   6  resource guard refused a database generation request
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cliffsynth::cli
