#pragma once

#include <ostream>

namespace acsp {

// Runs one command line. Results and errors are JSON on `out`. Returns 0 on
// success, 2 for rejected input, 1 for an internal failure.
int runCli(int argc, char **argv, std::ostream &out);

} // namespace acsp
