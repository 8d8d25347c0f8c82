#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsrx {

// Runs one command-line invocation.  args is argv without the program
// name.  Returns the process exit code: 0 when the requested computation
// succeeds (and, for verification suites and property checks, the property
// holds), 1 when a suite or check fails (its report is still written), 2 on
// usage or input errors.  Results go to out, diagnostics and progress to
// err, and `--graph6 -` reads one graph6 line from in.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in);

}  // namespace dsrx
