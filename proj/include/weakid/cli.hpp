#pragma once

#include <ostream>

namespace weakid {

// Full command-line front end. Exit codes: 0 = verdict computed (whatever
// it is), 2 = usage error, 3 = budget exhausted / UNKNOWN verdict. Reports
// go to `out`, diagnostics to `err`.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weakid
