#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tc/bounds.hpp"

namespace tc {

// Process exit statuses. Every run maps to exactly one of these.
enum class ExitStatus : int {
    Pinched = 0,
    Unpinched = 1,
    UsageError = 2,
    Contradiction = 3,
    CapExceeded = 4,
};

ExitStatus exit_status_for(ReportStatus s);

// Worst status across a grid: contradiction > cap-exceeded > unpinched > pinched.
ExitStatus combine_statuses(const std::vector<ReportStatus>& statuses);

// Parses "a..b" or a single integer into an inclusive range; a > b is empty.
std::pair<int, int> parse_range(const std::string& text);

// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tc
