#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unisynt {

// Command-line driver. Returns the process exit code: 0 for a positive
// verdict (or successful export/generation), 1 for a negative verdict,
// 2 for any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unisynt
