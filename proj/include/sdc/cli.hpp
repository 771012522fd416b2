#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sdc {

/// Exit codes: 0 decisive success, 1 decisive failure/refutation,
/// 2 inconclusive (saturation/truncation), 3 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace sdc
