#pragma once

// Command-line front end. Exit codes: 0 all PASS, 1 any FAIL, 2 INCONCLUSIVE
// without FAIL, 3 usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace wgalg {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wgalg
