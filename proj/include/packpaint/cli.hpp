#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace packpaint {

// Runs one CLI command. Exit codes: 0 success/feasible/verified,
// 1 infeasible or violations found, 2 usage or input error,
// 3 timeout or pipeline structured failure. Diagnostics go to err only.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace packpaint
