#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liemf/weights.hpp"

namespace liemf {

// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage error,
// 3 resource cap hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Weight grammar: either a comma-separated label list "0,0,1,0,0", or a sum
// of fundamental terms "l3", "2l1+l2" (λ/ω/w accepted as markers).
Weight parse_weight(const std::string& text, int rank);
std::string weight_to_text(const Weight& w);

} // namespace liemf
