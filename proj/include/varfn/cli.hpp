#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varfn {

// Command dispatch behind the varfn binary. Exit status: 0 for a pass
// (or any successfully produced report), 1 for a refuted check, 2 for
// configuration or usage errors. The report document goes to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace varfn
