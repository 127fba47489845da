#ifndef FACTORPOLY_CLI_HPP
#define FACTORPOLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fpoly {

// Exit codes: 0 success, 2 parse/usage error, 3 enumeration cap exceeded,
// 4 dp/brute disagreement (internal bug), 5 root-finder non-convergence,
// 1 anything else. verify returns 0 only when nothing was falsified.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpoly

#endif
