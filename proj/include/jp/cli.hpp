#ifndef JP_CLI_HPP
#define JP_CLI_HPP

namespace jp {

// Full command-line surface; returns the process exit code
// (0 success, 1 verification failure, 2 usage or parameter error).
int run_cli(int argc, const char* const* argv);

} // namespace jp

#endif
