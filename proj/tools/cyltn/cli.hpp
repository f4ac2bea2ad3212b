#ifndef CYLTN_TOOLS_CLI_HPP
#define CYLTN_TOOLS_CLI_HPP

namespace cyltn::cli {

// Full command dispatch, factored out of main so tests can drive it.
// Exit codes: 0 success/pass, 1 usage or I/O error, 2 mathematical
// refutation (negative minor, non-interlacing, identity violation).
int run(int argc, const char* const* argv);

}  // namespace cyltn::cli

#endif
