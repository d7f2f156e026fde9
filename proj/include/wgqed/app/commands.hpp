#pragma once

#include <string>
#include <vector>

namespace wgqed::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

// Entry point of the wgqed executable. Errors are reported as one
// "error: <kind>: <message>" line on stderr.
int run(int argc, char** argv);

// Same, for an argument list without the program name.
int run(const std::vector<std::string>& args);

}  // namespace wgqed::app
