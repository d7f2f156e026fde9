#pragma once

#include "wgqed/core.hpp"

#include <string>

namespace wgqed::app {

// JSON file {"re": [[4x4]], "im": [[4x4]]} in the (G, E, S, A) basis; "im" may be omitted.
// Throws DensityError ("shape", "trace", "hermitian", "psd") or std::runtime_error for I/O and syntax.
DickeDensity parse_density_file(const std::string& path);

// Preset name, or a path to a density file when no preset matches.
DickeDensity resolve_initial(const std::string& spec);

}  // namespace wgqed::app
