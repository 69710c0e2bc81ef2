#pragma once

#include <string>

namespace hopfkit::presets {

// Sources of the shipped presentation files, byte-identical to
// presets/nullplane.hopf and presets/kgalilei.hopf.
const std::string& nullplane();
const std::string& kgalilei();

}  // namespace hopfkit::presets
