#pragma once

#include <string>
#include <vector>

#include "tpmi/config.hpp"

namespace tpmi {

/// Built-in scenarios: fig3a fig3b fig4 fig5 fig6 fig7 fig8, plus the two flat
/// orthogonal-arm schemes ortho0_90 and ortho45_135. Throws ValidationError
/// for an unknown name.
InterferometerConfig preset(const std::string& name);

std::vector<std::string> preset_names();

/// Path of the shipped JSON file for `name` (same content as preset(name)).
std::string preset_file(const std::string& name);

} // namespace tpmi
