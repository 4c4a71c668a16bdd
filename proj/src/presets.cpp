#include "tpmi/presets.hpp"

#include "tpmi/errors.hpp"
#include "tpmi/jones.hpp"

namespace tpmi {

namespace {

InterferometerConfig base(const std::string& name) {
  InterferometerConfig c;
  c.name = name;
  return c;
}

// Arm-1 axis given in the effective (detector-side) convention.
double effective(double deg) { return flip_axis(radians(deg)); }

} // namespace

InterferometerConfig preset(const std::string& name) {
  auto c = base(name);
  auto& p = c.polarizers;
  if (name == "fig3a") {
  } else if (name == "fig3b") {
    p.p0 = radians(0);
  } else if (name == "fig4") {
    // 45°/135° scheme with arm 1 offset by 3° so the two arms are not
    // exactly orthogonal.
    p.p1 = effective(48);
    p.p2 = radians(135);
    p.p3 = radians(0);
  } else if (name == "fig5" || name == "fig7" || name == "fig8") {
    p.p0 = radians(45);
    p.p1 = radians(0);
    p.p2 = radians(90);
    if (name == "fig7")
      p.p3 = radians(45);
    if (name == "fig8")
      p.p3 = radians(135);
  } else if (name == "fig6") {
    p.p0 = radians(0);
    p.p1 = effective(45);
    p.p2 = radians(135);
  } else if (name == "ortho0_90") {
    p.p1 = radians(0);
    p.p2 = radians(90);
  } else if (name == "ortho45_135") {
    p.p1 = effective(45);
    p.p2 = radians(135);
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return c;
}

std::vector<std::string> preset_names() {
  return {"fig3a", "fig3b", "fig4", "fig5", "fig6", "fig7", "fig8", "ortho0_90", "ortho45_135"};
}

std::string preset_file(const std::string& name) {
  return std::string(TPMI_PRESET_DIR) + "/" + name + ".json";
}

} // namespace tpmi
