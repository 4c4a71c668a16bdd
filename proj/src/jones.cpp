#include "tpmi/jones.hpp"

#include <cmath>
#include <numbers>

#include "tpmi/errors.hpp"

namespace tpmi {

PolarizationTransform polarizer(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  PolarizationTransform p;
  p << c * c, c * s, c * s, s * s;
  return p;
}

PolarizationTransform handedness_flip() {
  PolarizationTransform f = PolarizationTransform::Zero();
  f(0, 0) = 1.0;
  f(1, 1) = -1.0;
  return f;
}

PortAction beamsplitter_port(Port kind) {
  const double amp = 1.0 / std::numbers::sqrt2;
  if (kind == Port::transmit)
    return {PolarizationTransform::Identity(), amp};
  return {handedness_flip(), amp};
}

double wrap_axis(double angle) {
  double a = std::fmod(angle, std::numbers::pi);
  if (a < 0.0)
    a += std::numbers::pi;
  if (a >= std::numbers::pi)
    a -= std::numbers::pi;
  return a;
}

double flip_axis(double angle) { return wrap_axis(-angle); }

PolarizationTransform ArmChain::rederive() const {
  PolarizationTransform t = PolarizationTransform::Identity();
  for (const auto& e : elements)
    t = e.matrix * t;
  return t;
}

namespace {

void push_port(std::vector<ChainElement>& out, const char* name, Port kind) {
  const auto port = beamsplitter_port(kind);
  out.push_back({name, port.amplitude * port.polarization});
}

void push_polarizer(std::vector<ChainElement>& out, const char* name,
                    const std::optional<double>& angle) {
  if (angle)
    out.push_back({name, polarizer(*angle)});
}

} // namespace

ArmChain build_arm_chain(const InterferometerConfig& config, Arm arm,
                         double mirror_offset) {
  const auto& pol = config.polarizers;
  ArmChain chain;
  chain.arm = arm;
  auto& el = chain.elements;

  if (arm == Arm::one) {
    push_port(el, "bs-reflect-in", Port::reflect);
    push_polarizer(el, "p1", pol.p1);
    el.push_back({"m1", PolarizationTransform::Identity()});
    push_polarizer(el, "p1", pol.p1);
    push_port(el, "bs-transmit-out", Port::transmit);
    chain.delay = 0.0;
  } else {
    push_port(el, "bs-transmit-in", Port::transmit);
    push_polarizer(el, "p2", pol.p2);
    el.push_back({"m2", PolarizationTransform::Identity()});
    push_polarizer(el, "p2", pol.p2);
    push_port(el, "bs-reflect-out", Port::reflect);
    chain.delay = delay_from_mirror_offset(mirror_offset);
  }
  el.push_back({"detector-frame", handedness_flip()});
  push_polarizer(el, "p3", pol.p3);

  if (config.blocked_arm && *config.blocked_arm == arm) {
    el.push_back({"block", PolarizationTransform::Zero()});
    chain.blocked = true;
  }

  chain.transform = chain.rederive();
  if (!chain.blocked && chain.transform.norm() < 1e-12)
    throw DegenerateChain("arm " + std::to_string(static_cast<int>(arm)) +
                          " transmits nothing: crossed polarizers");
  return chain;
}

EffectiveAxes effective_axes(const InterferometerConfig& config) {
  EffectiveAxes axes;
  if (config.polarizers.p1)
    axes.arm1 = flip_axis(*config.polarizers.p1);
  if (config.polarizers.p2)
    axes.arm2 = wrap_axis(*config.polarizers.p2);
  return axes;
}

InputPolarization input_polarization(const InterferometerConfig& config) {
  InputPolarization in;
  if (config.polarizers.p0) {
    const double a = *config.polarizers.p0;
    in.modes.push_back({JonesVector(std::cos(a), std::sin(a)), 1.0});
  } else {
    in.modes.push_back({JonesVector(1.0, 0.0), 0.5});
    in.modes.push_back({JonesVector(0.0, 1.0), 0.5});
  }
  return in;
}

} // namespace tpmi
