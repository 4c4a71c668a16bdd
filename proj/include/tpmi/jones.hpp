#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tpmi/config.hpp"

namespace tpmi {

/// 2×2 complex Jones matrix in the (x, y) basis.
using PolarizationTransform = Eigen::Matrix2cd;
using JonesVector = Eigen::Vector2cd;

/// Ideal linear polarizer: projector onto (cos θ, sin θ).
PolarizationTransform polarizer(double angle);

/// Mirror-image map x ↦ x, y ↦ −y applied on reflection from the beam splitter.
PolarizationTransform handedness_flip();

enum class Port { transmit, reflect };

struct PortAction {
  PolarizationTransform polarization;
  double amplitude;
};

/// Non-polarizing 50/50 splitter. Both ports carry a real 1/√2 amplitude;
/// the reflected port also mirrors the polarization frame.
PortAction beamsplitter_port(Port kind);

/// Wraps an axis angle into [0, π).
double wrap_axis(double angle);
/// Axis as seen after one reflection from the beam splitter. Involution.
double flip_axis(double angle);

struct ChainElement {
  std::string name;
  PolarizationTransform matrix;
};

/// One round trip through an arm, source to detector. `elements` are listed in
/// the order the light meets them; `transform` is their ordered product.
struct ArmChain {
  Arm arm = Arm::one;
  std::vector<ChainElement> elements;
  PolarizationTransform transform = PolarizationTransform::Zero();
  double delay = 0.0;
  bool blocked = false;

  PolarizationTransform rederive() const;
};

/// Arm 1 is reflected on the way in and transmitted on the way out; arm 2 the
/// reverse. Detector-side coordinates are the once-mirrored frame, so P3 is
/// applied after a frame flip. `mirror_offset` displaces M2 (meters).
///
/// Throws DegenerateChain if crossed polarizers zero out an open arm.
ArmChain build_arm_chain(const InterferometerConfig& config, Arm arm,
                         double mirror_offset = 0.0);

struct EffectiveAxes {
  std::optional<double> arm1;
  std::optional<double> arm2;
};

/// Axis each arm selects, referred to the source frame.
EffectiveAxes effective_axes(const InterferometerConfig& config);

struct InputMode {
  JonesVector vector;
  double weight;
};

/// Classical mixture of polarization modes entering the interferometer.
struct InputPolarization {
  std::vector<InputMode> modes;
};

/// Unpolarized light is the equal mixture of x and y; with P0 inserted the
/// source is a single mode along P0.
InputPolarization input_polarization(const InterferometerConfig& config);

} // namespace tpmi
