#pragma once

#include "diskcyc/criteria.hpp"
#include "diskcyc/weight_sequence.hpp"

namespace diskcyc::spectral {

/// Estimated spectral annulus of a bilateral weighted shift. For the
/// table+tail weight class the spectrum is a single annulus (or disk), so
/// two radii describe it completely.
struct AnnulusEstimate {
  double outer_radius = 0.0;
  double inner_radius = 0.0;
  long horizon_used = 0;
};

/// Spectral radius via the window-product growth rate: the maximum over
/// the trailing half of the horizon of sup_j (window product)^(1/n). The
/// trailing half damps table-edge effects; for tail-constant weights the
/// estimate converges to the larger tail modulus.
double outer_radius_estimate(const WeightSequence& ws, long horizon);

/// Reciprocal of the inverse shift's outer radius. Bilateral table+tail
/// shifts are always invertible, so this is total on two-sided input.
double inner_radius_estimate(const WeightSequence& ws, long horizon);

AnnulusEstimate annulus_estimate(const WeightSequence& ws, long horizon);

enum class Obstruction { Obstructed, NotObstructed };

inline constexpr double kUnitDiskMargin = 1e-6;

/// Spectrum-inside-the-open-unit-disk obstruction: a shift whose whole
/// annulus sits strictly inside the unit disk has bounded disk orbits and
/// cannot be diskcyclic. The sweep depends only on weight moduli, so both
/// shift directions share the estimate.
Obstruction unit_disk_obstruction(const WeightSequence& ws,
                                  criteria::ShiftDirection direction, long horizon);

}  // namespace diskcyc::spectral
