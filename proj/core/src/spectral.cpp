#include "diskcyc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diskcyc::spectral {

namespace {

void require_two_sided(const WeightSequence& ws) {
  if (ws.side() != Sidedness::TwoSided) {
    throw std::domain_error("spectral estimates require a two-sided weight sequence");
  }
}

/// sup over all window starts j of the length-n log window sum. Windows
/// entirely inside a constant tail all share one value, so only starts
/// overlapping the table region plus one representative per pure tail
/// need scanning.
double sup_log_window(const WeightSequence& ws, long n) {
  const long lo = ws.below_boundary() - n;   // pure neg-tail window
  const long hi = ws.above_boundary() + 1;   // pure pos-tail window
  double sup = -std::numeric_limits<double>::infinity();
  for (long j = lo; j <= hi; ++j) {
    sup = std::max(sup, ws.log_window_sum(j, n));
  }
  return sup;
}

}  // namespace

double outer_radius_estimate(const WeightSequence& ws, long horizon) {
  require_two_sided(ws);
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  const long start = std::max(1L, horizon / 2);
  double radius = 0.0;
  for (long n = start; n <= horizon; ++n) {
    radius = std::max(radius, std::exp(sup_log_window(ws, n) / static_cast<double>(n)));
  }
  return radius;
}

double inner_radius_estimate(const WeightSequence& ws, long horizon) {
  require_two_sided(ws);
  if (!(ws.inf_modulus() > 0.0)) {
    throw std::domain_error("inner radius requires an invertible shift");
  }
  const WeightSequence inverse_weights =
      ws.transformed(+1, [](Complex w) { return Complex{1.0, 0.0} / w; });
  return 1.0 / outer_radius_estimate(inverse_weights, horizon);
}

AnnulusEstimate annulus_estimate(const WeightSequence& ws, long horizon) {
  AnnulusEstimate estimate;
  estimate.outer_radius = outer_radius_estimate(ws, horizon);
  estimate.inner_radius = inner_radius_estimate(ws, horizon);
  estimate.horizon_used = horizon;
  return estimate;
}

Obstruction unit_disk_obstruction(const WeightSequence& ws,
                                  criteria::ShiftDirection /*direction*/, long horizon) {
  return outer_radius_estimate(ws, horizon) < 1.0 - kUnitDiskMargin
             ? Obstruction::Obstructed
             : Obstruction::NotObstructed;
}

}  // namespace diskcyc::spectral
