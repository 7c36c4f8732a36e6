#include "diskcyc/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diskcyc::orbit {

namespace {
constexpr double kDiskSlack = 1e-12;
}

DiskCoefficient::DiskCoefficient(Complex value) : value_(value) {
  const double modulus = std::abs(value_);
  if (modulus > 1.0 + kDiskSlack) {
    throw std::invalid_argument("disk coefficient modulus exceeds 1");
  }
  if (modulus > 1.0) value_ /= modulus;  // renormalize numerical overshoot
}

double DiskCoefficient::modulus() const { return std::abs(value_); }

CoefficientFit optimal_disk_coefficient(const SparseVector& v, const SparseVector& y) {
  CoefficientFit fit;
  const double v_norm = v.norm();
  if (v_norm == 0.0) {
    fit.alpha = DiskCoefficient{Complex{0.0, 0.0}};
    fit.residual = y.norm();
    return fit;
  }
  Complex alpha = y.inner_product(v) / (v_norm * v_norm);
  const double modulus = std::abs(alpha);
  if (modulus > 1.0) alpha /= modulus;  // radial clamp onto the disk
  fit.alpha = DiskCoefficient{alpha};
  fit.residual = (alpha * v - y).norm();
  return fit;
}

WitnessSearchResult witness_search(const ShiftOperator& op, const SparseVector& x,
                                   const SparseVector& y, long horizon, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");

  WitnessSearchResult result;
  result.best.residual = std::numeric_limits<double>::infinity();

  SparseVector image = x;
  for (long n = 0; n <= horizon; ++n) {
    if (n > 0) image = op.apply(image);
    const CoefficientFit fit = optimal_disk_coefficient(image, y);
    if (fit.residual < result.best.residual) {
      result.best = ApproxWitness{n, fit.alpha, fit.residual};
    }
    if (fit.residual <= tol) {
      result.found = true;
      result.best = ApproxWitness{n, fit.alpha, fit.residual};
      return result;
    }
  }
  return result;
}

DensityReport density_probe(const ShiftOperator& op, const SparseVector& x,
                            const std::vector<SparseVector>& targets, long horizon,
                            double tol) {
  if (targets.empty()) throw std::invalid_argument("density probe needs targets");

  DensityReport report;
  report.targets_total = targets.size();
  report.per_target.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const WitnessSearchResult search = witness_search(op, x, targets[i], horizon, tol);
    DensityReport::TargetResult entry;
    entry.target = i;
    entry.hit = search.found;
    entry.best = search.best;
    if (entry.hit) ++report.targets_hit;
    report.worst_residual = std::max(report.worst_residual, entry.best.residual);
    report.per_target.push_back(std::move(entry));
  }
  return report;
}

TransitivityWitness transitivity_witness(const ShiftOperator& op, const SparseVector& x,
                                         const SparseVector& y, long horizon) {
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  const ShiftOperator S = op.right_inverse();

  TransitivityWitness best;
  double best_score = std::numeric_limits<double>::infinity();

  SparseVector forward_image = x;   // T^n x
  SparseVector backward_image = y;  // S^n y
  for (long n = 0; n <= horizon; ++n) {
    if (n > 0) {
      forward_image = op.apply(forward_image);
      backward_image = S.apply(backward_image);
    }
    const double t_norm = forward_image.norm();
    const double s_norm = backward_image.norm();

    // Equalize the two error terms; alpha = 1 when T^n x = 0 (any alpha is
    // optimal there and 1 keeps 1/alpha bounded).
    double alpha = 1.0;
    if (t_norm > 0.0 && s_norm > 0.0) {
      alpha = std::min(1.0, std::sqrt(s_norm / t_norm));
      if (!(alpha > 0.0)) alpha = std::numeric_limits<double>::min();
    }

    const double input_residual = s_norm / alpha;
    const double output_residual = alpha * t_norm;
    const double score = std::max(input_residual, output_residual);
    if (score < best_score) {
      best_score = score;
      best.n = n;
      best.alpha = DiskCoefficient{Complex{alpha, 0.0}};
      best.input_residual = input_residual;
      best.output_residual = output_residual;
      best.z = x + (Complex{1.0, 0.0} / alpha) * backward_image;
    }
  }
  return best;
}

ScalarClosure scalar_orbit_closure(Complex lambda) {
  if (lambda == Complex{0.0, 0.0}) {
    throw std::domain_error("zero scalar operator has a degenerate orbit");
  }
  return std::abs(lambda) > 1.0 ? ScalarClosure::WholePlane : ScalarClosure::UnitDisk;
}

double membership_residual(Complex lambda, Complex z) {
  if (scalar_orbit_closure(lambda) == ScalarClosure::WholePlane) return 0.0;
  return std::max(0.0, std::abs(z) - 1.0);
}

OrbitSupReport orbit_sup_monitor(const ShiftOperator& op, const SparseVector& x,
                                 long horizon) {
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  OrbitSupReport report;
  report.sup_norm = x.norm();
  report.argmax_n = 0;
  SparseVector image = x;
  for (long n = 1; n <= horizon; ++n) {
    image = op.apply(image);
    const double norm = image.norm();
    if (norm > report.sup_norm) {
      report.sup_norm = norm;
      report.argmax_n = n;
    }
  }
  return report;
}

}  // namespace diskcyc::orbit
