#pragma once

#include <vector>

#include "diskcyc/shift_operator.hpp"
#include "diskcyc/sparse_vector.hpp"

namespace diskcyc::orbit {

/// Complex scaling coefficient confined to the closed unit disk. Inputs up
/// to 1e-12 past the boundary are renormalized onto it; anything larger is
/// rejected.
class DiskCoefficient {
 public:
  DiskCoefficient() = default;  // zero coefficient
  explicit DiskCoefficient(Complex value);

  Complex value() const { return value_; }
  double modulus() const;

 private:
  Complex value_{0.0, 0.0};
};

/// A disk-orbit approximation step: alpha T^n x lands within `residual`
/// of the target.
struct ApproxWitness {
  long n = 0;
  DiskCoefficient alpha;
  double residual = 0.0;
};

struct CoefficientFit {
  DiskCoefficient alpha;
  double residual = 0.0;
};

/// Exact minimizer of ||alpha v - y|| over the closed unit disk: the least
/// squares coefficient <y,v>/||v||^2, radially clamped to modulus 1. The
/// zero vector yields alpha = 0 with residual ||y||.
CoefficientFit optimal_disk_coefficient(const SparseVector& v, const SparseVector& y);

struct WitnessSearchResult {
  bool found = false;   // residual <= tol reached within the horizon
  ApproxWitness best;   // first hit when found, else the best attempt seen
};

/// Scans n = 0..horizon for the first power whose optimally scaled image
/// approximates y within tol. The best residual is non-increasing in the
/// horizon.
WitnessSearchResult witness_search(const ShiftOperator& op, const SparseVector& x,
                                   const SparseVector& y, long horizon, double tol);

/// Empirical stand-in for disk-orbit density over a finite target set.
struct DensityReport {
  struct TargetResult {
    std::size_t target = 0;  // index into the supplied target list
    bool hit = false;
    ApproxWitness best;
  };

  std::size_t targets_total = 0;
  std::size_t targets_hit = 0;
  double worst_residual = 0.0;
  std::vector<TargetResult> per_target;
};

DensityReport density_probe(const ShiftOperator& op, const SparseVector& x,
                            const std::vector<SparseVector>& targets, long horizon,
                            double tol);

/**
 * Constructive disk-transitivity step: a point z near x whose scaled power
 * image lands near y. With S = right_inverse(op), each power n uses
 * z_n = x + (1/alpha_n) S^n y and the telescoped identity
 * alpha_n T^n z_n = alpha_n T^n x + y, with alpha_n = min(1,
 * sqrt(||S^n y|| / ||T^n x||)) equalizing the two error terms. The power
 * minimizing max(input_residual, output_residual) is returned.
 */
struct TransitivityWitness {
  SparseVector z;
  long n = 0;
  DiskCoefficient alpha;
  double input_residual = 0.0;   // ||z - x||
  double output_residual = 0.0;  // ||alpha T^n z - y||
};

TransitivityWitness transitivity_witness(const ShiftOperator& op, const SparseVector& x,
                                         const SparseVector& y, long horizon);

/// Closure of the disk orbit of 1 under multiplication by lambda.
enum class ScalarClosure { UnitDisk, WholePlane };

ScalarClosure scalar_orbit_closure(Complex lambda);

/// Exact distance from z to that closure: 0 when |lambda| > 1, else
/// max(0, |z| - 1).
double membership_residual(Complex lambda, Complex z);

/// max_{n <= horizon} ||T^n x|| and the first power attaining it. A sup
/// that stays provably bounded refutes x as a diskcyclic vector candidate.
struct OrbitSupReport {
  double sup_norm = 0.0;
  long argmax_n = 0;
};

OrbitSupReport orbit_sup_monitor(const ShiftOperator& op, const SparseVector& x,
                                 long horizon);

}  // namespace diskcyc::orbit
