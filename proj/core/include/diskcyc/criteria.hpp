#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskcyc/shift_operator.hpp"
#include "diskcyc/weight_sequence.hpp"

namespace diskcyc::criteria {

enum class Outcome { Diskcyclic, NotDiskcyclic, Inconclusive };

enum class ShiftDirection { Forward, Backward };

/**
 * Horizon-bounded stand-ins for the asymptotic limit conditions.
 *
 * A limit "= infinity" is declared when a log-scale trajectory exceeds
 * tau_big (default 30 log-units, about 1e13) over the trailing
 * trend_fraction of the horizon; "= 0" symmetrically at -tau_big. All
 * tail-constant weight sequences are eventually geometric, so the defaults
 * resolve the bundled fixtures decisively.
 */
struct CriterionConfig {
  long horizon = 200;          // N: powers scanned are n = 1..horizon
  int qmax = 8;                // "for all q" truncated at q <= qmax
  double tau_big = 30.0;       // divergence threshold, natural-log units
  double trend_fraction = 0.25;

  void validate() const;  // throws std::invalid_argument on bad settings

  /// First index of the trailing trend window, n in [trailing_start, horizon].
  long trailing_start() const;
};

/// One sampled point of a log-scale trajectory backing a verdict.
struct EvidenceSample {
  std::string series;  // which quantity the sample belongs to
  long n = 0;          // power index
  int q = 0;           // basis radius the quantity was evaluated at
  double log_value = 0.0;
};

/**
 * Three-valued classification outcome with numeric evidence.
 *
 * Diskcyclic carries a nonempty witness_sequence of powers along which the
 * firing criterion's limit conditions hold at the configured thresholds.
 * NotDiskcyclic cites a violated necessary condition. Inconclusive keeps
 * the raw trajectories for inspection.
 *
 * The cyclicity probes reuse this type; for them Diskcyclic means the
 * probed condition tested positive and NotDiskcyclic means negative.
 */
struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string reason;
  std::vector<long> witness_sequence;
  std::vector<EvidenceSample> evidence;

  bool is(Outcome o) const { return outcome == o; }
};

const char* to_string(Outcome outcome);

// Reason tags.
inline constexpr const char* kReasonForwardCriterion = "bilateral-forward-criterion";
inline constexpr const char* kReasonBackwardCriterion = "bilateral-backward-criterion";
inline constexpr const char* kReasonJointDecayForward = "joint-decay-forward";
inline constexpr const char* kReasonJointDecayBackward = "joint-decay-backward";
inline constexpr const char* kReasonInverseProductDiverges = "inverse-product-diverges";
inline constexpr const char* kReasonRatioDiverges = "product-ratio-diverges";
inline constexpr const char* kReasonInverseProductFloored = "inverse-product-floored";
inline constexpr const char* kReasonRatioFloored = "product-ratio-floored";
inline constexpr const char* kReasonUnilateralUnbounded = "unilateral-product-unbounded";
inline constexpr const char* kReasonUnilateralBounded = "unilateral-product-bounded";
inline constexpr const char* kReasonHorizonExhausted = "horizon-exhausted";
inline constexpr const char* kReasonSupercyclicityProbe = "supercyclicity-probe";
inline constexpr const char* kReasonHypercyclicityProbe = "hypercyclicity-probe";

/// sum_{k=j}^{j+n-1} log|w_k|, closed-form across the constant tails.
/// Throws std::domain_error when the window leaves a one-sided domain.
double log_window_product(const WeightSequence& ws, long j, long n);

/**
 * Full two-sided test for a bilateral forward shift: for every q <= qmax,
 * the minimum over |h| <= q of the backward window sums must exceed
 * tau_big while the maximum over |h|,|j| <= q of the window ratio falls
 * below -tau_big, along one common increasing set of powers. The negative
 * direction fires when a necessary product condition diverges the opposite
 * way over the trailing trend window.
 */
Verdict forward_bilateral_verdict(const WeightSequence& ws, const CriterionConfig& cfg);

/// Mirror of forward_bilateral_verdict with the backward windows; agrees
/// with the forward verdict on the reflected weight sequence.
Verdict backward_bilateral_verdict(const WeightSequence& ws, const CriterionConfig& cfg);

/**
 * Joint two-condition search: one increasing sequence of powers along
 * which both the inverse-side product and the two-sided product ratio
 * decay below -tau_big. Greedy scan, faithful to "there is a sequence
 * {n_r}" rather than two independent scans.
 *
 * Returns nullopt when the bounded-below hypothesis on the relevant side
 * fails; with nonzero table+tail weights this cannot happen, but callers
 * are expected to fall back to the full bilateral verdict in that case.
 */
std::optional<Verdict> bounded_below_joint_search(const WeightSequence& ws,
                                                  ShiftDirection direction,
                                                  const CriterionConfig& cfg);

/// Unilateral backward shift test: diskcyclic exactly when the running
/// forward weight product is unbounded (limsup detection by threshold plus
/// growth trend over the trailing window).
Verdict unilateral_backward_verdict(const WeightSequence& ws, const CriterionConfig& cfg);

/// Probe-grade supercyclicity evidence: the single product-ratio decay
/// condition. Positive (Diskcyclic slot) / negative / inconclusive.
Verdict supercyclicity_probe(const WeightSequence& ws, ShiftDirection direction,
                             const CriterionConfig& cfg);

/// Probe-grade hypercyclicity evidence: negative when the positive-side
/// product grows monotonically past tau_big over the trailing window,
/// positive when both one-sided products decay below -tau_big together.
Verdict hypercyclicity_probe(const WeightSequence& ws, ShiftDirection direction,
                             const CriterionConfig& cfg);

inline constexpr double kCertificateTailTolerance = 1e-6;
inline constexpr double kCertificateReproductionTolerance = 1e-10;

/**
 * Constructive check of the second diskcyclicity criterion with
 * S = right_inverse(op) and n_k = k: for every basis vector y = e_j with
 * |j| <= basis_radius, x_k = S^k y must reproduce y under T^k (within
 * 1e-10) while ||x_k|| -> 0 and ||T^k e_i|| * ||x_k|| -> 0. PASS when both
 * trajectory families stay below 1e-6 over the trailing trend window.
 */
struct Certificate {
  struct NormTrajectory {
    long y_index = 0;
    std::vector<double> values;  // ||x_k|| for k = 1..horizon
  };
  struct ProductTrajectory {
    long x_index = 0;
    long y_index = 0;
    std::vector<double> values;  // ||T^k e_i|| * ||x_k||
  };

  std::vector<long> y_indices;
  std::vector<long> n_k;
  std::vector<NormTrajectory> x_norm_trajectories;
  std::vector<ProductTrajectory> product_trajectories;

  double x_norm_tail = 0.0;          // worst trailing-window ||x_k||
  double product_tail = 0.0;         // worst trailing-window product
  double reproduction_error = 0.0;   // max ||T^k x_k - y|| over all k, y
  bool passed = false;
};

Certificate second_criterion_certificate(const ShiftOperator& op, int basis_radius,
                                         const CriterionConfig& cfg);

}  // namespace diskcyc::criteria
