#include "diskcyc/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diskcyc::criteria {

namespace {

constexpr double kTrendEps = 1e-9;  // slack when judging a trajectory flat

void require_two_sided(const WeightSequence& ws) {
  if (ws.side() != Sidedness::TwoSided) {
    throw std::domain_error("criterion requires a two-sided weight sequence");
  }
}

void require_one_sided(const WeightSequence& ws) {
  if (ws.side() != Sidedness::OneSidedNonNegative) {
    throw std::domain_error("criterion requires a one-sided weight sequence");
  }
}

/// values[n-1] holds the quantity at power n. True when every sample in
/// the trailing trend window sits at or above tau.
bool stays_above(const std::vector<double>& values, double tau, long trailing_start) {
  for (long n = trailing_start; n <= static_cast<long>(values.size()); ++n) {
    if (values[static_cast<std::size_t>(n - 1)] < tau) return false;
  }
  return true;
}

/// Nondecreasing over the trailing window, up to kTrendEps.
bool trend_nondecreasing(const std::vector<double>& values, long trailing_start) {
  const double first = values[static_cast<std::size_t>(trailing_start - 1)];
  const double last = values.back();
  return last >= first - kTrendEps;
}

void append_series(std::vector<EvidenceSample>& evidence, const char* series,
                   const std::vector<double>& values, int q) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    evidence.push_back(EvidenceSample{series, static_cast<long>(i + 1), q, values[i]});
  }
}

/// Powers n at which pred holds, in increasing order.
template <typename Pred>
std::vector<long> collect_witnesses(long horizon, Pred pred) {
  std::vector<long> witnesses;
  for (long n = 1; n <= horizon; ++n) {
    if (pred(n)) witnesses.push_back(n);
  }
  return witnesses;
}

struct JointTrajectories {
  std::vector<double> inverse_product;  // log prod of the inverse-side weights
  std::vector<double> product_ratio;    // log of the two-sided product ratio
};

JointTrajectories joint_trajectories(const WeightSequence& ws, ShiftDirection direction,
                                     long horizon) {
  JointTrajectories t;
  t.inverse_product.reserve(static_cast<std::size_t>(horizon));
  t.product_ratio.reserve(static_cast<std::size_t>(horizon));
  for (long n = 1; n <= horizon; ++n) {
    const double neg_side = ws.log_window_sum(-n, n);  // log prod_{k=1..n} w_{-k}
    const double pos_side = ws.log_window_sum(1, n);   // log prod_{k=1..n} w_{+k}
    if (direction == ShiftDirection::Forward) {
      t.inverse_product.push_back(-neg_side);
      t.product_ratio.push_back(pos_side - neg_side);
    } else {
      t.inverse_product.push_back(-pos_side);
      t.product_ratio.push_back(neg_side - pos_side);
    }
  }
  return t;
}

/// Bounded away from the decay the criterion needs: never dips below -tau
/// over the trailing window and is not trending down either.
bool floored(const std::vector<double>& values, const CriterionConfig& cfg) {
  const long trail = cfg.trailing_start();
  for (long n = trail; n <= static_cast<long>(values.size()); ++n) {
    if (values[static_cast<std::size_t>(n - 1)] <= -cfg.tau_big) return false;
  }
  return trend_nondecreasing(values, trail);
}

/// Shared negative direction for the bilateral verdicts: a necessary
/// product condition either diverges the opposite way over the trailing
/// window or sits on a floor that rules the required decay out.
std::optional<Verdict> necessary_violation(const JointTrajectories& t,
                                           const CriterionConfig& cfg) {
  const long trail = cfg.trailing_start();
  Verdict v;
  v.outcome = Outcome::NotDiskcyclic;
  if (stays_above(t.inverse_product, cfg.tau_big, trail)) {
    v.reason = kReasonInverseProductDiverges;
    return v;
  }
  if (stays_above(t.product_ratio, cfg.tau_big, trail)) {
    v.reason = kReasonRatioDiverges;
    return v;
  }
  if (floored(t.inverse_product, cfg)) {
    v.reason = kReasonInverseProductFloored;
    return v;
  }
  if (floored(t.product_ratio, cfg)) {
    v.reason = kReasonRatioFloored;
    return v;
  }
  return std::nullopt;
}

Verdict bilateral_verdict(const WeightSequence& ws, ShiftDirection direction,
                          const CriterionConfig& cfg) {
  require_two_sided(ws);
  cfg.validate();

  const long N = cfg.horizon;
  const int qmax = cfg.qmax;
  const std::size_t span = static_cast<std::size_t>(2 * qmax + 1);

  // window_min[q][n-1]: min over |h| <= q of the denominator window sum.
  // window_ratio[q][n-1]: max over |h|,|j| <= q of numerator - denominator.
  std::vector<std::vector<double>> window_min(static_cast<std::size_t>(qmax) + 1);
  std::vector<std::vector<double>> window_ratio(static_cast<std::size_t>(qmax) + 1);
  for (auto& v : window_min) v.resize(static_cast<std::size_t>(N));
  for (auto& v : window_ratio) v.resize(static_cast<std::size_t>(N));

  std::vector<double> numerator(span);
  std::vector<double> denominator(span);
  for (long n = 1; n <= N; ++n) {
    for (long h = -qmax; h <= qmax; ++h) {
      const std::size_t slot = static_cast<std::size_t>(h + qmax);
      if (direction == ShiftDirection::Forward) {
        numerator[slot] = ws.log_window_sum(h, n);        // prod_{k=h}^{h+n-1}
        denominator[slot] = ws.log_window_sum(h - n, n);  // prod_{k=h-n}^{h-1}
      } else {
        numerator[slot] = ws.log_window_sum(h + 1 - n, n);  // prod_{k=h+1-n}^{h}
        denominator[slot] = ws.log_window_sum(h + 1, n);    // prod_{k=h+1}^{h+n}
      }
    }
    // Expand |h| <= q incrementally from q = 0 outwards.
    double min_den = denominator[static_cast<std::size_t>(qmax)];
    double max_num = numerator[static_cast<std::size_t>(qmax)];
    for (int q = 0; q <= qmax; ++q) {
      if (q > 0) {
        min_den = std::min({min_den, denominator[static_cast<std::size_t>(qmax - q)],
                            denominator[static_cast<std::size_t>(qmax + q)]});
        max_num = std::max({max_num, numerator[static_cast<std::size_t>(qmax - q)],
                            numerator[static_cast<std::size_t>(qmax + q)]});
      }
      window_min[static_cast<std::size_t>(q)][static_cast<std::size_t>(n - 1)] = min_den;
      window_ratio[static_cast<std::size_t>(q)][static_cast<std::size_t>(n - 1)] =
          max_num - min_den;
    }
  }

  const auto t = joint_trajectories(ws, direction, N);

  Verdict verdict;
  append_series(verdict.evidence, "window_min", window_min[static_cast<std::size_t>(qmax)],
                qmax);
  append_series(verdict.evidence, "window_ratio",
                window_ratio[static_cast<std::size_t>(qmax)], qmax);
  append_series(verdict.evidence, "inverse_product", t.inverse_product, 0);
  append_series(verdict.evidence, "product_ratio", t.product_ratio, 0);

  // The common witness set across every q <= qmax.
  auto witnesses = collect_witnesses(N, [&](long n) {
    for (int q = 0; q <= qmax; ++q) {
      const double a = window_min[static_cast<std::size_t>(q)][static_cast<std::size_t>(n - 1)];
      const double b =
          window_ratio[static_cast<std::size_t>(q)][static_cast<std::size_t>(n - 1)];
      if (!(a > cfg.tau_big && b < -cfg.tau_big)) return false;
    }
    return true;
  });
  if (!witnesses.empty()) {
    verdict.outcome = Outcome::Diskcyclic;
    verdict.reason = direction == ShiftDirection::Forward ? kReasonForwardCriterion
                                                          : kReasonBackwardCriterion;
    verdict.witness_sequence = std::move(witnesses);
    return verdict;
  }

  if (auto negative = necessary_violation(t, cfg)) {
    negative->evidence = std::move(verdict.evidence);
    return *negative;
  }

  verdict.outcome = Outcome::Inconclusive;
  verdict.reason = kReasonHorizonExhausted;
  return verdict;
}

}  // namespace

void CriterionConfig::validate() const {
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  if (qmax < 0) throw std::invalid_argument("qmax must be nonnegative");
  if (horizon < 4 * static_cast<long>(qmax)) {
    throw std::invalid_argument("horizon must be at least 4*qmax");
  }
  if (!(tau_big > 0.0)) throw std::invalid_argument("tau_big must be positive");
  if (!(trend_fraction > 0.0 && trend_fraction < 1.0)) {
    throw std::invalid_argument("trend_fraction must lie in (0, 1)");
  }
}

long CriterionConfig::trailing_start() const {
  const long start =
      static_cast<long>(std::floor(static_cast<double>(horizon) * (1.0 - trend_fraction))) + 1;
  return std::clamp(start, 1L, horizon);
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Diskcyclic:
      return "Diskcyclic";
    case Outcome::NotDiskcyclic:
      return "NotDiskcyclic";
    case Outcome::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

double log_window_product(const WeightSequence& ws, long j, long n) {
  return ws.log_window_sum(j, n);
}

Verdict forward_bilateral_verdict(const WeightSequence& ws, const CriterionConfig& cfg) {
  return bilateral_verdict(ws, ShiftDirection::Forward, cfg);
}

Verdict backward_bilateral_verdict(const WeightSequence& ws, const CriterionConfig& cfg) {
  return bilateral_verdict(ws, ShiftDirection::Backward, cfg);
}

std::optional<Verdict> bounded_below_joint_search(const WeightSequence& ws,
                                                  ShiftDirection direction,
                                                  const CriterionConfig& cfg) {
  require_two_sided(ws);
  cfg.validate();

  // Hypothesis: |w_n| bounded below on the inverse-side tail. Nonzero
  // table+tail weights always satisfy it; the signal exists for callers.
  const double relevant_inf =
      direction == ShiftDirection::Forward ? std::abs(ws.neg_tail()) : std::abs(ws.pos_tail());
  if (!(relevant_inf > 0.0) || !(ws.inf_modulus() > 0.0)) return std::nullopt;

  const auto t = joint_trajectories(ws, direction, cfg.horizon);

  Verdict verdict;
  append_series(verdict.evidence, "inverse_product", t.inverse_product, 0);
  append_series(verdict.evidence, "product_ratio", t.product_ratio, 0);

  // Greedy joint scan: powers where both conditions hold simultaneously.
  auto witnesses = collect_witnesses(cfg.horizon, [&](long n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    return t.inverse_product[i] < -cfg.tau_big && t.product_ratio[i] < -cfg.tau_big;
  });
  if (!witnesses.empty()) {
    verdict.outcome = Outcome::Diskcyclic;
    verdict.reason = direction == ShiftDirection::Forward ? kReasonJointDecayForward
                                                          : kReasonJointDecayBackward;
    verdict.witness_sequence = std::move(witnesses);
    return verdict;
  }

  if (auto negative = necessary_violation(t, cfg)) {
    negative->evidence = std::move(verdict.evidence);
    return *negative;
  }

  verdict.outcome = Outcome::Inconclusive;
  verdict.reason = kReasonHorizonExhausted;
  return verdict;
}

Verdict unilateral_backward_verdict(const WeightSequence& ws, const CriterionConfig& cfg) {
  require_one_sided(ws);
  cfg.validate();

  std::vector<double> product(static_cast<std::size_t>(cfg.horizon));
  std::vector<double> running_sup(static_cast<std::size_t>(cfg.horizon));
  double sup = -std::numeric_limits<double>::infinity();
  for (long n = 1; n <= cfg.horizon; ++n) {
    const double s = ws.log_window_sum(1, n);  // log prod_{k=1..n} w_k
    sup = std::max(sup, s);
    product[static_cast<std::size_t>(n - 1)] = s;
    running_sup[static_cast<std::size_t>(n - 1)] = sup;
  }

  Verdict verdict;
  append_series(verdict.evidence, "forward_product", product, 0);

  const long trail = cfg.trailing_start();
  const double trail_first = running_sup[static_cast<std::size_t>(trail - 1)];
  const bool sup_grew = running_sup.back() > trail_first + kTrendEps;

  if (sup_grew && running_sup.back() > cfg.tau_big) {
    verdict.outcome = Outcome::Diskcyclic;
    verdict.reason = kReasonUnilateralUnbounded;
    verdict.witness_sequence = collect_witnesses(cfg.horizon, [&](long n) {
      return product[static_cast<std::size_t>(n - 1)] > cfg.tau_big;
    });
    return verdict;
  }
  if (!sup_grew) {
    // No new suprema over the trailing window: the running product is
    // numerically bounded, so the limsup condition fails.
    verdict.outcome = Outcome::NotDiskcyclic;
    verdict.reason = kReasonUnilateralBounded;
    return verdict;
  }
  verdict.outcome = Outcome::Inconclusive;
  verdict.reason = kReasonHorizonExhausted;
  return verdict;
}

Verdict supercyclicity_probe(const WeightSequence& ws, ShiftDirection direction,
                             const CriterionConfig& cfg) {
  require_two_sided(ws);
  cfg.validate();

  const auto t = joint_trajectories(ws, direction, cfg.horizon);
  Verdict verdict;
  verdict.reason = kReasonSupercyclicityProbe;
  append_series(verdict.evidence, "product_ratio", t.product_ratio, 0);

  auto witnesses = collect_witnesses(cfg.horizon, [&](long n) {
    return t.product_ratio[static_cast<std::size_t>(n - 1)] < -cfg.tau_big;
  });
  if (!witnesses.empty()) {
    verdict.outcome = Outcome::Diskcyclic;  // probe positive
    verdict.witness_sequence = std::move(witnesses);
    return verdict;
  }

  const long trail = cfg.trailing_start();
  double trailing_min = std::numeric_limits<double>::infinity();
  for (long n = trail; n <= cfg.horizon; ++n) {
    trailing_min = std::min(trailing_min, t.product_ratio[static_cast<std::size_t>(n - 1)]);
  }
  if (trailing_min > -cfg.tau_big && trend_nondecreasing(t.product_ratio, trail)) {
    verdict.outcome = Outcome::NotDiskcyclic;  // probe negative
    return verdict;
  }
  verdict.outcome = Outcome::Inconclusive;
  return verdict;
}

Verdict hypercyclicity_probe(const WeightSequence& ws, ShiftDirection direction,
                             const CriterionConfig& cfg) {
  require_two_sided(ws);
  cfg.validate();

  // Positive-side product and the inverse-side product, both in logs.
  std::vector<double> positive_product(static_cast<std::size_t>(cfg.horizon));
  std::vector<double> inverse_product(static_cast<std::size_t>(cfg.horizon));
  for (long n = 1; n <= cfg.horizon; ++n) {
    const double pos = ws.log_window_sum(1, n);
    const double neg = ws.log_window_sum(-n, n);
    const std::size_t i = static_cast<std::size_t>(n - 1);
    if (direction == ShiftDirection::Forward) {
      positive_product[i] = pos;
      inverse_product[i] = -neg;
    } else {
      positive_product[i] = neg;
      inverse_product[i] = -pos;
    }
  }

  Verdict verdict;
  verdict.reason = kReasonHypercyclicityProbe;
  append_series(verdict.evidence, "positive_product", positive_product, 0);
  append_series(verdict.evidence, "inverse_product", inverse_product, 0);

  auto witnesses = collect_witnesses(cfg.horizon, [&](long n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    return positive_product[i] < -cfg.tau_big && inverse_product[i] < -cfg.tau_big;
  });
  if (!witnesses.empty()) {
    verdict.outcome = Outcome::Diskcyclic;  // probe positive
    verdict.witness_sequence = std::move(witnesses);
    return verdict;
  }

  const long trail = cfg.trailing_start();
  if (stays_above(positive_product, cfg.tau_big, trail) &&
      trend_nondecreasing(positive_product, trail)) {
    // The forward product diverges along every tail, which rules the plain
    // orbit out of density.
    verdict.outcome = Outcome::NotDiskcyclic;  // probe negative
    return verdict;
  }
  verdict.outcome = Outcome::Inconclusive;
  return verdict;
}

Certificate second_criterion_certificate(const ShiftOperator& op, int basis_radius,
                                         const CriterionConfig& cfg) {
  cfg.validate();
  if (basis_radius < 0) throw std::invalid_argument("basis radius must be nonnegative");

  const ShiftOperator S = op.right_inverse();  // throws when none exists

  // Unilateral components restrict the usable basis to nonnegative slots.
  const bool one_sided = [&] {
    const auto walk = [](const ShiftOperator& o, const auto& self) -> bool {
      if (o.kind() == ShiftOperator::Kind::DirectSum) {
        return self(o.left(), self) || self(o.right(), self);
      }
      return o.is_unilateral();
    };
    return walk(op, walk);
  }();

  Certificate cert;
  const long lo = one_sided ? 0 : -static_cast<long>(basis_radius);
  const long hi = basis_radius;
  for (long j = lo; j <= hi; ++j) cert.y_indices.push_back(j);
  for (long k = 1; k <= cfg.horizon; ++k) cert.n_k.push_back(k);

  const std::size_t steps = static_cast<std::size_t>(cfg.horizon);

  // ||T^k e_i|| trajectories, shared across every y.
  std::vector<std::vector<double>> image_norms;
  for (long i : cert.y_indices) {
    std::vector<double> norms(steps);
    SparseVector image = SparseVector::basis(i);
    for (std::size_t k = 0; k < steps; ++k) {
      image = op.apply(image);
      norms[k] = image.norm();
    }
    image_norms.push_back(std::move(norms));
  }

  for (long j : cert.y_indices) {
    const SparseVector y = SparseVector::basis(j);
    Certificate::NormTrajectory traj;
    traj.y_index = j;
    traj.values.resize(steps);

    SparseVector x = y;
    for (long k = 1; k <= cfg.horizon; ++k) {
      x = S.apply(x);
      traj.values[static_cast<std::size_t>(k - 1)] = x.norm();
      const SparseVector reproduced = op.apply_power(x, k);
      cert.reproduction_error =
          std::max(cert.reproduction_error, (reproduced - y).norm());
    }

    for (std::size_t xi = 0; xi < cert.y_indices.size(); ++xi) {
      Certificate::ProductTrajectory prod;
      prod.x_index = cert.y_indices[xi];
      prod.y_index = j;
      prod.values.resize(steps);
      for (std::size_t k = 0; k < steps; ++k) {
        prod.values[k] = image_norms[xi][k] * traj.values[k];
      }
      cert.product_trajectories.push_back(std::move(prod));
    }
    cert.x_norm_trajectories.push_back(std::move(traj));
  }

  const long trail = cfg.trailing_start();
  for (const auto& traj : cert.x_norm_trajectories) {
    for (long k = trail; k <= cfg.horizon; ++k) {
      cert.x_norm_tail = std::max(cert.x_norm_tail, traj.values[static_cast<std::size_t>(k - 1)]);
    }
  }
  for (const auto& prod : cert.product_trajectories) {
    for (long k = trail; k <= cfg.horizon; ++k) {
      cert.product_tail =
          std::max(cert.product_tail, prod.values[static_cast<std::size_t>(k - 1)]);
    }
  }

  cert.passed = cert.x_norm_tail < kCertificateTailTolerance &&
                cert.product_tail < kCertificateTailTolerance &&
                cert.reproduction_error <= kCertificateReproductionTolerance;
  return cert;
}

}  // namespace diskcyc::criteria
