#include "diskcyc/cli/classify.hpp"

#include <cmath>

namespace diskcyc::cli {

using criteria::CriterionConfig;
using criteria::Outcome;
using criteria::ShiftDirection;
using criteria::Verdict;

namespace {

Verdict classify_scalar(Complex lambda) {
  Verdict verdict;
  const double modulus = std::abs(lambda);
  verdict.evidence.push_back(
      criteria::EvidenceSample{"log_modulus", 1, 0, std::log(modulus)});
  if (modulus > 1.0) {
    // The scaled orbit of 1 sweeps disks of radius |lambda|^n, which
    // exhaust the plane.
    verdict.outcome = Outcome::Diskcyclic;
    verdict.reason = kReasonScalarGrowth;
    verdict.witness_sequence = {1};
  } else {
    verdict.outcome = Outcome::NotDiskcyclic;
    verdict.reason = kReasonScalarBounded;
  }
  return verdict;
}

Verdict classify_bilateral(const WeightSequence& ws, ShiftDirection direction,
                           const CriterionConfig& cfg) {
  auto joint = criteria::bounded_below_joint_search(ws, direction, cfg);
  if (joint && !joint->is(Outcome::Inconclusive)) return *joint;

  Verdict full = direction == ShiftDirection::Forward
                     ? criteria::forward_bilateral_verdict(ws, cfg)
                     : criteria::backward_bilateral_verdict(ws, cfg);
  if (!full.is(Outcome::Inconclusive)) return full;
  return joint ? *joint : full;
}

}  // namespace

Verdict classify_operator(const ShiftOperator& op, const CriterionConfig& cfg) {
  switch (op.kind()) {
    case ShiftOperator::Kind::BilateralForward:
      return classify_bilateral(op.weights(), ShiftDirection::Forward, cfg);
    case ShiftOperator::Kind::BilateralBackward:
      return classify_bilateral(op.weights(), ShiftDirection::Backward, cfg);
    case ShiftOperator::Kind::UnilateralBackward:
      return criteria::unilateral_backward_verdict(op.weights(), cfg);
    case ShiftOperator::Kind::Scalar:
      return classify_scalar(op.lambda());
    case ShiftOperator::Kind::UnilateralForward: {
      Verdict verdict;
      verdict.outcome = Outcome::Inconclusive;
      verdict.reason = kReasonNoCriterion;
      return verdict;
    }
    case ShiftOperator::Kind::DirectSum: {
      const Verdict left = classify_operator(op.left(), cfg);
      const Verdict right = classify_operator(op.right(), cfg);
      Verdict verdict;
      if (left.is(Outcome::NotDiskcyclic) || right.is(Outcome::NotDiskcyclic)) {
        verdict.outcome = Outcome::NotDiskcyclic;
        verdict.reason = kReasonDirectSumComponent;
      } else {
        verdict.outcome = Outcome::Inconclusive;
        verdict.reason = kReasonDirectSumUndecided;
      }
      return verdict;
    }
  }
  Verdict verdict;
  verdict.reason = kReasonNoCriterion;
  return verdict;
}

}  // namespace diskcyc::cli
