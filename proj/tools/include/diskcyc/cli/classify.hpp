#pragma once

#include "diskcyc/criteria.hpp"
#include "diskcyc/shift_operator.hpp"

namespace diskcyc::cli {

inline constexpr const char* kReasonScalarGrowth = "scalar-modulus-above-one";
inline constexpr const char* kReasonScalarBounded = "scalar-orbit-bounded";
inline constexpr const char* kReasonNoCriterion = "no-applicable-criterion";
inline constexpr const char* kReasonDirectSumComponent = "direct-sum-component";
inline constexpr const char* kReasonDirectSumUndecided = "direct-sum-undecided";

/**
 * Dispatches an operator to the matching classifier.
 *
 * Bilateral shifts run the joint two-condition search first and fall back
 * to the full bilateral criterion when that stays inconclusive. Unilateral
 * backward shifts use the running-product test. Scalars are decided in
 * closed form by |lambda|. A direct sum inherits NotDiskcyclic from any
 * component (a dense interleaved disk orbit would project onto dense
 * component orbits); otherwise it is reported inconclusive. Unilateral
 * forward shifts have no classifier here and come back inconclusive.
 */
criteria::Verdict classify_operator(const ShiftOperator& op,
                                    const criteria::CriterionConfig& cfg);

}  // namespace diskcyc::cli
