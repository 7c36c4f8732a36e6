#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "diskcyc/shift_operator.hpp"
#include "diskcyc/sparse_vector.hpp"
#include "diskcyc/weight_sequence.hpp"

namespace diskcyc::testing {

using Rng = std::mt19937_64;

inline Complex random_weight(Rng& rng, double log_lo, double log_hi, bool real_positive) {
  std::uniform_real_distribution<double> log_mod{log_lo, log_hi};
  const double modulus = std::exp(log_mod(rng));
  if (real_positive) return Complex{modulus, 0.0};
  std::uniform_real_distribution<double> angle{0.0, 2.0 * M_PI};
  const double phi = angle(rng);
  return Complex{modulus * std::cos(phi), modulus * std::sin(phi)};
}

struct WeightGenOptions {
  int table_radius = 4;
  double log_lo = -1.2;
  double log_hi = 1.2;
  bool real_positive = true;
  Sidedness side = Sidedness::TwoSided;
};

inline WeightSequence random_weight_sequence(Rng& rng, const WeightGenOptions& opt = {}) {
  const Complex neg = random_weight(rng, opt.log_lo, opt.log_hi, opt.real_positive);
  const Complex pos = random_weight(rng, opt.log_lo, opt.log_hi, opt.real_positive);
  WeightSequence::Table table;
  std::uniform_int_distribution<int> radius{0, opt.table_radius};
  const int r = radius(rng);
  const long lo = opt.side == Sidedness::OneSidedNonNegative ? 0 : -static_cast<long>(r);
  for (long k = lo; k <= r; ++k) {
    table[k] = random_weight(rng, opt.log_lo, opt.log_hi, opt.real_positive);
  }
  if (r == 0 && opt.side == Sidedness::TwoSided) table.clear();  // mix in empty tables
  return WeightSequence{neg, pos, std::move(table), opt.side};
}

inline SparseVector random_vector(Rng& rng, long radius, int max_support,
                                  bool nonnegative_indices = false) {
  std::uniform_int_distribution<int> support{1, max_support};
  std::uniform_int_distribution<long> index{nonnegative_indices ? 0 : -radius, radius};
  std::uniform_real_distribution<double> coeff{-2.0, 2.0};
  SparseVector v;
  const int count = support(rng);
  for (int i = 0; i < count; ++i) {
    v.set(index(rng), Complex{coeff(rng), coeff(rng)});
  }
  return v;
}

/// Any operator variant, weighted toward single shifts; direct sums nest
/// one level.
inline ShiftOperator random_operator(Rng& rng, bool allow_direct_sum = true) {
  std::uniform_int_distribution<int> pick{0, allow_direct_sum ? 6 : 4};
  WeightGenOptions two_sided;
  two_sided.log_lo = -0.7;
  two_sided.log_hi = 0.7;
  two_sided.real_positive = false;
  WeightGenOptions one_sided = two_sided;
  one_sided.side = Sidedness::OneSidedNonNegative;
  switch (pick(rng)) {
    case 0:
      return ShiftOperator::bilateral_forward(random_weight_sequence(rng, two_sided));
    case 1:
      return ShiftOperator::bilateral_backward(random_weight_sequence(rng, two_sided));
    case 2:
      return ShiftOperator::unilateral_forward(random_weight_sequence(rng, one_sided));
    case 3:
      return ShiftOperator::unilateral_backward(random_weight_sequence(rng, one_sided));
    case 4:
      return ShiftOperator::scalar(random_weight(rng, -0.7, 0.7, false));
    default:
      return ShiftOperator::direct_sum(random_operator(rng, false),
                                       random_operator(rng, false));
  }
}

/// True when vectors fed to op must keep nonnegative indices.
inline bool needs_nonnegative_support(const ShiftOperator& op) {
  if (op.kind() == ShiftOperator::Kind::DirectSum) {
    return needs_nonnegative_support(op.left()) || needs_nonnegative_support(op.right());
  }
  return op.is_unilateral();
}

// ---- independent oracles -------------------------------------------------

/// n-fold apply, the slow reference for apply_power.
inline SparseVector repeated_apply(const ShiftOperator& op, const SparseVector& x, long n) {
  SparseVector out = x;
  for (long i = 0; i < n; ++i) out = op.apply(out);
  return out;
}

/// Term-by-term window sum, the slow reference for log_window_product.
inline double naive_log_window(const WeightSequence& ws, long j, long n) {
  double sum = 0.0;
  for (long k = j; k < j + n; ++k) sum += std::log(std::abs(ws.weight_at(k)));
  return sum;
}

inline double relative_gap(const SparseVector& got, const SparseVector& expected) {
  return (got - expected).norm() / (1.0 + expected.norm());
}

}  // namespace diskcyc::testing
