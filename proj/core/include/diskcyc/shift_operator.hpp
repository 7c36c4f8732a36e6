#pragma once

#include <memory>
#include <utility>

#include "diskcyc/sparse_vector.hpp"
#include "diskcyc/weight_sequence.hpp"

namespace diskcyc {

/**
 * A weighted shift, a scalar multiple of the identity, or a direct sum of
 * two such operators under the even/odd index interleaving.
 *
 * Basis actions:
 *   BilateralForward    e_n -> w_n e_{n+1}          (n in Z)
 *   BilateralBackward   e_n -> w_n e_{n-1}          (n in Z)
 *   UnilateralForward   e_n -> w_n e_{n+1}          (n >= 0)
 *   UnilateralBackward  e_0 -> 0, e_n -> w_n e_{n-1} (n >= 1)
 *   Scalar              x -> lambda x
 *   DirectSum           left acts on even slots 2k, right on odd slots 2k+1
 *
 * Values are immutable after construction; every operation is pure.
 */
class ShiftOperator {
 public:
  enum class Kind {
    BilateralForward,
    BilateralBackward,
    UnilateralForward,
    UnilateralBackward,
    Scalar,
    DirectSum,
  };

  static ShiftOperator bilateral_forward(WeightSequence weights);
  static ShiftOperator bilateral_backward(WeightSequence weights);
  static ShiftOperator unilateral_forward(WeightSequence weights);
  static ShiftOperator unilateral_backward(WeightSequence weights);
  static ShiftOperator scalar(Complex lambda);
  static ShiftOperator direct_sum(ShiftOperator left, ShiftOperator right);

  Kind kind() const { return kind_; }
  bool is_shift() const { return kind_ != Kind::Scalar && kind_ != Kind::DirectSum; }
  bool is_forward() const {
    return kind_ == Kind::BilateralForward || kind_ == Kind::UnilateralForward;
  }
  bool is_unilateral() const {
    return kind_ == Kind::UnilateralForward || kind_ == Kind::UnilateralBackward;
  }

  const WeightSequence& weights() const;  // shifts only
  Complex lambda() const;                 // scalar only
  const ShiftOperator& left() const;      // direct sums only
  const ShiftOperator& right() const;

  /// Operator norm bound: sup |w_n|, |lambda|, or the max over components.
  double norm_bound() const;

  /// Bilateral shifts with our table+tail weights are always invertible
  /// (inf |w_n| > 0); unilateral shifts never are; scalars iff lambda != 0.
  bool is_invertible() const;

  SparseVector apply(const SparseVector& x) const;

  /// n-fold apply. Shift kinds take the fast path: each basis entry e_j
  /// maps to (window product) e_{j +- n} with the product accumulated in
  /// log-modulus + phase form.
  SparseVector apply_power(const SparseVector& x, long n) const;

  /// Hilbert adjoint: <Tx, y> = <x, adjoint() y> on all finite supports.
  ShiftOperator adjoint() const;

  /// Two-sided inverse; throws std::domain_error for unilateral shifts and
  /// the zero scalar.
  ShiftOperator inverse() const;

  /// Right inverse S with T(S x) = x on finitely supported x in the range
  /// side. Coincides with inverse() for bilateral shifts; for a unilateral
  /// backward shift S e_n = (1/w_{n+1}) e_{n+1}. Unilateral forward shifts
  /// are not surjective and are rejected.
  ShiftOperator right_inverse() const;

 private:
  ShiftOperator(Kind kind, WeightSequence weights);
  explicit ShiftOperator(Complex lambda);
  ShiftOperator(std::shared_ptr<const ShiftOperator> left,
                std::shared_ptr<const ShiftOperator> right);

  Kind kind_;
  std::shared_ptr<const WeightSequence> weights_;
  Complex lambda_{0.0, 0.0};
  std::shared_ptr<const ShiftOperator> left_;
  std::shared_ptr<const ShiftOperator> right_;
};

/// Interleave two vectors: even slot 2k takes left_k, odd slot 2k+1 takes
/// right_k. This is the index convention DirectSum operators act through.
SparseVector interleave(const SparseVector& left, const SparseVector& right);

/// Inverse of interleave: (even part, odd part) as component vectors.
std::pair<SparseVector, SparseVector> deinterleave(const SparseVector& x);

}  // namespace diskcyc
