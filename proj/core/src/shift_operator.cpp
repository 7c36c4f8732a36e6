#include "diskcyc/shift_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace diskcyc {

namespace {

Complex conjugate(Complex w) { return std::conj(w); }
Complex reciprocal(Complex w) { return Complex{1.0, 0.0} / w; }

void require_two_sided(const WeightSequence& ws, const char* kind) {
  if (ws.side() != Sidedness::TwoSided) {
    throw std::invalid_argument(std::string(kind) + " requires a two-sided weight sequence");
  }
}

void require_one_sided(const WeightSequence& ws, const char* kind) {
  if (ws.side() != Sidedness::OneSidedNonNegative) {
    throw std::invalid_argument(std::string(kind) + " requires a one-sided weight sequence");
  }
}

}  // namespace

ShiftOperator::ShiftOperator(Kind kind, WeightSequence weights)
    : kind_(kind), weights_(std::make_shared<const WeightSequence>(std::move(weights))) {}

ShiftOperator::ShiftOperator(Complex lambda) : kind_(Kind::Scalar), lambda_(lambda) {}

ShiftOperator::ShiftOperator(std::shared_ptr<const ShiftOperator> left,
                             std::shared_ptr<const ShiftOperator> right)
    : kind_(Kind::DirectSum), left_(std::move(left)), right_(std::move(right)) {}

ShiftOperator ShiftOperator::bilateral_forward(WeightSequence weights) {
  require_two_sided(weights, "bilateral forward shift");
  return ShiftOperator{Kind::BilateralForward, std::move(weights)};
}

ShiftOperator ShiftOperator::bilateral_backward(WeightSequence weights) {
  require_two_sided(weights, "bilateral backward shift");
  return ShiftOperator{Kind::BilateralBackward, std::move(weights)};
}

ShiftOperator ShiftOperator::unilateral_forward(WeightSequence weights) {
  require_one_sided(weights, "unilateral forward shift");
  return ShiftOperator{Kind::UnilateralForward, std::move(weights)};
}

ShiftOperator ShiftOperator::unilateral_backward(WeightSequence weights) {
  require_one_sided(weights, "unilateral backward shift");
  return ShiftOperator{Kind::UnilateralBackward, std::move(weights)};
}

ShiftOperator ShiftOperator::scalar(Complex lambda) { return ShiftOperator{lambda}; }

ShiftOperator ShiftOperator::direct_sum(ShiftOperator left, ShiftOperator right) {
  return ShiftOperator{std::make_shared<const ShiftOperator>(std::move(left)),
                       std::make_shared<const ShiftOperator>(std::move(right))};
}

const WeightSequence& ShiftOperator::weights() const {
  if (!is_shift()) throw std::domain_error("operator has no weight sequence");
  return *weights_;
}

Complex ShiftOperator::lambda() const {
  if (kind_ != Kind::Scalar) throw std::domain_error("operator is not scalar");
  return lambda_;
}

const ShiftOperator& ShiftOperator::left() const {
  if (kind_ != Kind::DirectSum) throw std::domain_error("operator is not a direct sum");
  return *left_;
}

const ShiftOperator& ShiftOperator::right() const {
  if (kind_ != Kind::DirectSum) throw std::domain_error("operator is not a direct sum");
  return *right_;
}

double ShiftOperator::norm_bound() const {
  switch (kind_) {
    case Kind::Scalar:
      return std::abs(lambda_);
    case Kind::DirectSum:
      return std::max(left_->norm_bound(), right_->norm_bound());
    default:
      return weights_->sup_modulus();
  }
}

bool ShiftOperator::is_invertible() const {
  switch (kind_) {
    case Kind::Scalar:
      return lambda_ != Complex{0.0, 0.0};
    case Kind::DirectSum:
      return left_->is_invertible() && right_->is_invertible();
    case Kind::BilateralForward:
    case Kind::BilateralBackward:
      return weights_->inf_modulus() > 0.0;
    default:
      return false;  // unilateral shifts: nontrivial kernel or non-surjective
  }
}

SparseVector ShiftOperator::apply(const SparseVector& x) const {
  switch (kind_) {
    case Kind::Scalar: {
      SparseVector out = x;
      out *= lambda_;
      return out;
    }
    case Kind::DirectSum: {
      auto [even, odd] = deinterleave(x);
      return interleave(left_->apply(even), right_->apply(odd));
    }
    default:
      break;
  }
  SparseVector out;
  for (const auto& [index, value] : x.entries()) {
    switch (kind_) {
      case Kind::BilateralForward:
        out.set(index + 1, out.at(index + 1) + weights_->weight_at(index) * value);
        break;
      case Kind::BilateralBackward:
        out.set(index - 1, out.at(index - 1) + weights_->weight_at(index) * value);
        break;
      case Kind::UnilateralForward:
        if (index < 0) {
          throw std::domain_error("negative index fed to a unilateral shift");
        }
        out.set(index + 1, out.at(index + 1) + weights_->weight_at(index) * value);
        break;
      case Kind::UnilateralBackward:
        if (index < 0) {
          throw std::domain_error("negative index fed to a unilateral shift");
        }
        if (index > 0) {
          out.set(index - 1, out.at(index - 1) + weights_->weight_at(index) * value);
        }
        break;
      default:
        break;
    }
  }
  return out;
}

SparseVector ShiftOperator::apply_power(const SparseVector& x, long n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  if (n == 0) return x;
  switch (kind_) {
    case Kind::Scalar: {
      if (lambda_ == Complex{0.0, 0.0}) return SparseVector::zero();
      LogPhase factor{static_cast<double>(n) * std::log(std::abs(lambda_)),
                      static_cast<double>(n) * std::arg(lambda_)};
      SparseVector out = x;
      out *= factor.value();
      return out;
    }
    case Kind::DirectSum: {
      auto [even, odd] = deinterleave(x);
      return interleave(left_->apply_power(even, n), right_->apply_power(odd, n));
    }
    default:
      break;
  }
  SparseVector out;
  for (const auto& [index, value] : x.entries()) {
    if (is_unilateral() && index < 0) {
      throw std::domain_error("negative index fed to a unilateral shift");
    }
    long target = 0;
    LogPhase product;
    switch (kind_) {
      case Kind::BilateralForward:
      case Kind::UnilateralForward:
        target = index + n;
        product = weights_->window_product_log(index, n);
        break;
      case Kind::BilateralBackward:
        target = index - n;
        product = weights_->window_product_log(index - n + 1, n);
        break;
      case Kind::UnilateralBackward:
        if (index < n) continue;  // the orbit of e_j dies after j steps
        target = index - n;
        product = weights_->window_product_log(index - n + 1, n);
        break;
      default:
        break;
    }
    out.set(target, out.at(target) + product.value() * value);
  }
  return out;
}

ShiftOperator ShiftOperator::adjoint() const {
  switch (kind_) {
    case Kind::Scalar:
      return scalar(std::conj(lambda_));
    case Kind::DirectSum:
      return direct_sum(left_->adjoint(), right_->adjoint());
    case Kind::BilateralForward:
      return bilateral_backward(weights_->transformed(+1, conjugate));
    case Kind::BilateralBackward:
      return bilateral_forward(weights_->transformed(-1, conjugate));
    case Kind::UnilateralForward:
      return unilateral_backward(weights_->transformed(+1, conjugate));
    case Kind::UnilateralBackward:
      return unilateral_forward(weights_->transformed(-1, conjugate));
  }
  throw std::logic_error("unreachable");
}

ShiftOperator ShiftOperator::inverse() const {
  switch (kind_) {
    case Kind::Scalar:
      if (lambda_ == Complex{0.0, 0.0}) {
        throw std::domain_error("zero scalar operator is not invertible");
      }
      return scalar(Complex{1.0, 0.0} / lambda_);
    case Kind::DirectSum:
      return direct_sum(left_->inverse(), right_->inverse());
    case Kind::BilateralForward:
      return bilateral_backward(weights_->transformed(+1, reciprocal));
    case Kind::BilateralBackward:
      return bilateral_forward(weights_->transformed(-1, reciprocal));
    default:
      throw std::domain_error("unilateral shifts are not invertible");
  }
}

ShiftOperator ShiftOperator::right_inverse() const {
  switch (kind_) {
    case Kind::BilateralForward:
    case Kind::BilateralBackward:
    case Kind::Scalar:
      return inverse();
    case Kind::DirectSum:
      return direct_sum(left_->right_inverse(), right_->right_inverse());
    case Kind::UnilateralBackward:
      // S e_n = (1/w_{n+1}) e_{n+1}, so that T S = I on all finite supports.
      return unilateral_forward(weights_->transformed(-1, reciprocal));
    case Kind::UnilateralForward:
      throw std::domain_error("unilateral forward shift has no right inverse");
  }
  throw std::logic_error("unreachable");
}

SparseVector interleave(const SparseVector& left, const SparseVector& right) {
  SparseVector out;
  for (const auto& [index, value] : left.entries()) out.set(2 * index, value);
  for (const auto& [index, value] : right.entries()) out.set(2 * index + 1, value);
  return out;
}

std::pair<SparseVector, SparseVector> deinterleave(const SparseVector& x) {
  SparseVector even;
  SparseVector odd;
  for (const auto& [index, value] : x.entries()) {
    if (index % 2 == 0) {
      even.set(index / 2, value);
    } else {
      odd.set((index - 1) / 2, value);
    }
  }
  return {std::move(even), std::move(odd)};
}

}  // namespace diskcyc
