#include "diskcyc/weight_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace diskcyc {

Complex LogPhase::value() const {
  const double modulus = std::exp(log_modulus);
  return Complex{modulus * std::cos(phase), modulus * std::sin(phase)};
}

WeightSequence::WeightSequence(Complex neg_tail, Complex pos_tail, Table table,
                               Sidedness side)
    : neg_tail_(neg_tail), pos_tail_(pos_tail), table_(std::move(table)), side_(side) {
  if (!table_.empty()) {
    below_boundary_ = table_.begin()->first;
    above_boundary_ = table_.rbegin()->first;
  }
  validate();
  for (const auto& [index, value] : table_) {
    table_logs_[index] = std::log(std::abs(value));
    table_phases_[index] = std::arg(value);
  }
}

WeightSequence WeightSequence::constant(Complex w, Sidedness side) {
  return WeightSequence{w, w, {}, side};
}

WeightSequence WeightSequence::split(Complex neg, Complex pos) {
  return WeightSequence{neg, pos, {}, Sidedness::TwoSided};
}

void WeightSequence::validate() const {
  if (neg_tail_ == Complex{0.0, 0.0} || pos_tail_ == Complex{0.0, 0.0}) {
    throw std::invalid_argument("weight sequence tails must be nonzero");
  }
  long expected = below_boundary_;
  for (const auto& [index, value] : table_) {
    if (value == Complex{0.0, 0.0}) {
      throw std::invalid_argument("zero weight at index " + std::to_string(index));
    }
    if (index != expected) {
      throw std::invalid_argument("weight table has a gap at index " +
                                  std::to_string(expected));
    }
    ++expected;
    if (side_ == Sidedness::OneSidedNonNegative && index < 0) {
      throw std::invalid_argument("negative table index " + std::to_string(index) +
                                  " in a one-sided weight sequence");
    }
  }
}

bool WeightSequence::domain_contains(long n) const {
  return side_ == Sidedness::TwoSided || n >= 0;
}

Complex WeightSequence::weight_at(long n) const {
  if (!domain_contains(n)) {
    throw std::domain_error("index " + std::to_string(n) +
                            " outside one-sided weight domain");
  }
  if (n < below_boundary_) return neg_tail_;
  if (n > above_boundary_) return pos_tail_;
  return table_.at(n);
}

double WeightSequence::log_modulus_at(long n) const {
  if (!domain_contains(n)) {
    throw std::domain_error("index " + std::to_string(n) +
                            " outside one-sided weight domain");
  }
  if (n < below_boundary_) return std::log(std::abs(neg_tail_));
  if (n > above_boundary_) return std::log(std::abs(pos_tail_));
  return table_logs_.at(n);
}

double WeightSequence::sup_modulus() const {
  double sup = std::abs(pos_tail_);  // the pos tail covers infinitely many indices
  const long domain_min = side_ == Sidedness::TwoSided
                              ? std::numeric_limits<long>::min()
                              : 0L;
  if (side_ == Sidedness::TwoSided || below_boundary_ > 0) {
    sup = std::max(sup, std::abs(neg_tail_));
  }
  for (const auto& [index, value] : table_) {
    if (index >= domain_min) sup = std::max(sup, std::abs(value));
  }
  return sup;
}

double WeightSequence::inf_modulus() const {
  double inf = std::abs(pos_tail_);
  const long domain_min = side_ == Sidedness::TwoSided
                              ? std::numeric_limits<long>::min()
                              : 0L;
  if (side_ == Sidedness::TwoSided || below_boundary_ > 0) {
    inf = std::min(inf, std::abs(neg_tail_));
  }
  for (const auto& [index, value] : table_) {
    if (index >= domain_min) inf = std::min(inf, std::abs(value));
  }
  return inf;
}

double WeightSequence::log_window_sum(long j, long n) const {
  if (n < 0) throw std::invalid_argument("negative window length");
  if (n == 0) return 0.0;  // empty product
  if (!domain_contains(j)) {
    throw std::domain_error("window start " + std::to_string(j) +
                            " outside one-sided weight domain");
  }
  const long lo = j;
  const long hi = j + n - 1;
  double sum = 0.0;

  const long below_hi = std::min(hi, below_boundary_ - 1);
  if (below_hi >= lo) {
    sum += static_cast<double>(below_hi - lo + 1) * std::log(std::abs(neg_tail_));
  }
  const long table_lo = std::max(lo, below_boundary_);
  const long table_hi = std::min(hi, above_boundary_);
  if (table_lo <= table_hi) {
    auto it = table_logs_.lower_bound(table_lo);
    for (; it != table_logs_.end() && it->first <= table_hi; ++it) sum += it->second;
  }
  const long above_lo = std::max(lo, above_boundary_ + 1);
  if (above_lo <= hi) {
    sum += static_cast<double>(hi - above_lo + 1) * std::log(std::abs(pos_tail_));
  }
  return sum;
}

LogPhase WeightSequence::window_product_log(long j, long n) const {
  if (n < 0) throw std::invalid_argument("negative window length");
  LogPhase acc;
  if (n == 0) return acc;
  if (!domain_contains(j)) {
    throw std::domain_error("window start " + std::to_string(j) +
                            " outside one-sided weight domain");
  }
  const long lo = j;
  const long hi = j + n - 1;

  const long below_hi = std::min(hi, below_boundary_ - 1);
  if (below_hi >= lo) {
    const double count = static_cast<double>(below_hi - lo + 1);
    acc.log_modulus += count * std::log(std::abs(neg_tail_));
    acc.phase += count * std::arg(neg_tail_);
  }
  const long table_lo = std::max(lo, below_boundary_);
  const long table_hi = std::min(hi, above_boundary_);
  if (table_lo <= table_hi) {
    auto itl = table_logs_.lower_bound(table_lo);
    auto itp = table_phases_.lower_bound(table_lo);
    for (; itl != table_logs_.end() && itl->first <= table_hi; ++itl, ++itp) {
      acc.log_modulus += itl->second;
      acc.phase += itp->second;
    }
  }
  const long above_lo = std::max(lo, above_boundary_ + 1);
  if (above_lo <= hi) {
    const double count = static_cast<double>(hi - above_lo + 1);
    acc.log_modulus += count * std::log(std::abs(pos_tail_));
    acc.phase += count * std::arg(pos_tail_);
  }
  return acc;
}

WeightSequence WeightSequence::reflected() const {
  if (side_ != Sidedness::TwoSided) {
    throw std::domain_error("cannot reflect a one-sided weight sequence");
  }
  // z_n = w_{-n}. Rebuild the table over the reflected span, widened so the
  // empty-table split at zero stays consistent with the tails.
  const long lo = std::min(-above_boundary_, 0L);
  const long hi = std::max(-below_boundary_, -1L);
  Table table;
  for (long k = lo; k <= hi; ++k) table[k] = weight_at(-k);
  return WeightSequence{pos_tail_, neg_tail_, std::move(table), Sidedness::TwoSided};
}

WeightSequence WeightSequence::transformed(
    long index_shift, const std::function<Complex(Complex)>& f) const {
  const Complex new_neg = f(neg_tail_);
  const Complex new_pos = f(pos_tail_);
  long lo = std::min(below_boundary_ + index_shift, 0L);
  long hi = std::max(above_boundary_ + index_shift, -1L);
  if (side_ == Sidedness::OneSidedNonNegative) {
    lo = std::max(lo, 0L);
    hi = std::max(hi, -1L);
  }
  Table table;
  for (long k = lo; k <= hi; ++k) {
    const long source = k - index_shift;
    // One-sided slots reaching below the domain are unconstrained; extend
    // with the below-table value so the sequence stays total.
    table[k] = domain_contains(source) ? f(weight_at(source)) : new_neg;
  }
  return WeightSequence{new_neg, new_pos, std::move(table), side_};
}

bool WeightSequence::operator==(const WeightSequence& other) const {
  return side_ == other.side_ && neg_tail_ == other.neg_tail_ &&
         pos_tail_ == other.pos_tail_ && table_ == other.table_;
}

}  // namespace diskcyc
