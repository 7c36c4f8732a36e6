#pragma once

#include <complex>
#include <functional>
#include <map>

namespace diskcyc {

using Complex = std::complex<double>;

enum class Sidedness {
  TwoSided,             // indices range over all of Z
  OneSidedNonNegative,  // indices range over n >= 0
};

/// A weight product accumulated as (sum of log-moduli, sum of phases),
/// so that quantities like 3^400 never overflow an intermediate value.
struct LogPhase {
  double log_modulus = 0.0;
  double phase = 0.0;

  Complex value() const;

  LogPhase& operator+=(const LogPhase& other) {
    log_modulus += other.log_modulus;
    phase += other.phase;
    return *this;
  }
};

/**
 * Two-sided (or one-sided) assignment of nonzero complex weights with a
 * finite explicit table and constant tails.
 *
 * With a nonempty table spanning [lo, hi], indices below lo take neg_tail
 * and indices above hi take pos_tail. With an empty table the split sits
 * at zero: neg_tail for n < 0, pos_tail for n >= 0. Table keys must be
 * contiguous; an interior gap has no defined weight and is rejected.
 *
 * The representation makes every infinite product computable in closed
 * form: any index window decomposes into at most two constant runs plus
 * finitely many table terms.
 */
class WeightSequence {
 public:
  using Table = std::map<long, Complex>;

  WeightSequence(Complex neg_tail, Complex pos_tail, Table table = {},
                 Sidedness side = Sidedness::TwoSided);

  /// All weights equal to w.
  static WeightSequence constant(Complex w, Sidedness side = Sidedness::TwoSided);

  /// neg for n < 0, pos for n >= 0 (the shape of every bilateral example here).
  static WeightSequence split(Complex neg, Complex pos);

  Sidedness side() const { return side_; }
  bool domain_contains(long n) const;

  Complex neg_tail() const { return neg_tail_; }
  Complex pos_tail() const { return pos_tail_; }
  const Table& table() const { return table_; }

  /// Weight at index n; throws std::domain_error outside a one-sided domain.
  Complex weight_at(long n) const;
  double log_modulus_at(long n) const;

  /// sup over the domain of |w_n|; finite by construction.
  double sup_modulus() const;
  /// inf over the domain of |w_n|; > 0 by construction (weights are nonzero).
  double inf_modulus() const;

  /// sum_{k=j}^{j+n-1} log|w_k|, closed-form across the constant tails.
  double log_window_sum(long j, long n) const;

  /// Same window as log_window_sum but with the phase accumulated too,
  /// i.e. the full complex product prod_{k=j}^{j+n-1} w_k in log form.
  LogPhase window_product_log(long j, long n) const;

  /// z_n = w_{-n}. Two-sided only.
  WeightSequence reflected() const;

  /// z_n = f(w_{n - index_shift}), rebuilt so the tail/table split stays
  /// exact. Used for adjoint, inverse and right-inverse weight displays.
  /// For one-sided sequences, slots whose source index falls below the
  /// domain are filled with f(neg_tail); such slots are never read by the
  /// shift actions that use them.
  WeightSequence transformed(long index_shift,
                             const std::function<Complex(Complex)>& f) const;

  bool operator==(const WeightSequence& other) const;

  /// First index governed by the table/pos side (table min, or 0 when empty).
  long below_boundary() const { return below_boundary_; }
  /// Last index before the pos tail takes over (table max, or -1 when empty).
  long above_boundary() const { return above_boundary_; }

 private:
  void validate() const;
  double tail_log(bool negative_side) const;

  Complex neg_tail_;
  Complex pos_tail_;
  Table table_;
  Sidedness side_;
  long below_boundary_ = 0;
  long above_boundary_ = -1;
  std::map<long, double> table_logs_;
  std::map<long, double> table_phases_;
};

}  // namespace diskcyc
