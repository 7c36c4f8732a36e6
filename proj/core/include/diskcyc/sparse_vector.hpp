#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <utility>

namespace diskcyc {

using Complex = std::complex<double>;

/**
 * Finitely supported complex vector over integer indices.
 *
 * Entries are kept in canonical form: an index is stored only if its
 * coefficient is nonzero, so support_size() is the true support and
 * iteration order is ascending by index.
 */
class SparseVector {
 public:
  using EntryMap = std::map<long, Complex>;

  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<long, Complex>> entries);

  static SparseVector basis(long index, Complex coefficient = Complex{1.0, 0.0});
  static SparseVector zero() { return SparseVector{}; }

  /// Stored coefficient, or exactly zero for absent indices.
  Complex at(long index) const;

  /// Sets a coefficient; an exact zero erases the entry.
  void set(long index, Complex value);

  const EntryMap& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  long min_index() const;  // requires nonempty support
  long max_index() const;

  /// Euclidean norm, computed with scaling so that large coefficients
  /// do not overflow when squared.
  double norm() const;

  /// Standard sesquilinear pairing, conjugate-linear in the second slot:
  /// <x, y> = sum_n x_n * conj(y_n).
  Complex inner_product(const SparseVector& other) const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(Complex scale);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(Complex scale, SparseVector v) { return v *= scale; }
  friend SparseVector operator*(SparseVector v, Complex scale) { return v *= scale; }

  bool operator==(const SparseVector& other) const { return entries_ == other.entries_; }
  bool operator!=(const SparseVector& other) const { return !(*this == other); }

 private:
  EntryMap entries_;
};

/// max_n |x_n - y_n| over the union of both supports.
double max_entry_distance(const SparseVector& x, const SparseVector& y);

}  // namespace diskcyc
