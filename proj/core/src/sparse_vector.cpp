#include "diskcyc/sparse_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diskcyc {

SparseVector::SparseVector(std::initializer_list<std::pair<long, Complex>> entries) {
  for (const auto& [index, value] : entries) set(index, value);
}

SparseVector SparseVector::basis(long index, Complex coefficient) {
  SparseVector v;
  v.set(index, coefficient);
  return v;
}

Complex SparseVector::at(long index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

void SparseVector::set(long index, Complex value) {
  if (value == Complex{0.0, 0.0}) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

long SparseVector::min_index() const {
  if (entries_.empty()) throw std::domain_error("min_index of zero vector");
  return entries_.begin()->first;
}

long SparseVector::max_index() const {
  if (entries_.empty()) throw std::domain_error("max_index of zero vector");
  return entries_.rbegin()->first;
}

double SparseVector::norm() const {
  double peak = 0.0;
  for (const auto& [index, value] : entries_) {
    peak = std::max(peak, std::abs(value));
  }
  if (peak == 0.0) return 0.0;
  // Scale by the peak modulus so squaring cannot overflow.
  double sum = 0.0;
  for (const auto& [index, value] : entries_) {
    const double r = std::abs(value) / peak;
    sum += r * r;
  }
  return peak * std::sqrt(sum);
}

Complex SparseVector::inner_product(const SparseVector& other) const {
  // Iterate the smaller support.
  if (other.entries_.size() < entries_.size()) return std::conj(other.inner_product(*this));
  Complex sum{0.0, 0.0};
  for (const auto& [index, value] : entries_) {
    auto it = other.entries_.find(index);
    if (it != other.entries_.end()) sum += value * std::conj(it->second);
  }
  return sum;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  for (const auto& [index, value] : other.entries_) {
    set(index, at(index) + value);
  }
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  for (const auto& [index, value] : other.entries_) {
    set(index, at(index) - value);
  }
  return *this;
}

SparseVector& SparseVector::operator*=(Complex scale) {
  if (scale == Complex{0.0, 0.0}) {
    entries_.clear();
    return *this;
  }
  for (auto& [index, value] : entries_) value *= scale;
  return *this;
}

double max_entry_distance(const SparseVector& x, const SparseVector& y) {
  double worst = 0.0;
  for (const auto& [index, value] : x.entries()) {
    worst = std::max(worst, std::abs(value - y.at(index)));
  }
  for (const auto& [index, value] : y.entries()) {
    worst = std::max(worst, std::abs(x.at(index) - value));
  }
  return worst;
}

}  // namespace diskcyc
