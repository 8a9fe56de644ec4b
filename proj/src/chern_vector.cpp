#include "bordx/chern_vector.hpp"

#include <stdexcept>

namespace bordx {

ChernVector::ChernVector(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  values_.assign(partition_list(n).size(), Integer(0));
}

ChernVector ChernVector::from_map(int n, const std::map<Partition, Integer>& numbers) {
  ChernVector v(n);
  for (const auto& [w, c] : numbers) v.set(w, c);
  return v;
}

ChernVector ChernVector::point() {
  ChernVector v(0);
  v.values_[0] = 1;
  return v;
}

const Integer& ChernVector::operator[](const Partition& w) const {
  if (w.weight() != n_) throw std::invalid_argument("partition " + w.key() + " has the wrong weight");
  return values_[partition_index(w)];
}

void ChernVector::set(const Partition& w, const Integer& value) {
  if (w.weight() != n_) throw std::invalid_argument("partition " + w.key() + " has the wrong weight");
  values_[partition_index(w)] = value;
}

bool ChernVector::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

void ChernVector::check_same_dimension(const ChernVector& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Chern vectors of different dimensions");
}

ChernVector& ChernVector::operator+=(const ChernVector& other) {
  check_same_dimension(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ChernVector& ChernVector::operator-=(const ChernVector& other) {
  check_same_dimension(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ChernVector& ChernVector::operator*=(const Integer& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

ChernVector ChernVector::operator-() const {
  ChernVector out(*this);
  for (auto& v : out.values_) v = -v;
  return out;
}

}  // namespace bordx
