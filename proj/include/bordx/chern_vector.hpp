#pragma once

#include <map>
#include <vector>

#include "bordx/integer.hpp"
#include "bordx/partition.hpp"

namespace bordx {

// A U-bordism class of complex dimension n, stored as its Chern numbers c_w
// indexed by the partitions of n (in partition_list(n) order).
class ChernVector {
 public:
  ChernVector() : ChernVector(0) {}
  explicit ChernVector(int n);
  static ChernVector from_map(int n, const std::map<Partition, Integer>& numbers);
  // The class of a point: the dimension 0 vector with c_() = 1.
  static ChernVector point();

  int dimension() const noexcept { return n_; }
  const std::vector<Integer>& values() const noexcept { return values_; }
  const std::vector<Partition>& keys() const { return partition_list(n_); }

  const Integer& operator[](const Partition& w) const;
  const Integer& at(std::size_t i) const { return values_.at(i); }
  void set(const Partition& w, const Integer& value);
  bool is_zero() const;

  ChernVector& operator+=(const ChernVector& other);
  ChernVector& operator-=(const ChernVector& other);
  ChernVector& operator*=(const Integer& c);
  ChernVector operator-() const;
  friend ChernVector operator+(ChernVector a, const ChernVector& b) { return a += b; }
  friend ChernVector operator-(ChernVector a, const ChernVector& b) { return a -= b; }
  friend ChernVector operator*(ChernVector a, const Integer& c) { return a *= c; }
  friend ChernVector operator*(const Integer& c, ChernVector a) { return a *= c; }
  friend bool operator==(const ChernVector&, const ChernVector&) = default;

 private:
  void check_same_dimension(const ChernVector& other) const;

  int n_;
  std::vector<Integer> values_;
};

}  // namespace bordx
