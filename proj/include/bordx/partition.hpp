#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bordx {

// A partition of n, stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int multiplicity(int part) const;

  // "2,1,1"; the empty partition renders as "".
  std::string key() const;
  static Partition parse(std::string_view key);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Visits the partitions of n in decreasing lexicographic order.
void for_each_partition(int n, std::optional<int> max_part,
                        const std::function<void(const Partition&)>& fn);

std::vector<Partition> partitions(int n, std::optional<int> max_part = std::nullopt);

// Shared, cached list of all partitions of n (decreasing lexicographic order)
// together with the position of each partition in that list.
const std::vector<Partition>& partition_list(int n);
std::size_t partition_index(const Partition& p);

}  // namespace bordx
