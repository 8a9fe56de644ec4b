#include "bordx/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bordx {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    weight_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::key() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view key) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t end = key.find(',', pos);
    if (end == std::string_view::npos) end = key.size();
    std::string_view tok = key.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("bad partition key: " + std::string(key));
    parts.push_back(value);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void visit(int remaining, int max_part, std::vector<int>& prefix,
           const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    visit(remaining - part, part, prefix, fn);
    prefix.pop_back();
  }
}

struct PartitionCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<std::vector<Partition>>> lists;
  std::map<int, std::unique_ptr<std::map<Partition, std::size_t>>> index;
};

PartitionCache& cache() {
  static PartitionCache c;
  return c;
}

}  // namespace

void for_each_partition(int n, std::optional<int> max_part,
                        const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<int> prefix;
  visit(n, max_part.value_or(n), prefix, fn);
}

std::vector<Partition> partitions(int n, std::optional<int> max_part) {
  std::vector<Partition> out;
  for_each_partition(n, max_part, [&](const Partition& p) { out.push_back(p); });
  return out;
}

const std::vector<Partition>& partition_list(int n) {
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto it = c.lists.find(n);
  if (it == c.lists.end()) {
    auto list = std::make_unique<std::vector<Partition>>(partitions(n));
    auto idx = std::make_unique<std::map<Partition, std::size_t>>();
    for (std::size_t i = 0; i < list->size(); ++i) idx->emplace((*list)[i], i);
    c.index.emplace(n, std::move(idx));
    it = c.lists.emplace(n, std::move(list)).first;
  }
  return *it->second;
}

std::size_t partition_index(const Partition& p) {
  partition_list(p.weight());
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return c.index.at(p.weight())->at(p);
}

}  // namespace bordx
