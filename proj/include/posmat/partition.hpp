#pragma once

#include <string>
#include <vector>

#include "posmat/index_set.hpp"

namespace posmat {

// Blocks are kept sorted by smallest member, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t universe, std::vector<IndexSet> blocks);

  static Partition singletons(std::size_t universe);
  static Partition full(std::size_t universe);
  // Restricted-growth string: rgs[i] is the block label of element i.
  static Partition from_rgs(const std::vector<int>& rgs);

  std::size_t universe() const { return universe_; }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  bool operator==(const Partition& o) const { return universe_ == o.universe_ && blocks_ == o.blocks_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  std::string str() const;  // "{1,2}{3}"

 private:
  std::size_t universe_ = 0;
  std::vector<IndexSet> blocks_;
};

// Every block of a lies inside some block of b.
bool is_finer(const Partition& a, const Partition& b);

// All partitions of {0..m-1}, via restricted-growth strings.
std::vector<Partition> all_partitions(std::size_t m);

}  // namespace posmat
