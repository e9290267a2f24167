#include "posmat/partition.hpp"

#include <algorithm>

#include "posmat/error.hpp"

namespace posmat {

Partition::Partition(std::size_t universe, std::vector<IndexSet> blocks)
    : universe_(universe), blocks_(std::move(blocks)) {
  if (universe_ == 0) throw Error(ErrorCode::invalid_argument, "partition universe must be >= 1");
  IndexSet seen(universe_);
  for (const auto& b : blocks_) {
    if (b.universe() != universe_)
      throw Error(ErrorCode::dimension_mismatch, "partition block over the wrong universe");
    if (b.empty()) throw Error(ErrorCode::empty_index_set, "partition blocks must be nonempty");
    if (b.intersects(seen))
      throw Error(ErrorCode::invalid_argument, "partition blocks overlap at " + (b & seen).str());
    seen = seen | b;
  }
  if (!seen.is_full())
    throw Error(ErrorCode::invalid_argument, "partition misses " + seen.complement().str());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.first() < b.first(); });
}

Partition Partition::singletons(std::size_t universe) {
  std::vector<IndexSet> blocks;
  for (std::size_t i = 0; i < universe; ++i) blocks.push_back(IndexSet::from_zero_based(universe, {i}));
  return Partition(universe, std::move(blocks));
}

Partition Partition::full(std::size_t universe) {
  return Partition(universe, {IndexSet::full(universe)});
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
  std::size_t m = rgs.size();
  int top = rgs.empty() ? -1 : *std::max_element(rgs.begin(), rgs.end());
  std::vector<IndexSet> blocks(static_cast<std::size_t>(top + 1), IndexSet(m));
  for (std::size_t i = 0; i < m; ++i) blocks[static_cast<std::size_t>(rgs[i])].insert(i);
  return Partition(m, std::move(blocks));
}

std::string Partition::str() const {
  std::string s;
  for (const auto& b : blocks_) s += b.str();
  return s;
}

bool is_finer(const Partition& a, const Partition& b) {
  if (a.universe() != b.universe())
    throw Error(ErrorCode::dimension_mismatch, "partitions over different universes");
  for (const auto& v : a.blocks()) {
    bool inside = std::any_of(b.blocks().begin(), b.blocks().end(),
                              [&](const IndexSet& w) { return v.is_subset_of(w); });
    if (!inside) return false;
  }
  return true;
}

std::vector<Partition> all_partitions(std::size_t m) {
  std::vector<Partition> out;
  if (m == 0) return out;
  std::vector<int> rgs(m, 0), hi(m, 0);  // hi[i] = max(rgs[0..i-1])
  while (true) {
    out.push_back(Partition::from_rgs(rgs));
    // next restricted-growth string
    std::size_t i = m - 1;
    while (i > 0 && rgs[i] > hi[i]) --i;
    if (i == 0) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      hi[j] = std::max(hi[j - 1], rgs[j - 1]);
    }
  }
  return out;
}

}  // namespace posmat
