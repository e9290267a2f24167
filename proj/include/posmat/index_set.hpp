#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace posmat {

// Subset of {0..universe-1}. Positions are 0-based in this API; text I/O and
// messages print them 1-based.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe);

  static IndexSet full(std::size_t universe);
  static IndexSet from_mask(std::size_t universe, std::uint64_t mask);
  static IndexSet from_zero_based(std::size_t universe, const std::vector<std::size_t>& members);
  static IndexSet from_one_based(std::size_t universe, std::initializer_list<std::size_t> members);
  static IndexSet from_one_based(std::size_t universe, const std::vector<std::size_t>& members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;
  bool is_full() const { return size() == universe_; }
  bool contains(std::size_t i) const;

  void insert(std::size_t i);
  void erase(std::size_t i);

  IndexSet complement() const;
  IndexSet operator|(const IndexSet& o) const;
  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator-(const IndexSet& o) const;
  bool intersects(const IndexSet& o) const;
  bool is_subset_of(const IndexSet& o) const;

  std::vector<std::size_t> members() const;
  std::vector<std::size_t> one_based() const;
  std::size_t first() const;  // smallest member; universe() when empty

  // Only for universe <= 64.
  std::uint64_t mask() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const IndexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }
  // Lexicographic on sorted member lists.
  bool lex_less(const IndexSet& o) const;

  std::string str() const;  // "{1,3,4}"

 private:
  void check_same(const IndexSet& o) const;
  void check_index(std::size_t i) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace posmat
