#include "posmat/index_set.hpp"

#include <bit>

#include "posmat/error.hpp"

namespace posmat {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

IndexSet::IndexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

IndexSet IndexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw Error(ErrorCode::invalid_argument, "mask construction needs universe <= 64");
  IndexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  s.trim();
  return s;
}

IndexSet IndexSet::from_zero_based(std::size_t universe, const std::vector<std::size_t>& members) {
  IndexSet s(universe);
  for (auto i : members) s.insert(i);
  return s;
}

IndexSet IndexSet::from_one_based(std::size_t universe, std::initializer_list<std::size_t> members) {
  return from_one_based(universe, std::vector<std::size_t>(members));
}

IndexSet IndexSet::from_one_based(std::size_t universe, const std::vector<std::size_t>& members) {
  IndexSet s(universe);
  for (auto i : members) {
    if (i == 0 || i > universe)
      throw Error(ErrorCode::out_of_range,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(universe));
    s.insert(i - 1);
  }
  return s;
}

std::size_t IndexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool IndexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool IndexSet::contains(std::size_t i) const {
  return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1u);
}

void IndexSet::insert(std::size_t i) {
  check_index(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void IndexSet::erase(std::size_t i) {
  check_index(i);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

IndexSet IndexSet::complement() const {
  IndexSet s(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
  s.trim();
  return s;
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  check_same(o);
  IndexSet s(*this);
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] |= o.words_[w];
  return s;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  check_same(o);
  IndexSet s(*this);
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= o.words_[w];
  return s;
}

IndexSet IndexSet::operator-(const IndexSet& o) const {
  check_same(o);
  IndexSet s(*this);
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= ~o.words_[w];
  return s;
}

bool IndexSet::intersects(const IndexSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

bool IndexSet::is_subset_of(const IndexSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<std::size_t> IndexSet::one_based() const {
  auto m = members();
  for (auto& i : m) ++i;
  return m;
}

std::size_t IndexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

std::uint64_t IndexSet::mask() const {
  if (universe_ > 64) throw Error(ErrorCode::invalid_argument, "mask() needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

bool IndexSet::lex_less(const IndexSet& o) const {
  auto a = members();
  auto b = o.members();
  return a < b;
}

std::string IndexSet::str() const {
  std::string s = "{";
  bool first_item = true;
  for (auto i : one_based()) {
    if (!first_item) s += ',';
    s += std::to_string(i);
    first_item = false;
  }
  return s + "}";
}

void IndexSet::check_same(const IndexSet& o) const {
  if (universe_ != o.universe_)
    throw Error(ErrorCode::dimension_mismatch,
                "index sets over different universes (" + std::to_string(universe_) + " vs " +
                    std::to_string(o.universe_) + ")");
}

void IndexSet::check_index(std::size_t i) const {
  if (i >= universe_)
    throw Error(ErrorCode::out_of_range,
                "index " + std::to_string(i + 1) + " outside 1.." + std::to_string(universe_));
}

void IndexSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

}  // namespace posmat
