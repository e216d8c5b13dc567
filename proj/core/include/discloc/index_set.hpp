#pragma once

#include <cstddef>
#include <vector>

namespace discloc {

/// Subset of {0, ..., universe-1}; indices are canonical object or
/// morphism positions of a FinCat.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe, bool filled = false)
      : bits_(universe, filled) {}

  static IndexSet of(std::size_t universe, const std::vector<int>& members) {
    IndexSet s(universe);
    for (int m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(int i) const { return bits_[static_cast<std::size_t>(i)]; }
  void insert(int i) { bits_[static_cast<std::size_t>(i)] = true; }
  void erase(int i) { bits_[static_cast<std::size_t>(i)] = false; }

  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }
  bool empty() const { return size() == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  bool is_subset_of(const IndexSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    IndexSet r(a.universe());
    for (std::size_t i = 0; i < a.bits_.size(); ++i) r.bits_[i] = a.bits_[i] && b.bits_[i];
    return r;
  }
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b) {
    IndexSet r(a.universe());
    for (std::size_t i = 0; i < a.bits_.size(); ++i) r.bits_[i] = a.bits_[i] || b.bits_[i];
    return r;
  }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<bool> bits_;
};

struct ObjectTag {};
struct MorphismTag {};

using ObjectSet = IndexSet<ObjectTag>;
/// A class of morphisms: cofibrations, weak equivalences, E, M, ...
using MorphismClass = IndexSet<MorphismTag>;

}  // namespace discloc
