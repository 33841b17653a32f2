#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace entcover {

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[idx(x)] != x) {
      parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
      x = parent_[idx(x)];
    }
    return x;
  }

  /// Returns false if a and b were already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[idx(a)] < size_[idx(b)]) std::swap(a, b);
    parent_[idx(b)] = a;
    size_[idx(a)] += size_[idx(b)];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int count() const noexcept { return static_cast<int>(parent_.size()); }

 private:
  static std::size_t idx(int x) { return static_cast<std::size_t>(x); }
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace entcover
