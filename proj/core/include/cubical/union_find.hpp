#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace cubical {

// Disjoint sets over 0..n-1 with path halving and union by size. The
// representative of a class is not guaranteed to be its smallest member;
// callers needing canonical labels use canonical_labels().
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

  /// Class label of every element, numbered 0, 1, ... in order of first
  /// appearance. Returns the number of classes through `count`.
  std::vector<std::size_t> canonical_labels(std::size_t& count) {
    std::vector<std::size_t> root_label(parent_.size(), kUnset);
    std::vector<std::size_t> labels(parent_.size());
    count = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const std::size_t r = find(x);
      if (root_label[r] == kUnset) root_label[r] = count++;
      labels[x] = root_label[r];
    }
    return labels;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace cubical
