#pragma once

// Set partitions of {0..N-1} stored as one block label per element.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace dckl {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

/// Block labels renumbered 0,1,2,... in order of first occurrence.
using Labeling = std::vector<int>;

template <class Key>
Labeling label_by_key(const std::vector<Key>& keys) {
  std::map<Key, int> ids;
  Labeling out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = ids.try_emplace(keys[i], static_cast<int>(ids.size())).first->second;
  return out;
}

inline Labeling canonical(const Labeling& l) { return label_by_key(l); }

inline Labeling from_union_find(UnionFind& uf, int n) {
  Labeling out(n);
  for (int i = 0; i < n; ++i) out[i] = uf.find(i);
  return canonical(out);
}

inline int block_count(const Labeling& l) {
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

/// Finest partition coarser than both a and b.
inline Labeling join(const Labeling& a, const Labeling& b) {
  const int n = static_cast<int>(a.size());
  UnionFind uf(n);
  std::vector<int> first_a(n, -1), first_b(n, -1);
  for (int i = 0; i < n; ++i) {
    if (first_a[a[i]] < 0) first_a[a[i]] = i; else uf.unite(i, first_a[a[i]]);
    if (first_b[b[i]] < 0) first_b[b[i]] = i; else uf.unite(i, first_b[b[i]]);
  }
  return from_union_find(uf, n);
}

/// Whether every block of fine lies inside a block of coarse.
inline bool refines(const Labeling& fine, const Labeling& coarse) {
  std::map<int, int> image;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    auto [it, inserted] = image.try_emplace(fine[i], coarse[i]);
    if (!inserted && it->second != coarse[i]) return false;
  }
  return true;
}

/// Pairs (x, y) on which a and b disagree about "same block": for each block
/// of either side, the first member versus each member it is split from.
inline std::vector<std::pair<int, int>> disagreements(const Labeling& a, const Labeling& b,
                                                     std::size_t limit = 16) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(a.size());
  std::map<int, int> rep_a, rep_b;
  for (int i = 0; i < n && out.size() < limit; ++i) {
    const auto [ia, new_a] = rep_a.try_emplace(a[i], i);
    if (!new_a && b[ia->second] != b[i]) {
      out.emplace_back(ia->second, i);
      continue;
    }
    const auto [ib, new_b] = rep_b.try_emplace(b[i], i);
    if (!new_b && a[ib->second] != a[i]) out.emplace_back(ib->second, i);
  }
  return out;
}

}  // namespace dckl
