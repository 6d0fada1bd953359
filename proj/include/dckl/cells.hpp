#pragma once

// Left, right and two-sided cells: strongly connected components of the
// preorders generated by the KL expansions, with the induced order on cells.

#include <algorithm>
#include <vector>

#include "dckl/kl_basis.hpp"
#include "dckl/labeling.hpp"
#include "dckl/side.hpp"

namespace dckl {

class CellPartition {
 public:
  CellPartition() = default;

  /// Cells of a graph where an edge w -> y means y <= w.
  explicit CellPartition(const std::vector<std::vector<int>>& edges) {
    const int n = static_cast<int>(edges.size());
    const std::vector<int> comp = scc(edges);
    labels_ = canonical(comp);
    count_ = block_count(labels_);
    std::vector<std::vector<int>> dag(static_cast<std::size_t>(count_));
    for (int w = 0; w < n; ++w)
      for (int y : edges[static_cast<std::size_t>(w)])
        if (labels_[w] != labels_[y]) dag[static_cast<std::size_t>(labels_[w])].push_back(labels_[y]);
    // below_[c][d]: cell d <= cell c
    below_.assign(static_cast<std::size_t>(count_), std::vector<bool>(static_cast<std::size_t>(count_), false));
    for (int c = 0; c < count_; ++c) {
      std::vector<int> stack{c};
      auto& row = below_[static_cast<std::size_t>(c)];
      row[static_cast<std::size_t>(c)] = true;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int d : dag[static_cast<std::size_t>(x)])
          if (!row[static_cast<std::size_t>(d)]) {
            row[static_cast<std::size_t>(d)] = true;
            stack.push_back(d);
          }
      }
    }
  }

  const Labeling& labels() const noexcept { return labels_; }
  int count() const noexcept { return count_; }
  int cell_of(int w) const { return labels_.at(static_cast<std::size_t>(w)); }

  /// Members of each cell, in enumeration order.
  std::vector<std::vector<int>> cells() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count_));
    for (std::size_t w = 0; w < labels_.size(); ++w) out[static_cast<std::size_t>(labels_[w])].push_back(static_cast<int>(w));
    return out;
  }

  /// Order on cells: c <= d.
  bool cell_leq(int c, int d) const { return below_.at(static_cast<std::size_t>(d)).at(static_cast<std::size_t>(c)); }

  /// Preorder on elements: y <= w.
  bool leq(int y, int w) const { return cell_leq(cell_of(y), cell_of(w)); }

 private:
  /// Tarjan's algorithm, iterative.
  static std::vector<int> scc(const std::vector<std::vector<int>>& edges) {
    const int n = static_cast<int>(edges.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
      if (index[static_cast<std::size_t>(root)] >= 0) continue;
      call.emplace_back(root, 0);
      while (!call.empty()) {
        auto& [v, next] = call.back();
        const auto vi = static_cast<std::size_t>(v);
        if (next == 0 && index[vi] < 0) {
          index[vi] = low[vi] = counter++;
          stack.push_back(v);
          on_stack[vi] = true;
        }
        const auto& out = edges[vi];
        if (next < out.size()) {
          const int u = out[next++];
          const auto ui = static_cast<std::size_t>(u);
          if (index[ui] < 0) {
            call.emplace_back(u, 0);
          } else if (on_stack[ui]) {
            low[vi] = std::min(low[vi], index[ui]);
          }
          continue;
        }
        if (low[vi] == index[vi]) {
          for (;;) {
            const int u = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(u)] = false;
            comp[static_cast<std::size_t>(u)] = ncomp;
            if (u == v) break;
          }
          ++ncomp;
        }
        const int done = v;
        call.pop_back();
        if (!call.empty()) {
          const auto pi = static_cast<std::size_t>(call.back().first);
          low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
        }
      }
    }
    return comp;
  }

  Labeling labels_;
  int count_ = 0;
  std::vector<std::vector<bool>> below_;
};

/// Edges generating the preorder on the given side.
inline std::vector<std::vector<int>> cell_edges(const KLBasis& kl, Side side) {
  const GroupTable& G = kl.group();
  const auto& left = kl.left_edges();
  std::vector<std::vector<int>> right(left.size());
  for (int w = 0; w < G.size(); ++w)
    for (int y : left[static_cast<std::size_t>(w)])
      right[static_cast<std::size_t>(G.inverse(w))].push_back(G.inverse(y));
  switch (side) {
    case Side::Left: return left;
    case Side::Right: return right;
    case Side::TwoSided: {
      auto both = left;
      for (std::size_t w = 0; w < both.size(); ++w) both[w].insert(both[w].end(), right[w].begin(), right[w].end());
      return both;
    }
  }
  return left;
}

inline CellPartition cell_partition(const KLBasis& kl, Side side) { return CellPartition(cell_edges(kl, side)); }

}  // namespace dckl
