#pragma once

// Partitions, staircase 2-cores and dominoes.

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dckl/error.hpp"

namespace dckl {

/// A square (row, column), both 1-based, English notation.
struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped; anything else must be weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Length of row i (1-based); 0 beyond the last row.
  int row(int i) const {
    return i >= 1 && i <= rows() ? parts_[i - 1] : 0;
  }
  /// Length of column j (1-based).
  int col(int j) const {
    int c = 0;
    while (c < rows() && parts_[c] >= j) ++c;
    return c;
  }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && row(c.row) >= c.col; }

  bool contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
      if (mu.row(i) > row(i)) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> c(row(1));
    for (int j = 1; j <= row(1); ++j) c[j - 1] = col(j);
    return Partition(std::move(c));
  }

  /// Cells of this diagram, row by row.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows(); ++i)
      for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// The staircase (r, r-1, ..., 1).
inline Partition delta(int r) {
  if (r < 0) throw InvalidArgument("core rank must be non-negative");
  std::vector<int> p;
  for (int i = r; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

/// Staircase rank r if p is some delta_r.
inline int staircase_rank(const Partition& p) {
  const int r = p.rows();
  for (int i = 1; i <= r; ++i)
    if (p.row(i) != r - i + 1) return -1;
  return r;
}

/// Set difference lambda / mu as a sorted cell list (mu must be contained).
inline std::vector<Cell> skew_cells(const Partition& lambda, const Partition& mu) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int j = mu.row(i) + 1; j <= lambda.row(i); ++j) out.push_back({i, j});
  return out;
}

/// Partitions obtained from p by removing one domino.
inline std::vector<Partition> remove_domino(const Partition& p) {
  std::vector<Partition> out;
  const auto& parts = p.parts();
  const int l = p.rows();
  for (int i = 1; i <= l; ++i) {
    // horizontal domino at the end of row i
    if (p.row(i) - p.row(i + 1) >= 2) {
      std::vector<int> q = parts;
      q[i - 1] -= 2;
      out.emplace_back(std::move(q));
    }
    // vertical domino at the end of rows i, i+1
    if (i < l && p.row(i) == p.row(i + 1) && p.row(i + 1) > p.row(i + 2)) {
      std::vector<int> q = parts;
      q[i - 1] -= 1;
      q[i] -= 1;
      out.emplace_back(std::move(q));
    }
  }
  return out;
}

/// Partitions obtained from p by adding one domino.
inline std::vector<Partition> add_domino(const Partition& p) {
  std::vector<Partition> out;
  const int l = p.rows();
  for (int i = 1; i <= l + 1; ++i) {
    // horizontal in row i
    if (i == 1 || p.row(i - 1) >= p.row(i) + 2) {
      std::vector<int> q = p.parts();
      if (i > l) q.push_back(0);
      q[i - 1] += 2;
      out.emplace_back(std::move(q));
    }
    // vertical in rows i, i+1 (the column p.row(i)+1)
    if (i == 1 || p.row(i - 1) > p.row(i)) {
      if (p.row(i) == p.row(i + 1)) {
        std::vector<int> q = p.parts();
        while (static_cast<int>(q.size()) < i + 1) q.push_back(0);
        q[i - 1] += 1;
        q[i] += 1;
        out.emplace_back(std::move(q));
      }
    }
  }
  return out;
}

/// The 2-core: remove dominoes until none can be removed.
inline Partition two_core(const Partition& lambda) {
  Partition cur = lambda;
  for (;;) {
    auto next = remove_domino(cur);
    if (next.empty()) return cur;
    cur = std::move(next.front());
  }
}

/// The rank r of the staircase 2-core of lambda.
inline int core_rank(const Partition& lambda) { return staircase_rank(two_core(lambda)); }

/// lambda in P_r(n): 2-core delta_r and |lambda| = |delta_r| + 2n.
inline bool in_Pr(const Partition& lambda, int r, int n) {
  if (r < 0 || n < 0) return false;
  return lambda.size() == r * (r + 1) / 2 + 2 * n && two_core(lambda) == delta(r);
}

/// Dominance order; throws on a size mismatch.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidArgument("dominance order needs equal sizes");
  int a = 0, b = 0;
  for (int k = 1; k <= std::max(lambda.rows(), mu.rows()); ++k) {
    a += lambda.row(k);
    b += mu.row(k);
    if (a > b) return false;
  }
  return true;
}

/// All of P_r(n), sorted.
inline std::vector<Partition> partitions_Pr(int r, int n) {
  std::set<Partition> layer{delta(r)};
  for (int k = 0; k < n; ++k) {
    std::set<Partition> next;
    for (const auto& p : layer)
      for (auto& q : add_domino(p)) next.insert(std::move(q));
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

}  // namespace dckl
