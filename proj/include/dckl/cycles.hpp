#pragma once

// Cycles in domino tableaux and moving through them, following Garfinkle.
//
// A square (i, j) is variable when i + j has the parity of the core rank the
// tableau was built on, fixed otherwise.  Each domino has one fixed square and
// dom'_i always keeps it.  Squares outside the tableau are labeled 0 on row 0,
// column 0 and inside the core, and infinity elsewhere.

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dckl/domino.hpp"
#include "dckl/error.hpp"
#include "dckl/group_table.hpp"
#include "dckl/labeling.hpp"

namespace dckl {

enum class SquareClass { Fixed, Variable };

inline SquareClass square_class(int i, int j, int r) {
  return ((i + j - r) % 2 == 0) ? SquareClass::Variable : SquareClass::Fixed;
}

struct Cycle {
  enum class Position { Original, Moved };

  std::vector<int> members;  // sorted domino values
  Position position = Position::Original;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.members == b.members; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(members[i]);
    }
    return s + "}";
  }
};

/// A domino tableau viewed as placed dominoes on the grid.  The parity used
/// to classify squares is that of the tableau the grid was first built from
/// and survives moves that change the core.
class DominoGrid {
 public:
  explicit DominoGrid(const DominoTableau& d) : parity_(d.core_rank()), core_rank_(d.core_rank()) {
    for (const Domino& dom : d.dominoes()) place(dom);
  }

  int parity() const noexcept { return parity_; }
  /// Rank of the staircase left uncovered, or -1 if the uncovered squares of
  /// the shape are not a staircase.
  int core_rank() const noexcept { return core_rank_; }
  const std::map<int, Domino>& dominoes() const noexcept { return doms_; }
  const std::set<int>& moved_values() const noexcept { return moved_; }

  const Domino& domino(int v) const {
    const auto it = doms_.find(v);
    if (it == doms_.end()) throw InvalidArgument("value absent from domino tableau");
    return it->second;
  }

  /// D(k, l) with the boundary labeling.
  long label(Cell c) const {
    if (c.row <= 0 || c.col <= 0) return 0;
    if (core_rank_ >= 0 && c.col <= core_rank_ - c.row + 1) return 0;
    const auto it = occ_.find(c);
    return it == occ_.end() ? LONG_MAX : it->second;
  }

  /// Smallest partition containing every domino square, core included.
  Partition shape() const {
    std::vector<int> rows;
    for (const auto& [c, v] : occ_) {
      if (static_cast<int>(rows.size()) < c.row) rows.resize(c.row, 0);
      rows[c.row - 1] = std::max(rows[c.row - 1], c.col);
    }
    if (core_rank_ > 0) {
      if (static_cast<int>(rows.size()) < core_rank_) rows.resize(core_rank_, 0);
      for (int i = 1; i <= core_rank_; ++i) rows[i - 1] = std::max(rows[i - 1], core_rank_ - i + 1);
    }
    for (int i = static_cast<int>(rows.size()) - 2; i >= 0; --i) rows[i] = std::max(rows[i], rows[i + 1]);
    return Partition(std::move(rows));
  }

  /// Whether the grid is a standard domino tableau on its core.
  bool is_standard() const {
    if (core_rank_ < 0) return false;
    try {
      (void)to_tableau();
      return true;
    } catch (const InvalidArgument&) {
      return false;
    }
  }

  DominoTableau to_tableau() const {
    if (core_rank_ < 0) throw InvalidArgument("uncovered squares do not form a staircase");
    std::vector<Domino> doms;
    for (const auto& [v, d] : doms_) doms.push_back(d);
    return DominoTableau::from_dominoes(core_rank_, std::move(doms));
  }

  /// Replace dominoes by new placements (same values) and recompute the core.
  DominoGrid with_replaced(const std::vector<Domino>& repl) const {
    DominoGrid g = *this;
    for (const Domino& d : repl) {
      const Domino& old = g.doms_.at(d.value);
      g.occ_.erase(old.a);
      g.occ_.erase(old.b);
    }
    for (const Domino& d : repl) {
      g.doms_[d.value] = d;
      if (!g.occ_.emplace(d.a, d.value).second || !g.occ_.emplace(d.b, d.value).second)
        g.overlap_ = true;
      if (g.moved_.count(d.value)) g.moved_.erase(d.value); else g.moved_.insert(d.value);
    }
    g.core_rank_ = g.overlap_ ? -1 : g.uncovered_staircase();
    return g;
  }

  friend bool operator==(const DominoGrid& a, const DominoGrid& b) {
    return a.core_rank_ == b.core_rank_ && a.doms_ == b.doms_;
  }

 private:
  void place(const Domino& d) {
    doms_[d.value] = d;
    occ_[d.a] = d.value;
    occ_[d.b] = d.value;
  }

  /// A staircase delta_q disjoint from the dominoes whose union with them is
  /// a partition, nearest to the current core; -1 if none exists.
  int uncovered_staircase() const {
    int reach = 1;
    for (const auto& [c, v] : occ_) reach = std::max(reach, c.row + c.col);
    int best = -1;
    for (int q = 0; q <= reach; ++q) {
      if (!fits_core(q)) continue;
      if (best < 0 || std::abs(q - core_rank_) < std::abs(best - core_rank_)) best = q;
    }
    return best;
  }

  bool fits_core(int q) const {
    std::vector<int> rows(q);
    for (int i = 1; i <= q; ++i) rows[i - 1] = q - i + 1;
    for (const auto& [c, v] : occ_) {
      if (c.col <= q - c.row + 1) return false;
      if (static_cast<int>(rows.size()) < c.row) rows.resize(c.row, 0);
      rows[c.row - 1] = std::max(rows[c.row - 1], c.col);
    }
    std::vector<int> count(rows.size(), 0);
    for (int i = 1; i <= q; ++i) count[i - 1] = q - i + 1;
    for (const auto& [c, v] : occ_) ++count[c.row - 1];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (count[i] != rows[i]) return false;
      if (i && rows[i] > rows[i - 1]) return false;
    }
    return true;
  }

  int parity_;
  int core_rank_;
  bool overlap_ = false;
  std::map<int, Domino> doms_;
  std::map<Cell, int> occ_;
  std::set<int> moved_;
};

/// The fixed square of a domino under the grid's parity.
inline Cell fixed_square(const DominoGrid& g, const Domino& d) {
  return square_class(d.a.row, d.a.col, g.parity()) == SquareClass::Fixed ? d.a : d.b;
}

/// dom'_i.
inline Domino shifted_domino(const DominoGrid& g, int value) {
  const Domino& d = g.domino(value);
  const Cell f = fixed_square(g, d);
  const int k = f.row, l = f.col;
  // fixed square is the top of a vertical or the right end of a horizontal domino
  const bool fixed_top_or_right = d.horizontal() ? (f == d.b) : (f == d.a);
  if (fixed_top_or_right) {
    if (value < g.label({k - 1, l + 1})) return make_domino(value, {k - 1, l}, {k, l});
    return make_domino(value, {k, l}, {k, l + 1});
  }
  if (value < g.label({k + 1, l - 1})) return make_domino(value, {k, l - 1}, {k, l});
  return make_domino(value, {k, l}, {k + 1, l});
}

inline Domino shifted_domino(const DominoTableau& d, int value) {
  return shifted_domino(DominoGrid(d), value);
}

namespace detail {

inline bool meet(const Domino& x, const Domino& y) {
  return x.contains(y.a) || x.contains(y.b);
}

}  // namespace detail

/// All cycles of the grid, ordered by smallest member.
inline std::vector<Cycle> cycles(const DominoGrid& g) {
  std::vector<int> values;
  std::vector<Domino> doms, shifted;
  for (const auto& [v, d] : g.dominoes()) {
    values.push_back(v);
    doms.push_back(d);
    shifted.push_back(shifted_domino(g, v));
  }
  const int k = static_cast<int>(values.size());
  UnionFind uf(k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (i != j && detail::meet(doms[j], shifted[i])) uf.unite(i, j);
  // Dominoes trading squares on the two diagonals bordering the core only
  // move together: the core can change only as a whole staircase.
  const int q = g.core_rank();
  int first = -1;
  for (int i = 0; i < k; ++i) {
    bool touch = false;
    for (Cell c : {doms[i].a, doms[i].b, shifted[i].a, shifted[i].b}) {
      const bool traded = !(doms[i].contains(c) && shifted[i].contains(c));
      if (traded && (c.row + c.col == q + 1 || c.row + c.col == q + 2)) touch = true;
    }
    if (!touch) continue;
    if (first < 0) first = i; else uf.unite(first, i);
  }
  std::map<int, Cycle> by_root;
  for (int i = 0; i < k; ++i) by_root[uf.find(i)].members.push_back(values[i]);
  std::vector<Cycle> out;
  for (auto& [_, c] : by_root) {
    c.position = g.moved_values().count(c.members.front()) ? Cycle::Position::Moved : Cycle::Position::Original;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.members < b.members; });
  return out;
}

inline std::vector<Cycle> cycles(const DominoTableau& d) { return cycles(DominoGrid(d)); }

/// The cycle of g through value i.
inline Cycle cycle_of(const DominoGrid& g, int value) {
  (void)g.domino(value);
  for (auto& c : cycles(g))
    if (std::binary_search(c.members.begin(), c.members.end(), value)) return c;
  throw std::logic_error("cycles do not cover the dominoes");
}

inline Cycle cycle_of(const DominoTableau& d, int value) { return cycle_of(DominoGrid(d), value); }

/// M(g, c): every domino of c replaced by its dom'.
inline DominoGrid move_through(const DominoGrid& g, const Cycle& c) {
  if (c.members.empty() || !(cycle_of(g, c.members.front()) == c))
    throw InvalidArgument("not a cycle of this tableau");
  std::vector<Domino> repl;
  for (int v : c.members) repl.push_back(shifted_domino(g, v));
  return g.with_replaced(repl);
}

inline DominoGrid move_through(const DominoTableau& d, const Cycle& c) {
  return move_through(DominoGrid(d), c);
}

/// M(g, C): moves through each cycle in turn, re-identifying it in the
/// current tableau.
inline DominoGrid move_through_set(const DominoGrid& g, const std::vector<Cycle>& cs) {
  DominoGrid cur = g;
  for (const Cycle& c : cs) cur = move_through(cur, c);
  return cur;
}

/// Open: moving through c changes the shape (core included).
inline bool is_open(const DominoGrid& g, const Cycle& c) {
  const DominoGrid m = move_through(g, c);
  return m.core_rank() != g.core_rank() || m.shape() != g.shape();
}

inline bool is_open(const DominoTableau& d, const Cycle& c) { return is_open(DominoGrid(d), c); }

inline std::vector<Cycle> open_cycles(const DominoGrid& g) {
  std::vector<Cycle> out;
  for (auto& c : cycles(g))
    if (is_open(g, c)) out.push_back(std::move(c));
  return out;
}

/// Every standard tableau M(D, C) with C a set of open cycles of D, with
/// the subset that produced it.  Includes D itself (C empty).
inline std::vector<std::pair<DominoTableau, std::vector<Cycle>>> open_cycle_moves(const DominoTableau& d) {
  const DominoGrid g(d);
  const auto open = open_cycles(g);
  if (open.size() > 20) throw ResourceError("too many open cycles to enumerate");
  std::vector<std::pair<DominoTableau, std::vector<Cycle>>> out;
  for (std::uint32_t mask = 0; mask < (1u << open.size()); ++mask) {
    std::vector<Cycle> chosen;
    for (std::size_t i = 0; i < open.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(open[i]);
    const DominoGrid m = move_through_set(g, chosen);
    if (m.is_standard()) out.emplace_back(m.to_tableau(), std::move(chosen));
  }
  return out;
}

/// Whether E = M(D, C) for some set C of open cycles of D.
inline bool open_cycle_equivalent(const DominoTableau& d, const DominoTableau& e) {
  if (d.size() != e.size()) return false;
  for (const auto& [t, _] : open_cycle_moves(d))
    if (t == e) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Coplactic relations

namespace detail {

/// S_n^(r) acting on the left: s_1..s_{n-1}, then t_1..t_min(r,n).
inline std::vector<SignedPerm> extended_generators(int n, int r) {
  std::vector<SignedPerm> gens;
  for (int i = 1; i < n; ++i) gens.push_back(SignedPerm::generator(n, Generator::s(i)));
  for (int i = 1; i <= std::min(r, n); ++i) gens.push_back(SignedPerm::generator(n, Generator::tt(i)));
  return gens;
}

inline bool coplactic_witness(const SignedPerm& x, const SignedPerm& y, const std::vector<SignedPerm>& gens) {
  const int lx = length(x), ly = length(y);
  for (const SignedPerm& sp : gens)
    if (length(compose(sp, x)) < lx && ly < length(compose(sp, y))) return true;
  return false;
}

}  // namespace detail

/// x ~_r y: y = s x for some s in {s_1..s_{n-1}} with a witness s' in S_n^(r)
/// such that l(s'x) < l(x) < l(y) < l(s'y) (after ordering x, y by length).
inline bool coplactic_step(SignedPerm x, SignedPerm y, int r) {
  if (x.rank() != y.rank()) throw InvalidArgument("rank mismatch");
  if (length(x) > length(y)) std::swap(x, y);
  if (length(x) == length(y)) return false;
  const int n = x.rank();
  bool adjacent = false;
  for (int i = 1; i < n && !adjacent; ++i)
    adjacent = left_multiply(Generator::s(i), x) == y;
  return adjacent && detail::coplactic_witness(x, y, detail::extended_generators(n, r));
}

/// Classes of the reflexive-transitive closure of ~_r, labeled over the
/// enumeration order of W_n.
inline Labeling coplactic_classes(const GroupTable& group, int r) {
  const int n = group.rank();
  const auto gens = detail::extended_generators(n, r);
  UnionFind uf(group.size());
  for (int x = 0; x < group.size(); ++x) {
    for (int i = 1; i < n; ++i) {
      const int y = group.left(i, x);
      if (group.length(y) <= group.length(x)) continue;
      if (detail::coplactic_witness(group.element(x), group.element(y), gens)) uf.unite(x, y);
    }
  }
  return from_union_find(uf, group.size());
}

inline Labeling coplactic_classes(int n, int r) { return coplactic_classes(GroupTable(n), r); }

}  // namespace dckl
