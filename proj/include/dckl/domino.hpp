#pragma once

// Domino tableaux on a staircase 2-core and Barbasch-Vogan domino insertion.
//
// A domino tableau is stored as its chain of shapes
//   delta_r = lambda^0 < lambda^1 < ... < lambda^k,
// where lambda^i / lambda^(i-1) is the domino carrying the i-th smallest value.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dckl/error.hpp"
#include "dckl/partition.hpp"
#include "dckl/side.hpp"
#include "dckl/signed_perm.hpp"
#include "dckl/young.hpp"

namespace dckl {

struct Domino {
  int value = 0;
  Cell a;  // top or left square
  Cell b;  // bottom or right square

  bool horizontal() const { return a.row == b.row; }
  bool contains(Cell c) const { return a == c || b == c; }
  friend constexpr auto operator<=>(const Domino&, const Domino&) = default;
};

/// Orders the two squares and checks that they share an edge.
inline Domino make_domino(int value, Cell x, Cell y) {
  if (y < x) std::swap(x, y);
  const bool adjacent = (x.row == y.row && y.col == x.col + 1) || (x.col == y.col && y.row == x.row + 1);
  if (!adjacent) throw InvalidArgument("domino squares must share an edge");
  return {value, x, y};
}

class DominoTableau {
 public:
  /// The empty tableau on delta_r.
  explicit DominoTableau(int r = 0) : core_rank_(r), chain_{delta(r)} {}

  DominoTableau(int r, std::vector<Partition> chain, std::vector<int> values)
      : core_rank_(r), chain_(std::move(chain)), values_(std::move(values)) {
    if (chain_.empty() || chain_.front() != delta(r))
      throw InvalidArgument("domino chain must start at the core");
    if (chain_.size() != values_.size() + 1)
      throw InvalidArgument("domino chain and values disagree in length");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] <= 0 || (i && values_[i] <= values_[i - 1]))
        throw InvalidArgument("domino values must be positive and increasing");
      if (!chain_[i + 1].contains(chain_[i]))
        throw InvalidArgument("domino chain must be increasing");
      const auto cells = skew_cells(chain_[i + 1], chain_[i]);
      if (cells.size() != 2) throw InvalidArgument("chain step is not a domino");
      (void)make_domino(values_[i], cells[0], cells[1]);
    }
  }

  /// Standard domino tableau with values 1..k from its chain.
  static DominoTableau from_chain(int r, std::vector<Partition> chain) {
    std::vector<int> values(chain.empty() ? 0 : chain.size() - 1);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<int>(i) + 1;
    return DominoTableau(r, std::move(chain), std::move(values));
  }

  /// Builds a tableau from placed dominoes; throws unless every prefix
  /// (by value) of core plus dominoes is a partition.
  static DominoTableau from_dominoes(int r, std::vector<Domino> doms) {
    std::sort(doms.begin(), doms.end(), [](const Domino& x, const Domino& y) { return x.value < y.value; });
    std::vector<Partition> chain{delta(r)};
    std::vector<int> values;
    std::vector<int> rows = delta(r).parts();
    for (const Domino& d : doms) {
      for (Cell c : {d.a, d.b}) {
        while (static_cast<int>(rows.size()) < c.row) rows.push_back(0);
        if (rows[c.row - 1] != c.col - 1) throw InvalidArgument("dominoes do not form a standard tableau");
        rows[c.row - 1] = c.col;
      }
      for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1]) throw InvalidArgument("dominoes do not form a standard tableau");
      chain.emplace_back(rows);
      values.push_back(d.value);
    }
    return DominoTableau(r, std::move(chain), std::move(values));
  }

  int core_rank() const noexcept { return core_rank_; }
  const Partition& core() const { return chain_.front(); }
  const Partition& shape() const { return chain_.back(); }
  const std::vector<Partition>& chain() const noexcept { return chain_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

  std::vector<Domino> dominoes() const {
    std::vector<Domino> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const auto cells = skew_cells(chain_[i + 1], chain_[i]);
      out.push_back(make_domino(values_[i], cells[0], cells[1]));
    }
    return out;
  }

  bool has_value(int v) const { return std::binary_search(values_.begin(), values_.end(), v); }

  /// Domino carrying value v; throws when absent.
  Domino domino(int v) const {
    const auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) throw InvalidArgument("value absent from domino tableau");
    const auto i = static_cast<std::size_t>(it - values_.begin());
    const auto cells = skew_cells(chain_[i + 1], chain_[i]);
    return make_domino(v, cells[0], cells[1]);
  }

  /// Shape of the sub-tableau of values < v.
  const Partition& shape_below(int v) const {
    const auto i = std::lower_bound(values_.begin(), values_.end(), v) - values_.begin();
    return chain_[static_cast<std::size_t>(i)];
  }

  /// Transpose in the main diagonal.
  DominoTableau conjugate() const {
    std::vector<Partition> c;
    for (const auto& p : chain_) c.push_back(p.conjugate());
    return DominoTableau(core_rank_, std::move(c), values_);
  }

  /// Whether values are exactly 1..k.
  bool is_standard() const {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  friend auto operator<=>(const DominoTableau&, const DominoTableau&) = default;

  /// The shape chain, e.g. [(1);(3);(3,2)].
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      if (i) s += ';';
      s += chain_[i].to_string();
    }
    return s + "]";
  }

 private:
  int core_rank_ = 0;
  std::vector<Partition> chain_;
  std::vector<int> values_;
};

namespace detail {

inline void add_cells(std::vector<int>& rows, const Domino& d) {
  for (Cell c : {d.a, d.b}) {
    while (static_cast<int>(rows.size()) < c.row) rows.push_back(0);
    if (rows[c.row - 1] != c.col - 1) throw std::logic_error("domino insertion left a non-partition shape");
    rows[c.row - 1] = c.col;
  }
}

inline bool rows_contain(const std::vector<int>& rows, Cell c) {
  return c.row >= 1 && c.row <= static_cast<int>(rows.size()) && rows[c.row - 1] >= c.col;
}

inline int column_height(const std::vector<int>& rows, int col) {
  int h = 0;
  while (h < static_cast<int>(rows.size()) && rows[h] >= col) ++h;
  return h;
}

}  // namespace detail

/// E = D <- v: insert a horizontal (v > 0) or vertical (v < 0) domino of
/// value |v| and bump larger dominoes through the four-case cascade.
inline DominoTableau domino_insert(const DominoTableau& d, int v) {
  const int i = std::abs(v);
  if (v == 0) throw InvalidArgument("cannot insert value 0");
  if (d.has_value(i)) throw InvalidArgument("value already present in domino tableau");

  std::vector<int> mu = d.shape_below(i).parts();
  std::vector<Domino> out;
  for (const Domino& dom : d.dominoes())
    if (dom.value < i) out.push_back(dom);

  Domino fresh;
  if (v > 0) {
    const int c = mu.empty() ? 0 : mu[0];
    fresh = make_domino(i, {1, c + 1}, {1, c + 2});
  } else {
    const int h = detail::column_height(mu, 1);
    fresh = make_domino(i, {h + 1, 1}, {h + 2, 1});
  }
  detail::add_cells(mu, fresh);
  out.push_back(fresh);

  for (const Domino& dom : d.dominoes()) {
    if (dom.value < i) continue;
    const bool ina = detail::rows_contain(mu, dom.a), inb = detail::rows_contain(mu, dom.b);
    Domino next = dom;
    if (ina && inb) {
      // bumped to the end of the next row (column)
      if (dom.horizontal()) {
        const int k = dom.a.row + 1;
        const int c = k <= static_cast<int>(mu.size()) ? mu[k - 1] : 0;
        next = make_domino(dom.value, {k, c + 1}, {k, c + 2});
      } else {
        const int l = dom.a.col + 1;
        const int h = detail::column_height(mu, l);
        next = make_domino(dom.value, {h + 1, l}, {h + 2, l});
      }
    } else if (ina || inb) {
      const Cell hit = ina ? dom.a : dom.b;
      const Cell other = ina ? dom.b : dom.a;
      next = make_domino(dom.value, other, {hit.row + 1, hit.col + 1});
    }
    // add cells in row-major order so that each is appended at a row end
    Domino ordered = next;
    if (ordered.b < ordered.a) std::swap(ordered.a, ordered.b);
    detail::add_cells(mu, ordered);
    out.push_back(next);
  }
  return DominoTableau::from_dominoes(d.core_rank(), std::move(out));
}

/// Undo one insertion: given E and the squares X of the domino by which E's
/// shape exceeds that of D, recover D and the signed inserted value.
inline std::pair<DominoTableau, int> domino_uninsert(const DominoTableau& e, const Domino& extra) {
  auto doms = e.dominoes();
  std::vector<Domino> kept;
  Cell x1 = extra.a, x2 = extra.b;
  int inserted = 0;
  for (auto it = doms.rbegin(); it != doms.rend(); ++it) {
    const Domino& dom = *it;
    if (inserted != 0) {
      kept.push_back(dom);
      continue;
    }
    const bool eq = (dom.a == x1 && dom.b == x2) || (dom.a == x2 && dom.b == x1);
    const bool hit_a = dom.contains(x1), hit_b = dom.contains(x2);
    if (eq) {
      if (dom.horizontal() && dom.a.row == 1) {
        inserted = dom.value;
      } else if (!dom.horizontal() && dom.a.col == 1) {
        inserted = -dom.value;
      } else {
        // the last two squares of the previous row (column) of sh(E_{<j})
        const std::vector<int>& mu = e.shape_below(dom.value).parts();
        Domino prev;
        if (dom.horizontal()) {
          const int k = dom.a.row - 1, c = mu.at(k - 1);
          prev = make_domino(dom.value, {k, c - 1}, {k, c});
        } else {
          const int l = dom.a.col - 1, h = detail::column_height(mu, l);
          prev = make_domino(dom.value, {h - 1, l}, {h, l});
        }
        kept.push_back(prev);
        x1 = prev.a;
        x2 = prev.b;
      }
    } else if (hit_a || hit_b) {
      const Cell d = hit_a ? x1 : x2;
      const Cell c{d.row - 1, d.col - 1};
      const Cell rest = dom.a == d ? dom.b : dom.a;
      kept.push_back(make_domino(dom.value, rest, c));
      if (hit_a) x1 = c; else x2 = c;
    } else {
      kept.push_back(dom);
    }
  }
  if (inserted == 0) throw InvalidArgument("reverse bumping did not terminate at a first-row/column domino");
  return {DominoTableau::from_dominoes(e.core_rank(), std::move(kept)), inserted};
}

struct DominoPair {
  DominoTableau P;
  DominoTableau Q;
  friend bool operator==(const DominoPair&, const DominoPair&) = default;
};

/// Insert any sequence of signed letters with distinct absolute values.
inline DominoPair domino_pair(const std::vector<int>& word, int r) {
  if (r < 0) throw InvalidArgument("core rank must be non-negative");
  DominoTableau p(r);
  std::vector<Partition> q{delta(r)};
  for (int v : word) {
    p = domino_insert(p, v);
    q.push_back(p.shape());
  }
  return {std::move(p), DominoTableau::from_chain(r, std::move(q))};
}

/// (P^r(w), Q^r(w)).
inline DominoPair domino_pair(const SignedPerm& w, int r) { return domino_pair(w.window(), r); }

/// The unique w with domino_pair(w, r) = (P, Q).
inline SignedPerm from_pair(const DominoTableau& p, const DominoTableau& q) {
  if (p.core_rank() != q.core_rank()) throw InvalidArgument("core mismatch between P and Q");
  if (p.shape() != q.shape()) throw InvalidArgument("shape mismatch between P and Q");
  if (!p.is_standard() || !q.is_standard()) throw InvalidArgument("P and Q must be standard");
  const int n = q.size();
  std::vector<int> window(n);
  DominoTableau cur = p;
  for (int k = n; k >= 1; --k) {
    auto [prev, v] = domino_uninsert(cur, q.domino(k));
    window[k - 1] = v;
    cur = std::move(prev);
  }
  SignedPerm w(std::move(window));
  if (!(domino_pair(w, p.core_rank()) == DominoPair{p, q}))
    throw InvalidArgument("pair is not in the image of domino insertion");
  return w;
}

// ---------------------------------------------------------------------------
// Young tableaux attached to a domino tableau

namespace detail {

inline StandardTableau tableau_from_cells(const Partition& inner, const Partition& outer,
                                          const std::map<Cell, Letter>& cells) {
  std::vector<std::vector<Letter>> rows(outer.rows());
  for (int i = 1; i <= outer.rows(); ++i)
    for (int j = inner.row(i) + 1; j <= outer.row(i); ++j) {
      const auto it = cells.find({i, j});
      if (it == cells.end()) throw InvalidArgument("tableau has an unfilled square");
      rows[i - 1].push_back(it->second);
    }
  return StandardTableau(inner, std::move(rows));
}

}  // namespace detail

/// T(D): each domino of value i becomes ibar (top/left) and i (bottom/right).
inline StandardTableau young_from_domino(const DominoTableau& d) {
  std::map<Cell, Letter> cells;
  for (const Domino& dom : d.dominoes()) {
    cells[dom.a] = Letter::bar(dom.value);
    cells[dom.b] = Letter::plain(dom.value);
  }
  return detail::tableau_from_cells(d.core(), d.shape(), cells);
}

/// T_Y(D): T(D) with the core filled by Y.
inline StandardTableau fill_core(const DominoTableau& d, const StandardTableau& y) {
  if (!y.inner().empty() || y.outer() != d.core()) throw InvalidArgument("core filling must have the shape of the core");
  const StandardTableau t = young_from_domino(d);
  const auto yl = y.letters(), tl = t.letters();
  if (!yl.empty() && !tl.empty() && !(yl.back() < tl.front()))
    throw InvalidArgument("core letters must be smaller than the domino letters");
  std::map<Cell, Letter> cells;
  for (int i = 1; i <= d.core().rows(); ++i)
    for (int j = 1; j <= d.core().row(i); ++j) cells[{i, j}] = y.at({i, j});
  for (int i = 1; i <= d.shape().rows(); ++i)
    for (int j = d.core().row(i) + 1; j <= d.shape().row(i); ++j) cells[{i, j}] = t.at({i, j});
  return detail::tableau_from_cells(Partition{}, d.shape(), cells);
}

// ---------------------------------------------------------------------------
// Segregated tableaux and the asymptotic correspondence

struct YoungPair {
  Tableau<int> P;
  Tableau<int> Q;
  friend bool operator==(const YoungPair&, const YoungPair&) = default;
};

struct BiTabPair {
  YoungPair plus;
  YoungPair minus;
  friend bool operator==(const BiTabPair&, const BiTabPair&) = default;
};

/// Whether every horizontal domino lies strictly above and to the right of
/// every vertical domino.
inline bool is_segregated(const DominoTableau& d) {
  int max_h_row = 0, min_h_col = 1 << 30, min_v_row = 1 << 30, max_v_col = 0;
  for (const Domino& dom : d.dominoes()) {
    if (dom.horizontal()) {
      max_h_row = std::max(max_h_row, dom.a.row);
      min_h_col = std::min(min_h_col, dom.a.col);
    } else {
      min_v_row = std::min(min_v_row, dom.a.row);
      max_v_col = std::max(max_v_col, dom.a.col);
    }
  }
  return max_h_row < min_v_row && min_h_col > max_v_col;
}

/// (D+, D-): horizontal dominoes left-justified into boxes row by row, and
/// the conjugate of the vertical dominoes justified upwards.
inline std::pair<Tableau<int>, Tableau<int>> segregate(const DominoTableau& d) {
  if (!is_segregated(d)) throw InvalidArgument("domino tableau is not segregated");
  std::map<int, std::vector<std::pair<int, int>>> by_row, by_col;
  for (const Domino& dom : d.dominoes()) {
    if (dom.horizontal()) by_row[dom.a.row].push_back({dom.a.col, dom.value});
    else by_col[dom.a.col].push_back({dom.a.row, dom.value});
  }
  auto collect = [](std::map<int, std::vector<std::pair<int, int>>>& m) {
    std::vector<std::vector<int>> rows;
    for (auto& [_, entries] : m) {
      std::sort(entries.begin(), entries.end());
      auto& row = rows.emplace_back();
      for (auto [pos, v] : entries) row.push_back(v);
    }
    return Tableau<int>(std::move(rows));
  };
  return {collect(by_row), collect(by_col)};
}

/// RS pairs of the positive subword w+ and of the negative subword w- with
/// signs removed; recording tableaux carry positions in w.
inline BiTabPair gen_rs(const SignedPerm& w) {
  std::vector<std::vector<int>> pp, qp, pm, qm;
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    auto& p = v > 0 ? pp : pm;
    auto& q = v > 0 ? qp : qm;
    const Cell c = row_insert(p, std::abs(v));
    if (static_cast<int>(q.size()) < c.row) q.emplace_back();
    q[c.row - 1].push_back(i);
  }
  return {{Tableau<int>(std::move(pp)), Tableau<int>(std::move(qp))},
          {Tableau<int>(std::move(pm)), Tableau<int>(std::move(qm))}};
}

// ---------------------------------------------------------------------------
// Enumeration and r-cell keys

/// All standard domino tableaux of shape lambda with core delta_r.
inline std::vector<DominoTableau> sdt_enumerate(const Partition& lambda, int r) {
  if (two_core(lambda) != delta(r)) throw InvalidArgument("shape does not have the requested 2-core");
  std::vector<DominoTableau> out;
  std::vector<Partition> chain{lambda};
  const Partition core = delta(r);
  auto rec = [&](auto&& self) -> void {
    const Partition& top = chain.back();
    if (top == core) {
      std::vector<Partition> c(chain.rbegin(), chain.rend());
      out.push_back(DominoTableau::from_chain(r, std::move(c)));
      return;
    }
    for (auto& p : remove_domino(top)) {
      if (!p.contains(core)) continue;
      chain.push_back(std::move(p));
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

using RCellKey = std::variant<DominoTableau, Partition>;

/// left: Q^r(w); right: P^r(w); two-sided: the common shape.
inline RCellKey rcell_key(const SignedPerm& w, int r, Side side) {
  auto pq = domino_pair(w, r);
  switch (side) {
    case Side::Left: return pq.Q;
    case Side::Right: return pq.P;
    case Side::TwoSided: return pq.P.shape();
  }
  return pq.P.shape();
}

}  // namespace dckl
