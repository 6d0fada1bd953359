#pragma once

// Young tableaux over a totally ordered alphabet: Robinson-Schensted row
// insertion, its inverse, letter conversion and the neg operation.

#include <algorithm>
#include <concepts>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dckl/error.hpp"
#include "dckl/partition.hpp"
#include "dckl/signed_perm.hpp"

namespace dckl {

/// A (possibly skew) tableau of shape outer/inner filled with letters.
template <std::totally_ordered T>
class Tableau {
 public:
  Tableau() = default;

  /// rows[i] fills row i+1 starting at column inner.row(i+1)+1.
  Tableau(Partition inner, std::vector<std::vector<T>> rows)
      : inner_(std::move(inner)), rows_(std::move(rows)) {
    normalize();
    (void)outer();  // validates
  }

  explicit Tableau(std::vector<std::vector<T>> rows) : Tableau(Partition{}, std::move(rows)) {}

  const Partition& inner() const noexcept { return inner_; }
  const std::vector<std::vector<T>>& rows() const noexcept { return rows_; }

  Partition outer() const {
    std::vector<int> parts;
    const int l = std::max<int>(inner_.rows(), static_cast<int>(rows_.size()));
    for (int i = 1; i <= l; ++i) parts.push_back(inner_.row(i) + row_len(i));
    return Partition(std::move(parts));
  }

  int size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
  }

  /// Whether c belongs to outer/inner.
  bool has(Cell c) const {
    return c.row >= 1 && c.col > inner_.row(c.row) && c.col <= inner_.row(c.row) + row_len(c.row);
  }

  const T& at(Cell c) const { return rows_.at(c.row - 1).at(c.col - inner_.row(c.row) - 1); }
  T& at(Cell c) { return rows_.at(c.row - 1).at(c.col - inner_.row(c.row) - 1); }

  std::optional<Cell> find(const T& letter) const {
    for (int i = 1; i <= static_cast<int>(rows_.size()); ++i)
      for (int k = 0; k < row_len(i); ++k)
        if (rows_[i - 1][k] == letter) return Cell{i, inner_.row(i) + k + 1};
    return std::nullopt;
  }

  std::vector<T> letters() const {
    std::vector<T> out;
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Rows strictly increase left to right, columns top to bottom.
  bool is_standard() const {
    if (!outer().contains(inner_)) return false;
    for (int i = 1; i <= static_cast<int>(rows_.size()); ++i) {
      for (int k = 0; k < row_len(i); ++k) {
        const Cell c{i, inner_.row(i) + k + 1};
        const Cell right{c.row, c.col + 1}, down{c.row + 1, c.col};
        if (has(right) && !(at(c) < at(right))) return false;
        if (has(down) && !(at(c) < at(down))) return false;
      }
    }
    auto l = letters();
    return std::adjacent_find(l.begin(), l.end()) == l.end();
  }

  /// Mirror in the main diagonal.
  Tableau conjugate() const {
    const Partition out = outer().conjugate();
    const Partition in = inner_.conjugate();
    std::vector<std::vector<T>> t(out.rows());
    for (int i = 1; i <= out.rows(); ++i)
      for (int j = in.row(i) + 1; j <= out.row(i); ++j) t[i - 1].push_back(at(Cell{j, i}));
    return Tableau(in, std::move(t));
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

  std::string to_string() const
    requires requires(const T& x) { x.to_string(); }
  {
    return render([](const T& x) { return x.to_string(); });
  }

  std::string to_string() const
    requires std::integral<T>
  {
    return render([](const T& x) { return std::to_string(x); });
  }

 private:
  template <class F>
  std::string render(F f) const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ';';
      for (int k = 0; k < inner_.row(static_cast<int>(i) + 1); ++k) s += k ? ",." : ".";
      for (std::size_t k = 0; k < rows_[i].size(); ++k) {
        if (k || inner_.row(static_cast<int>(i) + 1)) s += ',';
        s += f(rows_[i][k]);
      }
    }
    return s + "]";
  }

  int row_len(int i) const {
    return i >= 1 && i <= static_cast<int>(rows_.size()) ? static_cast<int>(rows_[i - 1].size()) : 0;
  }

  void normalize() {
    while (!rows_.empty() && rows_.back().empty() && static_cast<int>(rows_.size()) > inner_.rows())
      rows_.pop_back();
    while (static_cast<int>(rows_.size()) < inner_.rows()) rows_.emplace_back();
  }

  Partition inner_;
  std::vector<std::vector<T>> rows_;
};

using StandardTableau = Tableau<Letter>;

/// Schensted row insertion of x into a straight tableau; returns the cell added.
template <std::totally_ordered T>
Cell row_insert(std::vector<std::vector<T>>& rows, T x) {
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) rows.emplace_back();
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(i) + 1, static_cast<int>(row.size())};
    }
    std::swap(*it, x);
  }
}

template <std::totally_ordered T>
struct RSPair {
  Tableau<T> P;
  Tableau<int> Q;  // entries are the positions 1..k of the word
};

/// Robinson-Schensted: insertion tableau P and recording tableau Q.
template <std::totally_ordered T>
RSPair<T> rs_pair(const std::vector<T>& word) {
  {
    std::vector<T> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("RS insertion requires distinct letters");
  }
  std::vector<std::vector<T>> p;
  std::vector<std::vector<int>> q;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Cell c = row_insert(p, word[k]);
    if (static_cast<int>(q.size()) < c.row) q.emplace_back();
    q[c.row - 1].push_back(static_cast<int>(k) + 1);
  }
  return {Tableau<T>(std::move(p)), Tableau<int>(std::move(q))};
}

/// Inverse of rs_pair: the word whose insertion/recording tableaux are (P, Q),
/// where Q is a standard tableau on 1..k of the same shape.
template <std::totally_ordered T>
std::vector<T> rs_inverse(const Tableau<T>& P, const Tableau<int>& Q) {
  if (!(P.outer() == Q.outer()) || !P.inner().empty() || !Q.inner().empty())
    throw InvalidArgument("RS inverse needs straight tableaux of equal shape");
  auto p = P.rows();
  const int k = Q.size();
  std::vector<T> word(k);
  for (int step = k; step >= 1; --step) {
    const auto cell = Q.find(step);
    if (!cell) throw InvalidArgument("recording tableau must contain 1..k");
    int r = cell->row - 1;
    if (p[r].size() != static_cast<std::size_t>(cell->col))
      throw InvalidArgument("recording tableau is not standard");
    T x = p[r].back();
    p[r].pop_back();
    for (int i = r - 1; i >= 0; --i) {
      // largest entry smaller than x
      auto it = std::lower_bound(p[i].begin(), p[i].end(), x);
      if (it == p[i].begin()) throw InvalidArgument("tableau is not standard");
      --it;
      std::swap(*it, x);
    }
    word[step - 1] = x;
    while (!p.empty() && p.back().empty()) p.pop_back();
  }
  return word;
}

/// Replace letter from by letter to and restore standardness by swapping the
/// new letter with its neighbours.
template <std::totally_ordered T>
Tableau<T> convert(const Tableau<T>& tab, const T& from, const T& to) {
  const auto pos = tab.find(from);
  if (!pos) throw InvalidArgument("letter to convert does not occur");
  if (tab.find(to)) throw InvalidArgument("target letter already occurs");
  Tableau<T> t = tab;
  Cell c = *pos;
  t.at(c) = to;
  if (to < from) {
    for (;;) {
      const Cell up{c.row - 1, c.col}, left{c.row, c.col - 1};
      std::optional<Cell> swap_with;
      if (t.has(up) && to < t.at(up)) swap_with = up;
      if (t.has(left) && to < t.at(left) && (!swap_with || t.at(*swap_with) < t.at(left)))
        swap_with = left;
      if (!swap_with) break;
      std::swap(t.at(c), t.at(*swap_with));
      c = *swap_with;
    }
  } else {
    for (;;) {
      const Cell down{c.row + 1, c.col}, right{c.row, c.col + 1};
      std::optional<Cell> swap_with;
      if (t.has(down) && t.at(down) < to) swap_with = down;
      if (t.has(right) && t.at(right) < to && (!swap_with || t.at(right) < t.at(*swap_with)))
        swap_with = right;
      if (!swap_with) break;
      std::swap(t.at(c), t.at(*swap_with));
      c = *swap_with;
    }
  }
  return t;
}

/// Convert barred letters ibar to -i, smallest first.
inline StandardTableau neg(const StandardTableau& tab) {
  StandardTableau t = tab;
  for (const Letter& l : tab.letters())
    if (l.is_barred()) t = convert(t, l, Letter::neg(l.magnitude()));
  return t;
}

/// Inverse of neg: convert -i back to ibar, starting with the last converted.
inline StandardTableau neg_inverse(const StandardTableau& tab) {
  StandardTableau t = tab;
  for (const Letter& l : tab.letters())  // -n < ... < -1: undo -n first
    if (l.is_negative()) {
      if (t.find(Letter::bar(l.magnitude())))
        throw InvalidArgument("tableau is not in the image of neg");
      t = convert(t, l, Letter::bar(l.magnitude()));
    }
  if (!(neg(t) == tab)) throw InvalidArgument("tableau is not in the image of neg");
  return t;
}

/// Map a recording tableau on positions 1..k to letters of an alphabet.
inline StandardTableau relabel_positions(const Tableau<int>& q, const OrderedWord& alphabet) {
  std::vector<std::vector<Letter>> rows;
  for (const auto& r : q.rows()) {
    auto& out = rows.emplace_back();
    for (int pos : r) out.push_back(alphabet.at(pos - 1));
  }
  return StandardTableau(q.inner(), std::move(rows));
}

/// All standard Young tableaux on 1..|shape| of a straight shape.
inline std::vector<Tableau<int>> standard_young_tableaux(const Partition& shape) {
  std::vector<Tableau<int>> out;
  std::vector<std::vector<int>> rows(shape.rows());
  const int total = shape.size();
  auto rec = [&](auto&& self, int next) -> void {
    if (next > total) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < shape.rows(); ++i) {
      const int len = static_cast<int>(rows[i].size());
      if (len < shape.row(i + 1) && (i == 0 || static_cast<int>(rows[i - 1].size()) > len)) {
        rows[i].push_back(next);
        self(self, next + 1);
        rows[i].pop_back();
      }
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace dckl
