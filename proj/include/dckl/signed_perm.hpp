#pragma once

// Signed permutations as a model of the hyperoctahedral group W_n.
//
// An element w is stored through its window w(1),...,w(n); the values at
// negative arguments follow from w(-i) = -w(i).  The Coxeter generators are
// t = (1,-1) and s_i = (i,i+1)(-i,-i-1), and t_i = (i,-i) are the reflections
// t_1 = t, t_{i+1} = s_i t_i s_i.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dckl/error.hpp"

namespace dckl {

/// One of t, s_i (1 <= i <= n-1) or the reflection t_i = (i,-i).
struct Generator {
  enum class Kind : std::uint8_t { T, S, TT };

  Kind kind = Kind::T;
  int index = 1;  // i for S(i) and TT(i); 1 for T

  static constexpr Generator t() { return {Kind::T, 1}; }
  static constexpr Generator s(int i) { return {Kind::S, i}; }
  static constexpr Generator tt(int i) { return {Kind::TT, i}; }

  /// TT(1) and T denote the same group element but compare unequal here.
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::T: return "t";
      case Kind::S: return "s" + std::to_string(index);
      case Kind::TT: return "t" + std::to_string(index);
    }
    return "?";
  }
};

class SignedPerm {
 public:
  SignedPerm() = default;

  /// Validates that |w(1)|,...,|w(n)| is a permutation of 1..n.
  explicit SignedPerm(std::vector<int> window) : window_(std::move(window)) {
    const int n = rank();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : window_) {
      const int a = std::abs(v);
      if (a < 1 || a > n || seen[a])
        throw InvalidArgument("window is not a signed permutation");
      seen[a] = true;
    }
  }

  static SignedPerm identity(int n) {
    if (n < 1) throw InvalidArgument("rank must be at least 1");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
  }

  /// The longest element t_1 t_2 ... t_n, window (-1,...,-n).
  static SignedPerm longest(int n) {
    if (n < 1) throw InvalidArgument("rank must be at least 1");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = -(i + 1);
    return SignedPerm(std::move(w));
  }

  /// The group element of a generator in W_n.
  static SignedPerm generator(int n, Generator g) {
    SignedPerm e = identity(n);
    switch (g.kind) {
      case Generator::Kind::T:
        e.window_[0] = -1;
        break;
      case Generator::Kind::S:
        if (g.index < 1 || g.index >= n) throw InvalidArgument("s_i out of range");
        std::swap(e.window_[g.index - 1], e.window_[g.index]);
        break;
      case Generator::Kind::TT:
        if (g.index < 1 || g.index > n) throw InvalidArgument("t_i out of range");
        e.window_[g.index - 1] = -g.index;
        break;
    }
    return e;
  }

  int rank() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }

  /// w(i) for i in {-n..-1, 1..n}.
  int operator()(int i) const {
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
  }

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(window_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> window_;
};

/// (u o v)(i) = u(v(i)).
inline SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  if (u.rank() != v.rank()) throw InvalidArgument("rank mismatch in compose");
  std::vector<int> w(v.rank());
  for (int i = 1; i <= v.rank(); ++i) w[i - 1] = u(v(i));
  return SignedPerm(std::move(w));
}

inline SignedPerm inverse(const SignedPerm& w) {
  std::vector<int> inv(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    inv[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPerm(std::move(inv));
}

/// Coxeter length: inversions of the window plus the sum of |w(i)| over
/// negative entries.
inline int length(const SignedPerm& w) {
  const auto& win = w.window();
  int len = 0;
  for (std::size_t i = 0; i < win.size(); ++i) {
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j]) ++len;
    if (win[i] < 0) len += -win[i];
  }
  return len;
}

/// Number of occurrences of t in a reduced word.
inline int t_length(const SignedPerm& w) {
  return static_cast<int>(
      std::count_if(w.window().begin(), w.window().end(), [](int v) { return v < 0; }));
}

/// w * g (acts on positions).
inline SignedPerm right_multiply(const SignedPerm& w, Generator g) {
  return compose(w, SignedPerm::generator(w.rank(), g));
}

/// g * w (acts on values).
inline SignedPerm left_multiply(Generator g, const SignedPerm& w) {
  return compose(SignedPerm::generator(w.rank(), g), w);
}

/// Simple generators with l(wg) < l(w): S(i) iff w(i) > w(i+1), T iff w(1) < 0.
inline std::vector<Generator> right_descents(const SignedPerm& w) {
  std::vector<Generator> out;
  if (w(1) < 0) out.push_back(Generator::t());
  for (int i = 1; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) out.push_back(Generator::s(i));
  return out;
}

/// Descents of w among S_n^(r) = {s_1..s_{n-1}} u {t_1..t_min(r,n)}.
inline std::vector<Generator> extended_right_descents(const SignedPerm& w, int r) {
  if (r < 0) throw InvalidArgument("core rank must be non-negative");
  std::vector<Generator> out;
  for (int i = 1; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) out.push_back(Generator::s(i));
  for (int i = 1; i <= std::min(r, w.rank()); ++i)
    if (w(i) < 0) out.push_back(Generator::tt(i));
  return out;
}

/// A reduced word g_1 ... g_k with w = g_1 * ... * g_k.
inline std::vector<Generator> reduced_word(const SignedPerm& w) {
  std::vector<Generator> word;
  SignedPerm cur = w;
  for (;;) {
    const auto desc = right_descents(cur);
    if (desc.empty()) break;
    word.push_back(desc.front());
    cur = right_multiply(cur, desc.front());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// All 2^n n! elements, lexicographic in the integer order of windows.
inline std::vector<SignedPerm> enumerate(int n) {
  if (n < 1) throw InvalidArgument("rank must be at least 1");
  std::vector<std::vector<int>> windows;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      windows.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(windows.begin(), windows.end());
  std::vector<SignedPerm> out;
  out.reserve(windows.size());
  for (auto& w : windows) out.emplace_back(std::move(w));
  return out;
}

/// w = x * y with x minimal in w W_m (0 < x(1) < ... < x(m)) and y in W_m.
inline std::pair<SignedPerm, SignedPerm> coset_split_parabolic(const SignedPerm& w, int m) {
  const int n = w.rank();
  if (m < 1 || m > n) throw InvalidArgument("subrank out of range");
  std::vector<int> xw = w.window();
  std::vector<int> head(m);
  for (int i = 0; i < m; ++i) head[i] = std::abs(xw[i]);
  std::sort(head.begin(), head.end());
  std::copy(head.begin(), head.end(), xw.begin());
  SignedPerm x(std::move(xw));
  return {x, compose(inverse(x), w)};
}

/// w = x * sigma with x(1) < ... < x(n) and sigma in the symmetric group.
inline std::pair<SignedPerm, SignedPerm> coset_split_symmetric(const SignedPerm& w) {
  std::vector<int> xw = w.window();
  std::sort(xw.begin(), xw.end());
  SignedPerm x(std::move(xw));
  return {x, compose(inverse(x), w)};
}

inline bool in_symmetric_group(const SignedPerm& w) {
  return std::all_of(w.window().begin(), w.window().end(), [](int v) { return v > 0; });
}

/// Embeds W_m into W_n (m <= n) by fixing m+1..n.
inline SignedPerm embed(const SignedPerm& w, int n) {
  if (w.rank() > n) throw InvalidArgument("cannot embed into a smaller rank");
  std::vector<int> win = w.window();
  for (int i = w.rank() + 1; i <= n; ++i) win.push_back(i);
  return SignedPerm(std::move(win));
}

// ---------------------------------------------------------------------------
// Ordered letters

/// A letter of the totally ordered alphabet
///   -n < ... < -1 < 0_1 < ... < 0_m < 1bar < 1 < 2bar < 2 < ...
/// Positive letters without bar are the plain letters i.
struct Letter {
  enum class Kind : std::int8_t { Negative = 0, Zero = 1, Positive = 2 };

  Kind kind = Kind::Positive;
  int key = 0;  // -i for negatives, j for 0_j, 2i-1 for ibar, 2i for i

  static constexpr Letter neg(int i) { return {Kind::Negative, -i}; }
  static constexpr Letter zero(int j) { return {Kind::Zero, j}; }
  static constexpr Letter bar(int i) { return {Kind::Positive, 2 * i - 1}; }
  static constexpr Letter plain(int i) { return {Kind::Positive, 2 * i}; }
  /// The letter of a signed integer: i > 0 plain, i < 0 negative.
  static constexpr Letter of(int i) { return i > 0 ? plain(i) : neg(-i); }

  bool is_barred() const { return kind == Kind::Positive && (key & 1); }
  bool is_negative() const { return kind == Kind::Negative; }
  bool is_zero() const { return kind == Kind::Zero; }
  /// |i| for -i, ibar and i; j for 0_j.
  int magnitude() const {
    switch (kind) {
      case Kind::Negative: return -key;
      case Kind::Zero: return key;
      case Kind::Positive: return (key + 1) / 2;
    }
    return 0;
  }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::Negative: return std::to_string(key);
      case Kind::Zero: return "0_" + std::to_string(key);
      case Kind::Positive:
        return std::to_string(magnitude()) + (is_barred() ? "~" : "");
    }
    return "?";
  }
};

using OrderedWord = std::vector<Letter>;

/// Number of zero letters used by iota_r.
constexpr int zero_letter_count(int r) { return r * (r + 1) / 2; }

/// The alphabet -n < ... < -1 < 0_1 < ... < 0_m < 1 < ... < n, m = r(r+1)/2.
inline OrderedWord iota_alphabet(int n, int r) {
  OrderedWord a;
  for (int i = n; i >= 1; --i) a.push_back(Letter::neg(i));
  for (int j = 1; j <= zero_letter_count(r); ++j) a.push_back(Letter::zero(j));
  for (int i = 1; i <= n; ++i) a.push_back(Letter::plain(i));
  return a;
}

/// Bottom row of the two-line notation of iota_r(w):
///   -w(n) ... -w(1) 0_1 ... 0_m w(1) ... w(n).
inline OrderedWord iota(const SignedPerm& w, int r) {
  if (r < 0) throw InvalidArgument("core rank must be non-negative");
  const int n = w.rank();
  OrderedWord word;
  for (int i = n; i >= 1; --i) word.push_back(Letter::of(-w(i)));
  for (int j = 1; j <= zero_letter_count(r); ++j) word.push_back(Letter::zero(j));
  for (int i = 1; i <= n; ++i) word.push_back(Letter::of(w(i)));
  return word;
}

}  // namespace dckl
