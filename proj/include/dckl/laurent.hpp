#pragma once

// Laurent polynomials in v with integer coefficients.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dckl/error.hpp"

namespace dckl {

class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff c) {  // NOLINT: constants convert implicitly
    if (c != 0) coeffs_ = {c};
  }

  /// c v^e.
  static LaurentPoly monomial(Coeff c, int e) {
    LaurentPoly p;
    if (c != 0) {
      p.lo_ = e;
      p.coeffs_ = {c};
    }
    return p;
  }

  /// v^e + v^-e.
  static LaurentPoly symmetric(int e) {
    return e == 0 ? LaurentPoly(2) : monomial(1, e) + monomial(1, -e);
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_degree() const noexcept { return lo_; }
  int max_degree() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }

  Coeff operator[](int e) const {
    if (is_zero() || e < lo_ || e > max_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(e - lo_)];
  }

  /// (exponent, coefficient) pairs with nonzero coefficient, by exponent.
  std::vector<std::pair<int, Coeff>> terms() const {
    std::vector<std::pair<int, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// v -> v^-1.
  LaurentPoly bar() const {
    LaurentPoly p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.lo_ = is_zero() ? 0 : -max_degree();
    return p;
  }

  /// Multiplication by v^k.
  LaurentPoly shift(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += k;
    return p;
  }

  /// Terms with exponent in [from, to].
  LaurentPoly slice(int from, int to) const {
    LaurentPoly p;
    if (is_zero()) return p;
    from = std::max(from, lo_);
    to = std::min(to, max_degree());
    if (from > to) return p;
    p.lo_ = from;
    p.coeffs_.assign(coeffs_.begin() + (from - lo_), coeffs_.begin() + (to - lo_ + 1));
    p.normalize();
    return p;
  }

  LaurentPoly negative_part() const { return slice(std::numeric_limits<int>::min(), -1); }
  LaurentPoly nonnegative_part() const { return slice(0, std::numeric_limits<int>::max()); }
  LaurentPoly positive_part() const { return slice(1, std::numeric_limits<int>::max()); }

  bool in_negative_span() const { return is_zero() || max_degree() < 0; }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add(o, -1); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.lo_ = a.lo_ + b.lo_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.normalize();
    return p;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.lo_ == b.lo_);
  }

  /// Cache encoding "c1:e1,c2:e2" by increasing exponent; "0" for zero.
  std::string encode() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto [e, c] : terms()) {
      if (!s.empty()) s += ',';
      s += std::to_string(c) + ':' + std::to_string(e);
    }
    return s;
  }

  /// Inverse of encode; errors report the byte offset within text.
  static LaurentPoly decode(std::string_view text, std::size_t base_offset = 0) {
    LaurentPoly p;
    if (text == "0") return p;
    std::size_t pos = 0;
    bool first = true;
    int last_e = 0;
    while (pos < text.size() || first) {
      Coeff c = 0;
      int e = 0;
      pos = parse_number(text, pos, c, base_offset);
      if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' in polynomial", base_offset + pos);
      pos = parse_number(text, pos + 1, e, base_offset);
      if (c == 0) throw ParseError("zero coefficient in polynomial", base_offset + pos);
      if (!first && e <= last_e) throw ParseError("exponents must increase", base_offset + pos);
      p += monomial(c, e);
      first = false;
      last_e = e;
      if (pos < text.size()) {
        if (text[pos] != ',') throw ParseError("expected ',' in polynomial", base_offset + pos);
        ++pos;
        if (pos == text.size()) throw ParseError("trailing ',' in polynomial", base_offset + pos);
      }
    }
    return p;
  }

  /// Human-readable, e.g. "v^-3 + 2 - v".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto [e, c] : terms()) {
      const Coeff m = c < 0 ? -c : c;
      if (s.empty()) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      if (e == 0) {
        s += std::to_string(m);
        continue;
      }
      if (m != 1) s += std::to_string(m);
      s += e == 1 ? "v" : "v^" + std::to_string(e);
    }
    return s;
  }

 private:
  template <class Int>
  static std::size_t parse_number(std::string_view text, std::size_t pos, Int& out, std::size_t base) {
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) throw ParseError("expected integer in polynomial", base + pos);
    return static_cast<std::size_t>(ptr - text.data());
  }

  LaurentPoly& add(const LaurentPoly& o, Coeff sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      lo_ = o.lo_;
      coeffs_.assign(o.coeffs_.size(), 0);
    }
    const int lo = std::min(lo_, o.lo_);
    const int hi = std::max(max_degree(), o.max_degree());
    if (lo < lo_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - lo), 0);
    lo_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[static_cast<std::size_t>(o.lo_ - lo_) + i] += sign * o.coeffs_[i];
    normalize();
    return *this;
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t z = 0;
    while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
    if (z == coeffs_.size()) {
      coeffs_.clear();
      lo_ = 0;
      return;
    }
    if (z) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
      lo_ += static_cast<int>(z);
    }
  }

  int lo_ = 0;
  std::vector<Coeff> coeffs_;
};

}  // namespace dckl
