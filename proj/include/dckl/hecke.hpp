#pragma once

// The Iwahori-Hecke algebra of W_n with weights L(t) = b, L(s_i) = a, in
// the standard basis T_w:
//   T_s T_w = T_sw                          if l(sw) > l(w),
//   T_s T_w = T_sw + (v^L(s) - v^-L(s)) T_w  otherwise.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dckl/error.hpp"
#include "dckl/group_table.hpp"
#include "dckl/laurent.hpp"

namespace dckl {

struct Weights {
  int a = 1;  // L(s_i)
  int b = 1;  // L(t)

  int of(GroupTable::Gen g) const { return g == 0 ? b : a; }

  void validate() const {
    if (a <= 0 || b <= 0) throw InvalidArgument("weights must be positive");
  }

  friend bool operator==(const Weights&, const Weights&) = default;
};

/// v^L - v^-L.
inline LaurentPoly quadratic_term(int weight) {
  return LaurentPoly::monomial(1, weight) - LaurentPoly::monomial(1, -weight);
}

/// An element sum_w h_w T_w, stored densely over the group table.
class HeckeElt {
 public:
  explicit HeckeElt(std::shared_ptr<const GroupTable> group)
      : group_(std::move(group)), coeffs_(static_cast<std::size_t>(group_->size())) {}

  static HeckeElt basis(std::shared_ptr<const GroupTable> group, int w) {
    HeckeElt h(std::move(group));
    h.coeffs_.at(static_cast<std::size_t>(w)) = 1;
    return h;
  }

  const GroupTable& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const noexcept { return group_; }

  const LaurentPoly& operator[](int w) const { return coeffs_[static_cast<std::size_t>(w)]; }
  LaurentPoly& operator[](int w) { return coeffs_[static_cast<std::size_t>(w)]; }

  /// Indices with a nonzero coefficient, in enumeration order.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int w = 0; w < group_->size(); ++w)
      if (!coeffs_[static_cast<std::size_t>(w)].is_zero()) out.push_back(w);
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  HeckeElt& operator*=(const LaurentPoly& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, HeckeElt h) { return h *= c; }

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.coeffs_ == b.coeffs_; }

  /// T_g * this.
  HeckeElt left_mult(GroupTable::Gen g, const Weights& wt) const {
    return mult(g, wt, [&](int w) { return group_->left(g, w); });
  }

  /// this * T_g.
  HeckeElt right_mult(GroupTable::Gen g, const Weights& wt) const {
    return mult(g, wt, [&](int w) { return group_->right(w, g); });
  }

  /// T_w -> T_{w^-1}, an anti-automorphism.
  HeckeElt star() const {
    HeckeElt h(group_);
    for (int w = 0; w < group_->size(); ++w) h[group_->inverse(w)] = (*this)[w];
    return h;
  }

 private:
  template <class Neighbor>
  HeckeElt mult(GroupTable::Gen g, const Weights& wt, Neighbor next) const {
    HeckeElt h(group_);
    const LaurentPoly q = quadratic_term(wt.of(g));
    for (int w = 0; w < group_->size(); ++w) {
      const LaurentPoly& c = (*this)[w];
      if (c.is_zero()) continue;
      const int sw = next(w);
      h[sw] += c;
      if (group_->length(sw) < group_->length(w)) h[w] += c * q;
    }
    return h;
  }

  std::shared_ptr<const GroupTable> group_;
  std::vector<LaurentPoly> coeffs_;
};

/// H together with memoized bar(T_w).
class HeckeAlgebra {
 public:
  HeckeAlgebra(std::shared_ptr<const GroupTable> group, Weights wt)
      : group_(std::move(group)), wt_(wt), bars_(static_cast<std::size_t>(group_->size())) {
    wt_.validate();
  }

  const GroupTable& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const noexcept { return group_; }
  const Weights& weights() const noexcept { return wt_; }

  HeckeElt zero() const { return HeckeElt(group_); }
  HeckeElt T(int w) const { return HeckeElt::basis(group_, w); }

  /// h * h' via reduced words of the support of h'.
  HeckeElt multiply(const HeckeElt& h, const HeckeElt& k) const {
    HeckeElt out(group_);
    for (int y : k.support()) {
      HeckeElt part = h;
      for (GroupTable::Gen g : word(y)) part = part.right_mult(g, wt_);
      out += k[y] * part;
    }
    return out;
  }

  /// bar(T_w) = T_{w^-1}^{-1}, expanded in the T basis.
  const HeckeElt& bar_T(int w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return bar_T_locked(w);
  }

  /// The ring involution v -> v^-1, T_w -> T_{w^-1}^{-1}.
  HeckeElt bar(const HeckeElt& h) const {
    HeckeElt out(group_);
    for (int w : h.support()) out += h[w].bar() * bar_T(w);
    return out;
  }

  /// A reduced word g_1 ... g_k of w with T_w = T_g1 ... T_gk.
  std::vector<GroupTable::Gen> word(int w) const {
    std::vector<GroupTable::Gen> out;
    while (w != group_->identity()) {
      const GroupTable::Gen g = group_->first_left_descent(w);
      out.push_back(g);
      w = group_->left(g, w);
    }
    return out;
  }

 private:
  const HeckeElt& bar_T_locked(int w) const {
    auto& slot = bars_[static_cast<std::size_t>(w)];
    if (slot) return *slot;
    if (w == group_->identity()) {
      slot = T(w);
      return *slot;
    }
    // bar(T_w) = bar(T_g) bar(T_gw), bar(T_g) = T_g - (v^L - v^-L)
    const GroupTable::Gen g = group_->first_left_descent(w);
    const HeckeElt& rest = bar_T_locked(group_->left(g, w));
    HeckeElt h = rest.left_mult(g, wt_);
    HeckeElt corr = rest;
    corr *= quadratic_term(wt_.of(g));
    h -= corr;
    slot = std::move(h);
    return *slot;
  }

  std::shared_ptr<const GroupTable> group_;
  Weights wt_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<HeckeElt>> bars_;
};

}  // namespace dckl
