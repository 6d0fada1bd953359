#pragma once

// Indexed multiplication tables for W_n, used by the Hecke algebra layer.
// Element indices follow the deterministic order of enumerate(n).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "dckl/signed_perm.hpp"

namespace dckl {

class GroupTable {
 public:
  /// Simple generator g: 0 is t, i in 1..n-1 is s_i.
  using Gen = int;

  explicit GroupTable(int n) : n_(n), elements_(enumerate(n)) {
    const int size = static_cast<int>(elements_.size());
    index_.reserve(elements_.size());
    for (int i = 0; i < size; ++i) index_.emplace(encode(elements_[i]), i);
    length_.resize(size);
    inverse_.resize(size);
    left_.assign(n, std::vector<int>(size));
    right_.assign(n, std::vector<int>(size));
    for (int i = 0; i < size; ++i) {
      const SignedPerm& w = elements_[i];
      length_[i] = dckl::length(w);
      inverse_[i] = index_of(dckl::inverse(w));
      for (Gen g = 0; g < n; ++g) {
        left_[g][i] = index_of(left_multiply(generator(g), w));
        right_[g][i] = index_of(right_multiply(w, generator(g)));
      }
    }
    by_length_.resize(size);
    std::iota(by_length_.begin(), by_length_.end(), 0);
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [&](int a, int b) { return length_[a] < length_[b]; });
    identity_ = index_of(SignedPerm::identity(n));
    longest_ = index_of(SignedPerm::longest(n));
  }

  int rank() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  int generator_count() const noexcept { return n_; }

  static Generator generator(Gen g) {
    return g == 0 ? Generator::t() : Generator::s(g);
  }

  const SignedPerm& element(int i) const { return elements_.at(i); }
  const std::vector<SignedPerm>& elements() const noexcept { return elements_; }

  int index_of(const SignedPerm& w) const {
    if (w.rank() != n_) throw InvalidArgument("element has the wrong rank");
    const auto it = index_.find(encode(w));
    if (it == index_.end()) throw InvalidArgument("element not in table");
    return it->second;
  }

  int length(int i) const { return length_[i]; }
  int inverse(int i) const { return inverse_[i]; }
  int left(Gen g, int i) const { return left_[g][i]; }
  int right(int i, Gen g) const { return right_[g][i]; }
  int identity() const noexcept { return identity_; }
  int longest() const noexcept { return longest_; }

  /// Indices sorted by increasing length (stable in enumeration order).
  const std::vector<int>& by_length() const noexcept { return by_length_; }

  /// First g with l(gw) < l(w), or -1 for the identity.
  Gen first_left_descent(int i) const {
    for (Gen g = 0; g < n_; ++g)
      if (length_[left_[g][i]] < length_[i]) return g;
    return -1;
  }

 private:
  std::uint64_t encode(const SignedPerm& w) const {
    std::uint64_t code = 0;
    for (int v : w.window()) code = code * static_cast<std::uint64_t>(2 * n_ + 1) + (v + n_);
    return code;
  }

  int n_;
  std::vector<SignedPerm> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> length_, inverse_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<int> by_length_;
  int identity_ = 0, longest_ = 0;
};

/// Bruhat order on W_n, via the lifting property
///   s w < w  =>  (y <= w  iff  min(y, s y) <= s w).
/// Rows of the order are memoized lazily; access is internally synchronized.
class BruhatOrder {
 public:
  explicit BruhatOrder(std::shared_ptr<const GroupTable> group)
      : group_(std::move(group)), rows_(group_->size()) {}

  const GroupTable& group() const noexcept { return *group_; }

  bool leq(int y, int w) const {
    const Row& row = row_of(w);
    return (row[y >> 6] >> (y & 63)) & 1u;
  }

  bool leq(const SignedPerm& y, const SignedPerm& w) const {
    if (y.rank() != w.rank()) throw InvalidArgument("rank mismatch in bruhat_leq");
    return leq(group_->index_of(y), group_->index_of(w));
  }

 private:
  using Row = std::vector<std::uint64_t>;

  const Row& row_of(int w) const {
    std::lock_guard lock(mutex_);
    return build(w);
  }

  const Row& build(int w) const {
    if (!rows_[w].empty()) return rows_[w];
    const GroupTable& g = *group_;
    Row row((g.size() + 63) / 64, 0);
    const int s = g.first_left_descent(w);
    if (s < 0) {
      row[w >> 6] |= std::uint64_t{1} << (w & 63);
    } else {
      const Row& lower = build(g.left(s, w));
      for (int y = 0; y < g.size(); ++y) {
        const int sy = g.left(s, y);
        const bool in = ((lower[y >> 6] >> (y & 63)) & 1u) || ((lower[sy >> 6] >> (sy & 63)) & 1u);
        if (in) row[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
    }
    rows_[w] = std::move(row);
    return rows_[w];
  }

  std::shared_ptr<const GroupTable> group_;
  mutable std::vector<Row> rows_;
  mutable std::mutex mutex_;
};

inline bool bruhat_leq(const SignedPerm& y, const SignedPerm& w) {
  if (y.rank() != w.rank()) throw InvalidArgument("rank mismatch in bruhat_leq");
  BruhatOrder order(std::make_shared<GroupTable>(w.rank()));
  return order.leq(y, w);
}

}  // namespace dckl
