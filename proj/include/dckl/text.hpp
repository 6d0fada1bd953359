#pragma once

// Text encodings:
//   signed permutation  [5,6,1,4,2,-3]
//   partition           (5,3,2)  or  ()
//   domino tableau      [(1);(3);(3,2)]   (its shape chain)
//   cycle               {1,3,4}

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "dckl/cycles.hpp"
#include "dckl/domino.hpp"
#include "dckl/error.hpp"
#include "dckl/partition.hpp"
#include "dckl/signed_perm.hpp"

namespace dckl {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  std::size_t pos() const noexcept { return pos_; }
  bool done() {
    skip_space();
    return pos_ == s_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  int integer() {
    skip_space();
    int v = 0;
    const char* b = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(b, s_.data() + s_.size(), v);
    if (ec != std::errc{} || ptr == b) throw ParseError("expected integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - b);
    return v;
  }

  /// Comma-separated integers up to close, the opening bracket consumed.
  std::vector<int> list(char close) {
    std::vector<int> out;
    if (accept(close)) return out;
    for (;;) {
      out.push_back(integer());
      if (accept(close)) return out;
      expect(',');
    }
  }

  void finish() {
    if (!done()) throw ParseError("trailing characters", pos_);
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class F>
auto parse_with_offset(std::size_t at, F f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), at);
  }
}

inline Partition read_partition(Scanner& sc) {
  sc.expect('(');
  const std::size_t at = sc.pos();
  auto parts = sc.list(')');
  return parse_with_offset(at, [&] { return Partition(std::move(parts)); });
}

}  // namespace detail

inline SignedPerm parse_perm(std::string_view text) {
  detail::Scanner sc(text);
  sc.expect('[');
  auto win = sc.list(']');
  sc.finish();
  return detail::parse_with_offset(0, [&] { return SignedPerm(std::move(win)); });
}

inline Partition parse_partition(std::string_view text) {
  detail::Scanner sc(text);
  Partition p = detail::read_partition(sc);
  sc.finish();
  return p;
}

/// A standard domino tableau from its shape chain; the core is the first shape.
inline DominoTableau parse_domino_tableau(std::string_view text) {
  detail::Scanner sc(text);
  sc.expect('[');
  std::vector<Partition> chain;
  for (;;) {
    chain.push_back(detail::read_partition(sc));
    if (sc.accept(']')) break;
    sc.expect(';');
  }
  sc.finish();
  const int r = staircase_rank(chain.front());
  if (r < 0) throw ParseError("first shape of a domino chain must be a staircase", 1);
  return detail::parse_with_offset(0, [&] { return DominoTableau::from_chain(r, std::move(chain)); });
}

inline std::vector<int> parse_cycle(std::string_view text) {
  detail::Scanner sc(text);
  sc.expect('{');
  auto v = sc.list('}');
  sc.finish();
  return v;
}

inline std::string format(const SignedPerm& w) { return w.to_string(); }
inline std::string format(const Partition& p) { return p.to_string(); }
inline std::string format(const DominoTableau& d) { return d.to_string(); }
inline std::string format(const Cycle& c) { return c.to_string(); }

}  // namespace dckl
