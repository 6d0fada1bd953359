#pragma once

// The Kazhdan-Lusztig basis C_w = T_w + sum_{y<w} p_{y,w} T_y with
// p_{y,w} in v^-1 Z[v^-1] and bar(C_w) = C_w, for weights L_{a,b}.
//
// Built by induction on length: for gw > w,
//   C_g C_w = C_gw + sum_{z<gw} mu_z C_z,
// where each mu_z is bar-invariant and read off from the nonnegative part of
// the running coefficient.  The same expansions yield the left preorder.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "dckl/error.hpp"
#include "dckl/group_table.hpp"
#include "dckl/hecke.hpp"
#include "dckl/laurent.hpp"

namespace dckl {

/// Caps the rank of exhaustive computations.
struct Budget {
  bool allow_rank5 = false;
  bool allow_rank6 = false;

  void check(int n) const {
    if (n < 1) throw InvalidArgument("rank must be at least 1");
    if (n <= 4) return;
    if (n == 5 && allow_rank5) return;
    if (n == 6 && allow_rank6) return;
    throw ResourceError("rank " + std::to_string(n) + " exceeds the configured bound");
  }
};

/// A Hecke element stored by its support.
struct SparseElt {
  std::vector<int> index;  // increasing
  std::vector<LaurentPoly> coeff;

  const LaurentPoly* find(int w) const {
    const auto it = std::lower_bound(index.begin(), index.end(), w);
    if (it == index.end() || *it != w) return nullptr;
    return &coeff[static_cast<std::size_t>(it - index.begin())];
  }

  static SparseElt from_dense(const HeckeElt& h) {
    SparseElt s;
    for (int w : h.support()) {
      s.index.push_back(w);
      s.coeff.push_back(h[w]);
    }
    return s;
  }

  HeckeElt to_dense(std::shared_ptr<const GroupTable> group) const {
    HeckeElt h(std::move(group));
    for (std::size_t i = 0; i < index.size(); ++i) h[index[i]] = coeff[i];
    return h;
  }

  friend bool operator==(const SparseElt&, const SparseElt&) = default;
};

struct KLOptions {
  int threads = 1;
  Budget budget;
};

class KLBasis {
 public:
  using Edges = std::vector<std::vector<int>>;

  const GroupTable& group() const noexcept { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const noexcept { return group_; }
  const Weights& weights() const noexcept { return wt_; }

  const SparseElt& C(int w) const { return basis_.at(static_cast<std::size_t>(w)); }
  HeckeElt C_dense(int w) const { return C(w).to_dense(group_); }

  /// p_{y,w}; zero unless y <= w.
  LaurentPoly p(int y, int w) const {
    const LaurentPoly* c = C(w).find(y);
    return c ? *c : LaurentPoly{};
  }

  /// w -> y whenever C_y occurs in some C_g C_w; then y <=_L w.
  const Edges& left_edges() const noexcept { return left_; }

  /// Builds the basis and the left edges for W_n.
  static KLBasis build(std::shared_ptr<const GroupTable> group, Weights wt, const KLOptions& opt = {}) {
    wt.validate();
    opt.budget.check(group->rank());
    KLBasis kl(std::move(group), wt);
    kl.run(opt.threads, true);
    return kl;
  }

  static KLBasis build(int n, Weights wt, const KLOptions& opt = {}) {
    opt.budget.check(n);
    return build(std::make_shared<const GroupTable>(n), wt, opt);
  }

  /// Rebuilds from a known basis (e.g. a cache), recomputing the edges.
  static KLBasis from_basis(std::shared_ptr<const GroupTable> group, Weights wt, std::vector<SparseElt> basis,
                            int threads = 1) {
    wt.validate();
    if (static_cast<int>(basis.size()) != group->size()) throw InvalidArgument("basis size does not match the group");
    KLBasis kl(std::move(group), wt);
    kl.basis_ = std::move(basis);
    kl.run(threads, false);
    return kl;
  }

  // -------------------------------------------------------------------------
  // Text cache: "DCKL 1 n=<n> a=<a> b=<b>" then "<w> <y> <poly>" per nonzero
  // p_{y,w}, in enumeration order of (w, y).

  void save(std::ostream& out) const {
    out << "DCKL 1 n=" << group_->rank() << " a=" << wt_.a << " b=" << wt_.b << "\n";
    for (int w = 0; w < group_->size(); ++w) {
      const SparseElt& c = C(w);
      for (std::size_t i = 0; i < c.index.size(); ++i)
        out << w << ' ' << c.index[i] << ' ' << c.coeff[i].encode() << '\n';
    }
  }

  static KLBasis load(std::istream& in, int threads = 1, const Budget& budget = {}) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text, threads, budget);
  }

  static KLBasis parse(const std::string& text, int threads = 1, const Budget& budget = {}) {
    std::size_t pos = text.find('\n');
    if (pos == std::string::npos) throw ParseError("missing cache header", 0);
    int n = 0;
    Weights wt;
    {
      std::istringstream hs(text.substr(0, pos));
      std::string magic, version, fn, fa, fb;
      hs >> magic >> version >> fn >> fa >> fb;
      if (magic != "DCKL" || version != "1" || fn.rfind("n=", 0) != 0 || fa.rfind("a=", 0) != 0 ||
          fb.rfind("b=", 0) != 0)
        throw ParseError("bad cache header", 0);
      try {
        n = std::stoi(fn.substr(2));
        wt.a = std::stoi(fa.substr(2));
        wt.b = std::stoi(fb.substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad number in cache header", 0);
      }
    }
    budget.check(n);
    if (wt.a <= 0 || wt.b <= 0) throw ParseError("non-positive weight in cache header", 0);
    auto group = std::make_shared<const GroupTable>(n);
    std::vector<SparseElt> basis(static_cast<std::size_t>(group->size()));
    std::size_t line_start = pos + 1;
    int last_w = -1, last_y = -1;
    while (line_start < text.size()) {
      std::size_t line_end = text.find('\n', line_start);
      if (line_end == std::string::npos) line_end = text.size();
      const std::string_view line(text.data() + line_start, line_end - line_start);
      if (!line.empty()) {
        const std::size_t s1 = line.find(' ');
        const std::size_t s2 = s1 == std::string_view::npos ? s1 : line.find(' ', s1 + 1);
        if (s2 == std::string_view::npos) throw ParseError("expected '<w> <y> <poly>'", line_start);
        const int w = parse_index(line.substr(0, s1), line_start, group->size());
        const int y = parse_index(line.substr(s1 + 1, s2 - s1 - 1), line_start + s1 + 1, group->size());
        if (w < last_w || (w == last_w && y <= last_y))
          throw ParseError("cache entries out of order", line_start);
        last_w = w;
        last_y = y;
        LaurentPoly poly = LaurentPoly::decode(line.substr(s2 + 1), line_start + s2 + 1);
        basis[static_cast<std::size_t>(w)].index.push_back(y);
        basis[static_cast<std::size_t>(w)].coeff.push_back(std::move(poly));
      }
      line_start = line_end + 1;
    }
    for (int w = 0; w < group->size(); ++w) {
      const LaurentPoly* top = basis[static_cast<std::size_t>(w)].find(w);
      if (!top || !(*top == LaurentPoly(1)))
        throw ParseError("cache lacks the leading term of C_" + std::to_string(w), text.size());
    }
    return from_basis(std::move(group), wt, std::move(basis), threads);
  }

  void save_file(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write " + tmp);
      save(out);
      if (!out) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot rename " + tmp);
  }

  static KLBasis load_file(const std::string& path, int threads = 1, const Budget& budget = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    return load(in, threads, budget);
  }

 private:
  KLBasis(std::shared_ptr<const GroupTable> group, Weights wt) : group_(std::move(group)), wt_(wt) {
    basis_.resize(static_cast<std::size_t>(group_->size()));
    left_.resize(static_cast<std::size_t>(group_->size()));
  }

  static int parse_index(std::string_view s, std::size_t offset, int size) {
    int v = -1;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0 || v >= size)
      throw ParseError("bad element index", offset);
    return v;
  }

  struct Expansion {
    int target = -1;
    bool canonical = false;  // the product that defines C_target
    SparseElt product;       // C_target, when canonical
    std::vector<int> lower;  // z with mu_z != 0
  };

  /// C_g C_w = C_gw + sum mu_z C_z for gw > w.
  Expansion expand(GroupTable::Gen g, int w, bool build, std::vector<LaurentPoly>& scratch) const {
    const GroupTable& G = *group_;
    const int gw = G.left(g, w);
    const int L = wt_.of(g);
    const LaurentPoly q = quadratic_term(L), vinv = LaurentPoly::monomial(1, -L);
    Expansion e;
    e.target = gw;
    e.canonical = build && G.first_left_descent(gw) == g;

    std::fill(scratch.begin(), scratch.end(), LaurentPoly{});
    const SparseElt& cw = C(w);
    for (std::size_t i = 0; i < cw.index.size(); ++i) {
      const int y = cw.index[i];
      const LaurentPoly& c = cw.coeff[i];
      const int gy = G.left(g, y);
      scratch[static_cast<std::size_t>(gy)] += c;
      if (G.length(gy) < G.length(y)) scratch[static_cast<std::size_t>(y)] += c * q;
      scratch[static_cast<std::size_t>(y)] += c * vinv;
    }
    const auto& order = G.by_length();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int z = *it;
      if (z == gw) continue;
      const LaurentPoly& c = scratch[static_cast<std::size_t>(z)];
      if (c.is_zero() || c.in_negative_span()) continue;
      const LaurentPoly mu = c.nonnegative_part() + c.positive_part().bar();
      const SparseElt& cz = C(z);
      for (std::size_t i = 0; i < cz.index.size(); ++i)
        scratch[static_cast<std::size_t>(cz.index[i])] -= mu * cz.coeff[i];
      e.lower.push_back(z);
    }
    std::sort(e.lower.begin(), e.lower.end());
    if (e.canonical) {
      for (int y = 0; y < G.size(); ++y)
        if (!scratch[static_cast<std::size_t>(y)].is_zero()) {
          e.product.index.push_back(y);
          e.product.coeff.push_back(scratch[static_cast<std::size_t>(y)]);
        }
    }
    return e;
  }

  void run(int threads, bool build) {
    const GroupTable& G = *group_;
    if (build) basis_[static_cast<std::size_t>(G.identity())] = SparseElt{{G.identity()}, {LaurentPoly(1)}};
    int max_len = 0;
    for (int w = 0; w < G.size(); ++w) max_len = std::max(max_len, G.length(w));
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(max_len + 1));
    for (int w : G.by_length()) layers[static_cast<std::size_t>(G.length(w))].push_back(w);
    threads = std::max(1, threads);

    for (const auto& layer : layers) {
      std::vector<std::vector<Expansion>> results(layer.size());
      auto work = [&](std::size_t begin, std::size_t stride) {
        std::vector<LaurentPoly> scratch(static_cast<std::size_t>(G.size()));
        for (std::size_t i = begin; i < layer.size(); i += stride) {
          const int w = layer[i];
          for (GroupTable::Gen g = 0; g < G.generator_count(); ++g)
            if (G.length(G.left(g, w)) > G.length(w)) results[i].push_back(expand(g, w, build, scratch));
        }
      };
      if (threads == 1 || layer.size() < 2) {
        work(0, 1);
      } else {
        std::vector<std::thread> pool;
        const auto t = static_cast<std::size_t>(std::min<std::size_t>(threads, layer.size()));
        for (std::size_t k = 0; k < t; ++k) pool.emplace_back(work, k, t);
        for (auto& th : pool) th.join();
      }
      // deterministic merge in layer order
      for (std::size_t i = 0; i < layer.size(); ++i) {
        const int w = layer[i];
        std::set<int> targets;
        for (Expansion& e : results[i]) {
          targets.insert(e.target);
          targets.insert(e.lower.begin(), e.lower.end());
          if (e.canonical) basis_[static_cast<std::size_t>(e.target)] = std::move(e.product);
        }
        targets.erase(w);
        left_[static_cast<std::size_t>(w)].assign(targets.begin(), targets.end());
      }
    }
  }

  std::shared_ptr<const GroupTable> group_;
  Weights wt_;
  std::vector<SparseElt> basis_;
  Edges left_;
};

/// Independent construction: solve p_{x,w} - bar(p_{x,w}) =
/// sum_{x<y<=w} bar(p_{y,w}) r_{x,y}, where bar(T_y) = sum_x r_{x,y} T_x.
inline std::vector<SparseElt> kl_basis_triangular(const HeckeAlgebra& alg) {
  const GroupTable& G = alg.group();
  const int N = G.size();
  std::vector<std::vector<LaurentPoly>> r(static_cast<std::size_t>(N));  // r[y][x]
  for (int y = 0; y < N; ++y) {
    const HeckeElt& b = alg.bar_T(y);
    r[static_cast<std::size_t>(y)].resize(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) r[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = b[x];
  }
  std::vector<SparseElt> out(static_cast<std::size_t>(N));
  const auto& order = G.by_length();
  for (int w = 0; w < N; ++w) {
    std::vector<LaurentPoly> p(static_cast<std::size_t>(N));
    p[static_cast<std::size_t>(w)] = 1;
    std::vector<int> nonzero{w};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int x = *it;
      if (G.length(x) >= G.length(w)) continue;
      LaurentPoly rhs;
      for (int y : nonzero) rhs += p[static_cast<std::size_t>(y)].bar() * r[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      const LaurentPoly px = rhs.negative_part();
      if (!(px - px.bar() == rhs)) throw std::logic_error("bar-invariance system is inconsistent");
      if (!px.is_zero()) {
        p[static_cast<std::size_t>(x)] = px;
        nonzero.push_back(x);
      }
    }
    for (int x = 0; x < N; ++x)
      if (!p[static_cast<std::size_t>(x)].is_zero()) {
        out[static_cast<std::size_t>(w)].index.push_back(x);
        out[static_cast<std::size_t>(w)].coeff.push_back(p[static_cast<std::size_t>(x)]);
      }
  }
  return out;
}

}  // namespace dckl
