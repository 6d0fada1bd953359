// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dckl/dckl.hpp"

using namespace dckl;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const VerificationReport& rep) {
    if (!rep.passed() && ok) {
      ok = false;
      const auto& c = rep.counterexamples.front();
      detail = rep.config.check + " n=" + std::to_string(rep.config.n) + " r=" + std::to_string(rep.config.r) + ": " +
               c.x + " " + c.y + " (" + c.lhs + " / " + c.rhs + ")";
    }
  }
};

long chain_count(const Partition& lambda, const Partition& core, std::map<Partition, long>& memo) {
  if (lambda == core) return 1;
  if (!lambda.contains(core)) return 0;
  const auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  long total = 0;
  for (const auto& p : remove_domino(lambda)) total += chain_count(p, core, memo);
  return memo[lambda] = total;
}

long group_order(int n) {
  long k = 1L << n;
  for (int i = 2; i <= n; ++i) k *= i;
  return k;
}

Outcome bijection_counts() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= 6; ++r) {
      const std::string at = " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
      std::map<Partition, long> memo;
      long sum = 0, chains = 0;
      std::map<Partition, long> f;
      for (const auto& lam : partitions_Pr(r, n)) {
        const long k = static_cast<long>(sdt_enumerate(lam, r).size());
        const long c = chain_count(lam, delta(r), memo);
        o.require(k == c, "tableau count differs from chain count for " + lam.to_string() + at);
        f[lam] = k;
        sum += k * k;
        chains += c * c;
      }
      o.require(sum == group_order(n) && chains == group_order(n), "sum of squares differs from 2^n n!" + at);
      std::set<std::pair<DominoTableau, DominoTableau>> pairs;
      std::map<Partition, long> images;
      for (const SignedPerm& w : enumerate(n)) {
        auto pq = domino_pair(w, r);
        o.require(pq.P.shape() == pq.Q.shape() && in_Pr(pq.P.shape(), r, n), "shape outside P_r(n)" + at);
        ++images[pq.P.shape()];
        pairs.emplace(std::move(pq.P), std::move(pq.Q));
      }
      o.require(static_cast<long>(pairs.size()) == group_order(n), "insertion is not injective" + at);
      for (const auto& [lam, k] : f) o.require(images[lam] == k * k, "fiber size differs from f^2 for " + lam.to_string() + at);
    }
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 4; ++r)
      for (const SignedPerm& w : enumerate(n)) {
        const auto pq = domino_pair(w, r);
        const auto inv = domino_pair(inverse(w), r);
        o.require(from_pair(pq.P, pq.Q) == w, "round trip fails at " + w.to_string());
        o.require(pq.P == inv.Q && pq.Q == inv.P, "P(w) != Q(w^-1) at " + w.to_string());
      }
  return o;
}

Outcome rcells_match_kl() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 3; ++r) o.absorb(verify_A(n, r));
  // Left r-cells are distinct for r = 0..n-1 and stable from r = n-1 on.
  for (int n = 2; n <= 4; ++n) {
    const GroupTable G(n);
    std::vector<Labeling> left;
    for (int r = 0; r <= n; ++r) left.push_back(detail::rcells(G, r).left);
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s)
        o.require(left[static_cast<std::size_t>(r)] != left[static_cast<std::size_t>(s)],
                  "left r-cells coincide for r=" + std::to_string(r) + ", " + std::to_string(s));
    o.require(left[static_cast<std::size_t>(n - 1)] == left[static_cast<std::size_t>(n)],
              "left r-cells not stable at n=" + std::to_string(n));
  }
  return o;
}

Outcome weight_interval() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) {
      std::vector<Weights> samples;
      for (int a = 2; samples.size() < 3; ++a)
        for (int b = r * a + 1; b < (r + 1) * a && samples.size() < 3; ++b)
          if (!(a == 2 && b == 2 * r + 1)) samples.push_back({a, b});
      o.absorb(verify_A_plus(n, r, samples));
    }
  bool threw = false;
  try {
    (void)verify_A_plus(2, 1, {{3, 3}});
  } catch (const InvalidArgument&) {
    threw = true;
  }
  o.require(threw, "out-of-interval sample accepted");
  return o;
}

Outcome join_and_open_cycles() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      const auto b = verify_B(n, r), d = verify_D(n, r);
      o.absorb(b);
      o.absorb(d);
      o.require(b.passed() == d.passed(),
                "B and D disagree at n=" + std::to_string(n) + ", r=" + std::to_string(r));
    }
  return o;
}

Outcome dominance() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) o.absorb(verify_cplus(n, r));
  return o;
}

Outcome symmetric_embedding() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 3; ++r) o.absorb(verify_thm_sn(n, r));
  return o;
}

Outcome moving_through() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r) o.absorb(verify_cycles(n, r));
  return o;
}

Outcome cell_invariants() {
  Outcome o;
  bool certified = false;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 3; ++r) {
      const auto rep = verify_props(n, r);
      o.absorb(rep);
      for (const auto& c : rep.certified)
        certified = certified || (c.x == "[5,6,1,4,2,-3]" && c.y == "[5,6,-1,4,3,2]");
    }
  o.require(certified, "coplactic counterexample not certified");
  return o;
}

Outcome kl_recursion() {
  Outcome o;
  const Weights weights[] = {{1, 1}, {2, 1}, {1, 2}, {2, 3}, {3, 5}};
  auto G = std::make_shared<const GroupTable>(3);
  for (const Weights& wt : weights) {
    const std::string at = " at (" + std::to_string(wt.a) + "," + std::to_string(wt.b) + ")";
    const HeckeAlgebra alg(G, wt);
    const KLBasis kl = KLBasis::build(G, wt);
    const auto tri = kl_basis_triangular(alg);
    for (int w = 0; w < G->size(); ++w) {
      const auto& s = tri[static_cast<std::size_t>(w)];
      o.require(kl.C(w).index == s.index && kl.C(w).coeff == s.coeff,
                "recursion differs from triangular solve for " + G->element(w).to_string() + at);
      const HeckeElt c = kl.C_dense(w);
      o.require(alg.bar(c) == c, "C_w not bar-invariant for " + G->element(w).to_string() + at);
      o.require(c.star() == kl.C_dense(G->inverse(w)), "star(C_w) != C_(w^-1) for " + G->element(w).to_string() + at);
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"domino insertion is a bijection and sum of f^2 = 2^n n! (n, r <= 6)", bijection_counts},
      {"from_pair inverts insertion and P(w) = Q(w^-1) on W_4, r <= 4", round_trip},
      {"KL cells at (2, 2r+1) are the r-cells, n <= 4, r <= 3; r-cells distinct then stable", rcells_match_kl},
      {"KL cells constant across ra < b < (r+1)a, n <= 3, r <= 2", weight_interval},
      {"B and D agree with KL cells at (1, r) and with each other, n <= 4, r <= 3", join_and_open_cycles},
      {"KL two-sided order matches dominance, n <= 3, r <= 2", dominance},
      {"symmetric group identities through the embedding, n <= 4, r <= 3", symmetric_embedding},
      {"moving through cycles is standard, involutive and order-independent on W_4, r <= 2", moving_through},
      {"r-cell and coplactic invariants, n <= 4, r <= 3, counterexample certified", cell_invariants},
      {"KL recursion equals triangular solve, bar-invariant and star-compatible on W_3", kl_recursion},
  };
  int failures = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d: %s [%.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", k, name.c_str(), secs, o.ok ? "" : " -- ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures ? 1 : 0;
}
