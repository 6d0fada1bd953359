// dckl: cells, domino insertion, cycles, verification runs and the KL cache.
//
// Exit status: 0 success or pass, 1 verification failure, 2 usage error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dckl/dckl.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Common {
  int threads = 1;
  std::string cache;
  bool allow_n5 = false;
  bool allow_n6 = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "worker threads for the KL computation")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", c.cache, "KL cache directory (default: $DCKL_CACHE_DIR)");
  cmd->add_flag("--allow-n5", c.allow_n5, "permit rank 5");
  cmd->add_flag("--allow-n6", c.allow_n6, "permit rank 6 (needs a cache directory)");
}

dckl::RunOptions run_options(const Common& c) {
  dckl::RunOptions o;
  o.cache_dir = c.cache.empty() ? dckl::default_cache_dir() : c.cache;
  o.threads = c.threads;
  o.budget = {c.allow_n5, c.allow_n6};
  if (c.allow_n6 && o.cache_dir.empty())
    throw dckl::InvalidArgument("--allow-n6 needs a cache directory (--cache or DCKL_CACHE_DIR)");
  return o;
}

/// "3:4,3:5" -> {(3,4), (3,5)}.
std::vector<dckl::Weights> parse_samples(const std::string& text) {
  std::vector<dckl::Weights> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw dckl::InvalidArgument("sample '" + item + "' is not a:b");
    try {
      out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw dckl::InvalidArgument("sample '" + item + "' is not a:b");
    }
  }
  return out;
}

int cmd_cells(int n, dckl::Weights wt, const std::string& side_name, const std::string& format, const Common& c) {
  const auto side = dckl::parse_side(side_name);
  if (!side) throw dckl::InvalidArgument("unknown side '" + side_name + "'");
  const dckl::KLBasis kl = dckl::detail::obtain_kl(n, wt, run_options(c));
  const dckl::CellPartition cp = dckl::cell_partition(kl, *side);
  const auto& G = kl.group();
  if (format == "json") {
    json cells = json::array();
    for (const auto& block : cp.cells()) {
      json members = json::array();
      for (int w : block) members.push_back(G.element(w).to_string());
      cells.push_back(std::move(members));
    }
    json j = {{"n", n}, {"a", wt.a}, {"b", wt.b}, {"side", dckl::to_string(*side)}, {"count", cp.count()}, {"cells", cells}};
    std::cout << j.dump(2) << "\n";
  } else {
    int k = 0;
    for (const auto& block : cp.cells()) {
      std::cout << "cell " << k++ << ":";
      for (int w : block) std::cout << ' ' << G.element(w).to_string();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_insert(const std::string& w_text, int r, const std::string& format) {
  const dckl::SignedPerm w = dckl::parse_perm(w_text);
  const dckl::DominoPair pq = dckl::domino_pair(w, r);
  if (format == "json") {
    json j = {{"w", w.to_string()}, {"r", r}, {"P", pq.P.to_string()}, {"Q", pq.Q.to_string()},
              {"shape", pq.P.shape().to_string()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "P: " << pq.P.to_string() << "\nQ: " << pq.Q.to_string() << "\nshape: " << pq.P.shape().to_string()
              << "\n";
  }
  return 0;
}

int cmd_cycles(const std::string& tab_text, const std::string& move_text) {
  const dckl::DominoTableau d = dckl::parse_domino_tableau(tab_text);
  const dckl::DominoGrid g(d);
  if (!move_text.empty()) {
    const auto values = dckl::parse_cycle(move_text);
    dckl::Cycle c;
    c.members = values;
    std::sort(c.members.begin(), c.members.end());
    const dckl::DominoGrid m = dckl::move_through(g, c);
    if (!m.is_standard()) {
      std::cout << "M(D," << c.to_string() << ") is not standard\n";
      return 1;
    }
    std::cout << m.to_tableau().to_string() << "\n";
    return 0;
  }
  for (const dckl::Cycle& c : dckl::cycles(g))
    std::cout << c.to_string() << ' ' << (dckl::is_open(g, c) ? "open" : "closed") << "\n";
  return 0;
}

int cmd_verify(const std::string& check, int n, int r, int a, const std::string& samples, const std::string& out,
               const Common& c) {
  const dckl::RunOptions opt = run_options(c);
  dckl::VerificationReport rep;
  if (check == "A") rep = dckl::verify_A(n, r, opt);
  else if (check == "Aplus") {
    std::vector<dckl::Weights> s = samples.empty()
        ? std::vector<dckl::Weights>{{3, 3 * r + 1}, {3, 3 * r + 2}, {5, 5 * r + 2}}
        : parse_samples(samples);
    rep = dckl::verify_A_plus(n, r, s, opt);
  }
  else if (check == "cplus") rep = dckl::verify_cplus(n, r, opt);
  else if (check == "B") rep = dckl::verify_B(n, r, a, opt);
  else if (check == "D") rep = dckl::verify_D(n, r, opt);
  else if (check == "thm-sn") rep = dckl::verify_thm_sn(n, r, opt);
  else if (check == "props") rep = dckl::verify_props(n, r, opt);
  else rep = dckl::verify_cycles(n, r, opt);
  std::cout << rep.dump();
  if (!out.empty()) rep.write(out);
  return rep.passed() ? 0 : 1;
}

int cmd_cache_save(int n, dckl::Weights wt, const std::string& dir, const Common& c) {
  dckl::RunOptions opt = run_options(c);
  if (!dir.empty()) opt.cache_dir = dir;
  if (opt.cache_dir.empty()) throw dckl::InvalidArgument("no cache directory (--dir or DCKL_CACHE_DIR)");
  (void)dckl::detail::obtain_kl(n, wt, opt);
  std::cout << (std::filesystem::path(opt.cache_dir) / dckl::detail::cache_file(n, wt)).string() << "\n";
  return 0;
}

int cmd_cache_load(const std::string& file, const Common& c) {
  const dckl::RunOptions opt = run_options(c);
  const dckl::KLBasis kl = dckl::KLBasis::load_file(file, opt.threads, opt.budget);
  std::size_t terms = 0;
  for (int w = 0; w < kl.group().size(); ++w) terms += kl.C(w).index.size();
  std::cout << "n=" << kl.group().rank() << " a=" << kl.weights().a << " b=" << kl.weights().b
            << " elements=" << kl.group().size() << " terms=" << terms << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino tableaux and Kazhdan-Lusztig cells of type B_n"};
  app.require_subcommand(1);
  Common common;
  int n = 1, r = 0, a = 1, b = 1;
  std::string side = "left", format = "text", w_text, tableau, move, check, samples, out, dir, file;

  auto* cells = app.add_subcommand("cells", "KL cells of W_n for weights (a, b)");
  cells->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
  cells->add_option("--a", a, "weight of s_i")->check(CLI::PositiveNumber);
  cells->add_option("--b", b, "weight of t")->check(CLI::PositiveNumber);
  cells->add_option("--side", side, "left, right or two_sided");
  cells->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_common(cells, common);

  auto* insert = app.add_subcommand("insert", "domino insertion P^r(w), Q^r(w)");
  insert->add_option("--w", w_text, "signed permutation, e.g. [2,-1,3]")->required();
  insert->add_option("--r", r, "core rank")->check(CLI::NonNegativeNumber);
  insert->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* cyc = app.add_subcommand("cycles", "cycles of a domino tableau, or a move through one");
  cyc->add_option("--tableau", tableau, "shape chain, e.g. [();(2);(2,2)]")->required();
  cyc->add_option("--move", move, "cycle to move through, e.g. {1,2}");

  auto* verify = app.add_subcommand("verify", "run a verification and print its JSON report");
  verify->add_option("check", check, "A, Aplus, cplus, B, D, thm-sn, props or cycles")
      ->required()
      ->check(CLI::IsMember({"A", "Aplus", "cplus", "B", "D", "thm-sn", "props", "cycles"}));
  verify->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
  verify->add_option("--r", r, "core rank")->check(CLI::NonNegativeNumber);
  verify->add_option("--a", a, "weight of s_i for B (b = r a)")->check(CLI::PositiveNumber);
  verify->add_option("--samples", samples, "weights for Aplus, e.g. 3:4,3:5,5:7");
  verify->add_option("--out", out, "also write the report to this file");
  add_common(verify, common);

  auto* cache = app.add_subcommand("cache", "store or inspect KL bases");
  cache->require_subcommand(1);
  auto* save = cache->add_subcommand("save", "compute and store the KL basis");
  save->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
  save->add_option("--a", a, "weight of s_i")->check(CLI::PositiveNumber);
  save->add_option("--b", b, "weight of t")->check(CLI::PositiveNumber);
  save->add_option("--dir", dir, "cache directory");
  add_common(save, common);
  auto* load = cache->add_subcommand("load", "read and validate a cache file");
  load->add_option("--file", file, "cache file")->required()->check(CLI::ExistingFile);
  add_common(load, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cells) return cmd_cells(n, {a, b}, side, format, common);
    if (*insert) return cmd_insert(w_text, r, format);
    if (*cyc) return cmd_cycles(tableau, move);
    if (*verify) return cmd_verify(check, n, r, a, samples, out, common);
    if (*save) return cmd_cache_save(n, {a, b}, dir, common);
    if (*load) return cmd_cache_load(file, common);
  } catch (const dckl::ResourceError& e) {
    std::cerr << "dckl: " << e.what() << " (see --allow-n5, --allow-n6)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dckl: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
