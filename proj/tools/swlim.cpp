// swlim: permutation-pattern growth-rate toolkit.
//
// Modes: enumerate | graph | bound | conjecture | stationary | reconstruct.
// Exit codes: 0 success, 2 refusal (caps/validation), 3 conjecture
// counterexample, 4 internal-consistency error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "swlim/spectral.hpp"
#include "swlim/tree.hpp"

namespace fs = std::filesystem;
using namespace swlim;

namespace {

struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string mode;
  std::string pattern = "1324";
  int cutoff = 0;
  int kmax = 0;
  std::string quotient;  // run | descents | short | chain
  std::string edge_rule = "v2";
  std::string arith = "exact";
  bool deterministic = false;
  std::string cache_dir;
  std::string out_path;
  std::string step_rule = "uniform";
  int iters = 2000;
  int cap = 0;  // 0 = per-mode default
};

// atomic replacement: write a sibling temp file, then rename over the target
void atomic_write(const fs::path& target, const std::string& contents) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Refusal("output path not writable: " + target.string());
    os << contents;
  }
  fs::rename(tmp, target);
}

void emit(const Config& cfg, const std::string& contents) {
  if (cfg.out_path.empty()) {
    std::cout << contents;
  } else {
    atomic_write(cfg.out_path, contents);
  }
}

Perm pattern_perm(const std::string& s) {
  if (s != "213" && s != "2134" && s != "3124" && s != "1324")
    throw Refusal("unsupported pattern " + s + " (need 213, 2134, 3124 or 1324)");
  Perm p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

std::string default_quotient(const std::string& pattern) {
  if (pattern == "213") return "chain";
  if (pattern == "2134") return "run";
  if (pattern == "3124") return "descents";
  return "short";
}

fs::path cache_root(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("SWLIM_CACHE")) return env;
  return {};
}

int cmd_enumerate(const Config& cfg) {
  if (cfg.pattern != "1324")
    throw Refusal("enumerate: only pattern 1324 is tabulated");
  int n_max = cfg.cutoff > 0 ? cfg.cutoff : 50;
  if (n_max > 50 && cfg.arith == "exact")
    throw Refusal("enumerate: exact weighted table capped at n = 50");
  std::ostringstream os;
  os << "n,Wtilde,Av\n";
  os.precision(15);
  for (int n = 2; n <= n_max; ++n) {
    Rational wt = weighted_walk_diag_A(n);
    os << n << ',' << (double)wt << ',';
    if (n <= 9) os << count_avoiders(pattern_perm(cfg.pattern), n);
    os << '\n';
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_graph(const Config& cfg) {
  int cap = cfg.cap > 0 ? cfg.cap : 14;
  if (cfg.cutoff < 1 || cfg.cutoff > cap)
    throw Refusal("graph: cutoff must be in 1.." + std::to_string(cap));
  auto spec = PatternSpec::make(pattern_perm(cfg.pattern));
  auto rule = cfg.edge_rule == "v1" ? EdgeRule::version_one : EdgeRule::version_two;
  auto g = build_avoider_graph(spec, cfg.cutoff, rule);
  std::ostringstream os;
  write_graph_cache(os, g);
  fs::path root = cache_root(cfg);
  if (!root.empty()) {
    fs::create_directories(root);
    std::string name = "avgraph-" + cfg.pattern + "-" + std::to_string(cfg.cutoff) +
                       "-" + cfg.edge_rule + ".txt";
    atomic_write(root / name, os.str());
    if (cfg.out_path.empty()) {
      std::cout << "wrote " << (root / name).string() << " (" << g.verts.size()
                << " vertices, " << g.edge_count() << " edges)\n";
      return 0;
    }
  }
  emit(cfg, os.str());
  return 0;
}

BoundCertificate bound_certificate(const Config& cfg) {
  int cap = cfg.cap > 0 ? cfg.cap : 512;
  std::string kind = cfg.quotient.empty() ? default_quotient(cfg.pattern) : cfg.quotient;
  int N = cfg.cutoff;
  if (N < 3) throw Refusal("bound: cutoff must be >= 3");

  if (kind == "chain") {
    if (cfg.pattern != "213") throw Refusal("bound: chain quotient is for pattern 213");
    return analytic_213_certificate(N);
  }

  BoundCertificate c;
  c.pattern = cfg.pattern;
  c.quotient_kind = kind;
  c.cutoff = N;
  c.tolerance = 1e-12;

  if (kind == "descents") {
    if (cfg.pattern != "3124") throw Refusal("bound: descents quotient is for pattern 3124");
    if (N > 14) throw Refusal("bound: descents quotient capped at N = 14");
    auto q = build_quotient_C(N);
    auto pf = validate_pf_hypotheses(q);
    if (!pf.hub_component_strongly_connected)
      throw Refusal("bound: Perron-Frobenius validation failed");
    auto pr = power_iteration_quotient(q, 1e-12, cfg.iters);
    c.lambda_estimate = pr.lambda_upper;
    c.rho_certified = certify_collatz_wielandt(q, pr.v);
    c.iterations = pr.iters;
    c.vector_digest = digest_vector(std::vector<double>(pr.v.data(), pr.v.data() + pr.v.size()));
    c.arithmetic = "exact-rational";
    return c;
  }

  if (kind == "run") {
    if (cfg.pattern != "2134") throw Refusal("bound: run quotient is for pattern 2134");
    if (N > std::max(cap, 600)) throw Refusal("bound: run quotient capped at N = 600");
    if (cfg.arith == "exact" && N <= 220) {
      auto q = build_quotient_B(N);
      auto pf = validate_pf_hypotheses(q);
      if (!pf.hub_component_strongly_connected)
        throw Refusal("bound: Perron-Frobenius validation failed");
      auto pr = power_iteration_quotient(q, 1e-12, cfg.iters);
      c.lambda_estimate = pr.lambda_upper;
      c.rho_certified = certify_collatz_wielandt(q, pr.v);
      c.iterations = pr.iters;
      c.vector_digest = digest_vector(std::vector<double>(pr.v.data(), pr.v.data() + pr.v.size()));
      c.arithmetic = "exact-rational";
      return c;
    }
    ImplicitBOp op(N);
    auto pr = power_iteration(op.dim(),
                              [&op](const std::vector<double>& v, std::vector<double>& u) {
                                op.apply_double(v, u);
                              },
                              1e-12, cfg.iters);
    std::vector<double> v(pr.v.data(), pr.v.data() + pr.v.size());
    c.lambda_estimate = pr.lambda_upper;
    c.rho_certified = rational_from_double(certify_cw_implicit_B(op, v));
    c.iterations = pr.iters;
    c.vector_digest = digest_vector(v);
    c.arithmetic = "outward-rounded-double";
    return c;
  }

  if (kind == "short") {
    if (cfg.pattern != "1324") throw Refusal("bound: short quotient is for pattern 1324");
    if (N > std::max(cap, 512)) throw Refusal("bound: short quotient capped at N = 512");
    c.conditional = true;
    c.note = "conditional on Conjecture 1";
    if (cfg.arith == "exact" && N <= 60) {
      auto q = build_quotient_A_weighted(N);
      auto pf = validate_pf_hypotheses(q);
      if (!pf.hub_component_strongly_connected)
        throw Refusal("bound: Perron-Frobenius validation failed");
      auto pr = power_iteration_quotient(q, 1e-12, cfg.iters);
      c.lambda_estimate = pr.lambda_upper;
      c.rho_certified = certify_collatz_wielandt(q, pr.v);
      c.iterations = pr.iters;
      c.vector_digest = digest_vector(std::vector<double>(pr.v.data(), pr.v.data() + pr.v.size()));
      c.arithmetic = "exact-rational";
      return c;
    }
    ImplicitAOp op(N);
    auto pr = power_iteration(op.dim(),
                              [&op](const std::vector<double>& v, std::vector<double>& u) {
                                op.apply_double(v, u);
                              },
                              1e-12, cfg.iters);
    std::vector<double> v(pr.v.data(), pr.v.data() + pr.v.size());
    c.lambda_estimate = pr.lambda_upper;
    c.rho_certified = rational_from_double(certify_cw_implicit_A(op, v));
    c.iterations = pr.iters;
    c.vector_digest = digest_vector(v);
    c.arithmetic = "outward-rounded-double";
    return c;
  }
  throw Refusal("bound: unknown quotient kind " + kind);
}

int cmd_bound(const Config& cfg) {
  BoundCertificate c = bound_certificate(cfg);
  if ((double)c.rho_certified > c.lambda_estimate + 1e-9)
    throw std::logic_error("bound: certified value exceeds the upper estimate");
  std::ostringstream os;
  write_certificate(os, c);
  emit(cfg, os.str());
  fs::path root = cache_root(cfg);
  if (!root.empty()) {
    fs::create_directories(root);
    fs::path csv = root / "bounds.csv";
    bool fresh = !fs::exists(csv);
    std::ofstream bs(csv, std::ios::app);
    if (fresh) bs << "pattern,quotient,N,lambda,rho\n";
    bs.precision(15);
    bs << c.pattern << ',' << c.quotient_kind << ',' << c.cutoff << ','
       << c.lambda_estimate << ',' << (double)c.rho_certified << '\n';
  }
  return 0;
}

int cmd_conjecture(const Config& cfg) {
  int n_max = cfg.cutoff > 0 ? cfg.cutoff : 9;
  int k_max = cfg.kmax > 0 ? cfg.kmax : 2 * n_max;
  int cap = cfg.cap > 0 ? cfg.cap : 14;
  if (n_max > cap) throw Refusal("conjecture: n capped at " + std::to_string(cap));
  auto rep = conjecture_report(n_max, k_max);
  std::ostringstream os;
  write_walk_csv(os, rep.rows, true);
  emit(cfg, os.str());
  return rep.counterexample ? 3 : 0;
}

int cmd_stationary(const Config& cfg) {
  int cap = cfg.cap > 0 ? cfg.cap : 10;
  if (cfg.cutoff < 1 || cfg.cutoff > cap)
    throw Refusal("stationary: cutoff must be in 1.." + std::to_string(cap));
  auto spec = PatternSpec::make(pattern_perm(cfg.pattern));
  auto rule = cfg.edge_rule == "v1" ? EdgeRule::version_one : EdgeRule::version_two;
  std::optional<Perm> hub;
  if (cfg.pattern == "1324") {
    // vertex 21 has no incoming edges in the 1324 graph; hub on the
    // decreasing permutation instead
    Perm dec;
    for (int i = cfg.cutoff; i >= 1; --i) dec.push_back(i);
    hub = dec;
  }
  auto g = prune_for_spectral(build_avoider_graph(spec, cfg.cutoff, rule), hub);
  StepRule sr = cfg.step_rule == "paper" ? StepRule::paper_variant : StepRule::uniform_out_degree;
  auto st = stationary_distribution(g, sr);
  std::ostringstream os;
  os << "perm,sigma\n";
  os.precision(15);
  for (size_t i = 0; i < g.verts.size(); ++i)
    os << perm_to_string(g.verts[i]) << ',' << st.sigma[(Eigen::Index)i] << '\n';
  os << "# residual," << st.residual << "\n# iters," << st.iters << '\n';
  emit(cfg, os.str());
  return 0;
}

int cmd_reconstruct(const Config& cfg) {
  std::vector<int> s;
  std::string tok;
  while (std::cin >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      s.push_back(v);
    } catch (const std::exception&) {
      throw Refusal("reconstruct: malformed multiset token '" + tok + "'");
    }
  }
  if (s.empty()) throw Refusal("reconstruct: empty multiset on stdin");
  Perm p = reconstruct_from_multiset(s);
  std::ostringstream os;
  os << perm_to_string(p) << '\n';
  emit(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"permutation-pattern growth-rate toolkit"};
  app.add_option("mode", cfg.mode, "enumerate|graph|bound|conjecture|stationary|reconstruct")
      ->required();
  app.add_option("--pattern", cfg.pattern, "213|2134|3124|1324");
  app.add_option("--cutoff", cfg.cutoff, "graph/quotient cutoff N");
  app.add_option("--kmax", cfg.kmax, "walk-length bound");
  app.add_option("--quotient", cfg.quotient, "run|descents|short|chain")
      ->check(CLI::IsMember({"run", "descents", "short", "chain"}));
  app.add_option("--edge-rule", cfg.edge_rule, "v1|v2")
      ->check(CLI::IsMember({"v1", "v2"}));
  app.add_option("--arith", cfg.arith, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_flag("--deterministic", cfg.deterministic, "byte-identical outputs");
  app.add_option("--cache", cfg.cache_dir, "cache directory (default: $SWLIM_CACHE)");
  app.add_option("--out", cfg.out_path, "output path (default: stdout)");
  app.add_option("--step-rule", cfg.step_rule, "uniform|paper (stationary mode)")
      ->check(CLI::IsMember({"uniform", "paper"}));
  app.add_option("--iters", cfg.iters, "power-iteration budget");
  app.add_option("--cap", cfg.cap, "override the per-mode resource cap");
  CLI11_PARSE(app, argc, argv);

  try {
    if (cfg.mode == "enumerate") return cmd_enumerate(cfg);
    if (cfg.mode == "graph") return cmd_graph(cfg);
    if (cfg.mode == "bound") return cmd_bound(cfg);
    if (cfg.mode == "conjecture") return cmd_conjecture(cfg);
    if (cfg.mode == "stationary") return cmd_stationary(cfg);
    if (cfg.mode == "reconstruct") return cmd_reconstruct(cfg);
    std::cerr << "unknown mode: " << cfg.mode << '\n';
    return 2;
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
