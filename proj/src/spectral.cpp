#include "swlim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace swlim {

PFReport validate_pf_hypotheses(const std::vector<std::vector<std::pair<int, Rational>>>& out,
                                int hub) {
  std::vector<std::vector<std::pair<int, int>>> adj(out.size());
  for (size_t i = 0; i < out.size(); ++i)
    for (auto& [j, w] : out[i]) adj[i].emplace_back(j, 1);
  auto comp = tarjan_scc(adj);
  PFReport rep;
  int target = comp[hub];
  int in_comp = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (comp[i] == target) {
      ++in_comp;
      for (auto& [j, w] : out[i])
        if ((int)i == j) rep.has_loop = true;
    } else {
      rep.dropped.push_back((int)i);
    }
  }
  rep.strongly_connected = in_comp == (int)out.size();
  rep.hub_component_strongly_connected = in_comp > 1 || rep.has_loop || out.size() == 1;
  return rep;
}

PFReport validate_pf_hypotheses(const QuotientGraph& q) {
  return validate_pf_hypotheses(q.out, q.start >= 0 ? q.start : 0);
}

PowerResult power_iteration(int dim,
                            const std::function<void(const std::vector<double>&,
                                                     std::vector<double>&)>& op,
                            double tol, int max_iters) {
  std::vector<double> v(dim, 1.0), u(dim);
  double lam = 0;
  int it = 0;
  bool conv = false;
  for (it = 1; it <= max_iters; ++it) {
    op(v, u);
    double nrm = 0;
    for (double x : u) nrm = std::max(nrm, std::abs(x));
    if (!(nrm > 0) || !std::isfinite(nrm))
      throw std::runtime_error("power_iteration: numeric breakdown");
    lam = nrm;  // v has sup-norm 1
    for (auto& x : u) x /= nrm;
    // converge on the normalised vector, not the norm ratio (successive norm
    // estimates can coincide by accident long before the vector settles)
    double diff = 0;
    for (int i = 0; i < dim; ++i) diff = std::max(diff, std::abs(u[i] - v[i]));
    std::swap(v, u);
    if (diff < tol) { conv = true; break; }
  }
  // final apply for the rigorous ratio envelope
  op(v, u);
  double lo = 1e300, hi = 0;
  for (int i = 0; i < dim; ++i) {
    if (v[i] > 0) {
      lo = std::min(lo, u[i] / v[i]);
      hi = std::max(hi, u[i] / v[i]);
    }
  }
  PowerResult r;
  r.lambda = lam;
  r.lambda_upper = hi;
  r.lambda_lower = lo;
  r.v = Eigen::Map<Eigen::VectorXd>(v.data(), dim);
  r.iters = it;
  r.converged = conv;
  return r;
}

namespace {

std::function<void(const std::vector<double>&, std::vector<double>&)> quotient_op(
    const QuotientGraph& q) {
  // double weights cached once
  auto w = std::make_shared<std::vector<std::vector<std::pair<int, double>>>>();
  w->resize(q.out.size());
  for (size_t i = 0; i < q.out.size(); ++i)
    for (auto& [j, r] : q.out[i]) (*w)[i].emplace_back(j, (double)Rational(r));
  return [w](const std::vector<double>& v, std::vector<double>& u) {
    u.assign(v.size(), 0.0);
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (auto& [j, x] : (*w)[i]) u[j] += v[i] * x;
    }
  };
}

}  // namespace

PowerResult power_iteration_quotient(const QuotientGraph& q, double tol, int max_iters) {
  return power_iteration((int)q.keys.size(), quotient_op(q), tol, max_iters);
}

PowerResult power_iteration_graph(const AvoiderGraph& g, double tol, int max_iters) {
  auto op = [&g](const std::vector<double>& v, std::vector<double>& u) {
    u.assign(v.size(), 0.0);
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (auto& [j, m] : g.out[i]) u[j] += v[i] * m;
    }
  };
  return power_iteration((int)g.verts.size(), op, tol, max_iters);
}

Rational rational_from_double(double d) {
  // exact: doubles are dyadic rationals
  if (d == 0) return 0;
  int e;
  double m = std::frexp(d, &e);  // d = m * 2^e, 0.5 <= |m| < 1
  long long mi = (long long)std::ldexp(m, 53);
  e -= 53;
  Rational r(mi);
  if (e > 0) r *= Rational(BigInt(1) << e);
  else if (e < 0) r /= Rational(BigInt(1) << (-e));
  return r;
}

namespace {

template <class Out>
Rational cw_min_ratio(const Out& out, const Eigen::VectorXd& v) {
  size_t n = out.size();
  std::vector<Rational> vv(n), u(n, Rational(0));
  bool any = false;
  for (size_t i = 0; i < n; ++i) {
    if (v[i] < 0) throw std::invalid_argument("certify: negative vector entry");
    vv[i] = rational_from_double(v[i]);
    if (vv[i] != 0) any = true;
  }
  if (!any) throw std::invalid_argument("certify: zero vector");
  for (size_t i = 0; i < n; ++i) {
    if (vv[i] == 0) continue;
    for (auto& [j, w] : out[i]) u[j] += vv[i] * Rational(w);
  }
  bool first = true;
  Rational best = 0;
  for (size_t i = 0; i < n; ++i) {
    if (vv[i] == 0) continue;
    Rational r = u[i] / vv[i];
    if (first || r < best) { best = r; first = false; }
  }
  return best;
}

}  // namespace

Rational certify_collatz_wielandt(const QuotientGraph& q, const Eigen::VectorXd& v) {
  return cw_min_ratio(q.out, v);
}

Rational certify_collatz_wielandt_graph(const AvoiderGraph& g, const Eigen::VectorXd& v) {
  return cw_min_ratio(g.out, v);
}

std::string digest_vector(const std::vector<double>& v) {
  // FNV-1a over the byte image
  std::uint64_t h = 1469598103934665603ull;
  const unsigned char* p = reinterpret_cast<const unsigned char*>(v.data());
  for (size_t i = 0; i < v.size() * sizeof(double); ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

void write_certificate(std::ostream& os, const BoundCertificate& c) {
  os << "certificate v1\n"
     << "pattern " << c.pattern << '\n'
     << "quotient " << c.quotient_kind << '\n'
     << "cutoff " << c.cutoff << '\n';
  os.precision(15);
  os << "lambda_estimate " << c.lambda_estimate << '\n'
     << "rho_certified " << boost::multiprecision::numerator(c.rho_certified) << '/'
     << boost::multiprecision::denominator(c.rho_certified) << '\n'
     << "rho_certified_decimal " << (double)c.rho_certified << '\n'
     << "iterations " << c.iterations << '\n'
     << "tolerance " << c.tolerance << '\n'
     << "vector_digest " << c.vector_digest << '\n'
     << "arithmetic " << c.arithmetic << '\n'
     << "conditional " << (c.conditional ? "true" : "false") << '\n';
  if (!c.note.empty()) os << "note " << c.note << '\n';
}

Rational alpha_213(int N) {
  if (N < 3) throw std::invalid_argument("alpha_213: N < 3");
  return Rational(4) - Rational(BigInt(1) << (N - 1), boost::multiprecision::pow(BigInt(3), N - 2));
}

BoundCertificate analytic_213_certificate(int N) {
  // v = (1, 1, 2/3, (2/3)^2, ...) truncated; alpha = sum of coordinates.
  Rational a = alpha_213(N);
  // sanity: recompute the sum directly
  Rational s = 2, term = 1;
  for (int i = 3; i <= N; ++i) {
    term *= Rational(2, 3);
    s += term;
  }
  if (s != a) throw std::logic_error("analytic_213_certificate: closed form mismatch");
  BoundCertificate c;
  c.pattern = "213";
  c.quotient_kind = "chain";
  c.cutoff = N;
  c.lambda_estimate = 4.0;
  c.rho_certified = a;
  c.iterations = 0;
  c.tolerance = 0;
  c.arithmetic = "exact-rational";
  c.conditional = false;
  c.note =
      "alpha(N) = 4 - 2^(N-1)/3^(N-2): truncated coordinate sum of the infinite-chain "
      "Collatz-Wielandt vector; certifies the limit via the infinite graph";
  return c;
}

StationaryResult stationary_distribution(const AvoiderGraph& g, StepRule rule, double tol,
                                         int max_iters) {
  auto comp = tarjan_scc(g.out);
  bool one_comp = std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; });
  bool loop = false;
  for (size_t i = 0; i < g.out.size() && !loop; ++i)
    for (auto& [j, m] : g.out[i])
      if ((int)i == j) { loop = true; break; }
  if (!one_comp || !loop)
    throw std::invalid_argument("stationary_distribution: graph must be strongly connected with a loop");
  size_t n = g.verts.size();
  // Row weights: uniform rule gives a stochastic matrix (mult/outdeg); the
  // paper-variant writes 1/|tau| per edge, whose rows sum to outdeg/|tau|, so
  // its fixed point is the l1-normalised leading left eigenvector instead.
  std::vector<std::vector<std::pair<int, double>>> P(n);
  for (size_t i = 0; i < n; ++i) {
    double outdeg = 0;
    for (auto& [j, m] : g.out[i]) outdeg += m;
    for (auto& [j, m] : g.out[i]) {
      double w = (rule == StepRule::uniform_out_degree) ? m / outdeg
                                                        : (double)m / (double)g.verts[i].size();
      P[i].emplace_back(j, w);
    }
  }
  std::vector<double> s(n, 1.0 / n), u(n);
  int it = 0;
  for (it = 1; it <= max_iters; ++it) {
    std::fill(u.begin(), u.end(), 0.0);
    for (size_t i = 0; i < n; ++i)
      for (auto& [j, w] : P[i]) u[j] += s[i] * w;
    double tot = 0, diff = 0;
    for (size_t i = 0; i < n; ++i) tot += u[i];
    for (auto& x : u) x /= tot;
    for (size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(u[i] - s[i]));
    std::swap(s, u);
    if (diff < tol) break;
  }
  StationaryResult r;
  r.sigma = Eigen::Map<Eigen::VectorXd>(s.data(), (Eigen::Index)n);
  std::fill(u.begin(), u.end(), 0.0);
  for (size_t i = 0; i < n; ++i)
    for (auto& [j, w] : P[i]) u[j] += s[i] * w;
  double res = 0;
  if (rule == StepRule::uniform_out_degree) {
    for (size_t i = 0; i < n; ++i) res = std::max(res, std::abs(u[i] - s[i]));
  } else {
    double tot = 0;
    for (double x : u) tot += x;
    for (size_t i = 0; i < n; ++i) res = std::max(res, std::abs(u[i] / tot - s[i]));
  }
  r.residual = res;
  r.iters = it;
  return r;
}

double dense_spectral_radius(const Eigen::MatrixXd& A) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  double r = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    r = std::max(r, std::abs(es.eigenvalues()[i]));
  return r;
}

}  // namespace swlim
