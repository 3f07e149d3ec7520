// Outward-rounded Collatz-Wielandt evaluation for the implicit operators.
// This translation unit is compiled with -frounding-math and runs under
// FE_DOWNWARD: every +,*,/ on the nonnegative data rounds toward -inf, and
// divisions by the upward-rounded T bracket keep each intermediate a true
// lower bound. The returned min ratio is therefore a guaranteed lower bound
// on min_i (Av)_i / v_i, hence on the spectral radius.

#include <cfenv>
#include <stdexcept>
#include <vector>

#include "swlim/spectral.hpp"

namespace swlim {

namespace {

struct RoundDownGuard {
  int saved;
  RoundDownGuard() : saved(fegetround()) {
    if (fesetround(FE_DOWNWARD) != 0)
      throw std::runtime_error("certify: cannot set FE_DOWNWARD");
  }
  ~RoundDownGuard() { fesetround(saved); }
};

double min_ratio_down(const std::vector<double>& u, const std::vector<double>& v) {
  // still under FE_DOWNWARD: the division rounds down too
  bool first = true;
  double best = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw std::invalid_argument("certify: negative vector entry");
    if (v[i] == 0) continue;
    double r = u[i] / v[i];
    if (first || r < best) { best = r; first = false; }
  }
  if (first) throw std::invalid_argument("certify: zero vector");
  return best;
}

}  // namespace

void ImplicitAOp::apply_double_lower(const std::vector<double>& v,
                                     std::vector<double>& u) const {
  // mirrors apply_double; caller must hold FE_DOWNWARD
  u.assign(dim(), 0.0);
  std::vector<std::vector<double>> Z(N + 2);
  Z[N + 1].assign(N + 1, 0.0);
  for (int n = N; n >= 1; --n) {
    Z[n].assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
      int i = n * (n - 1) / 2 + r;
      Z[n][r] = v[i] / T_hi[i] + Z[n + 1][r] + (r + 1 < n ? Z[n][r + 1] : 0.0);
    }
  }
  for (int m = 2; m <= N; ++m) {
    double cs = 0;
    std::vector<double> pref(m - 1);
    for (int rp = 0; rp <= m - 2; ++rp) {
      cs += v[(m - 1) * (m - 2) / 2 + rp];
      pref[rp] = cs;
    }
    for (int s = 0; s <= m - 1; ++s) u[m * (m - 1) / 2 + s] += pref[std::min(s, m - 2)];
    for (int s = 1; s <= m - 1; ++s) {
      double tot = 0;
      for (int j = std::max(0, s - m); j <= s - 1 && j <= m - 2; ++j) {
        int r = m + j - s;
        if (r >= 0 && r < m) tot += T_lo[(m - 1) * (m - 2) / 2 + j] * Z[m][r];
      }
      u[m * (m - 1) / 2 + s] += tot;
    }
  }
}

double certify_cw_implicit_A(const ImplicitAOp& op, const std::vector<double>& v) {
  if ((int)v.size() != op.dim()) throw std::invalid_argument("certify: dimension mismatch");
  RoundDownGuard guard;
  std::vector<double> u;
  op.apply_double_lower(v, u);
  return min_ratio_down(u, v);
}

namespace {

// local copy of the B push-forward so the sums are compiled in this TU
// (pure additions of nonnegative terms: FE_DOWNWARD gives a lower bound)
void b_apply_lower(int N, const std::vector<double>& vin, std::vector<double>& u) {
  auto idx = [](int n, int r) { return (n - 1) * (n - 2) / 2 + (r - 1); };
  std::vector<double> v = vin;
  v[idx(N, N - 1)] = 0;
  u.assign((N - 1) * N / 2, 0.0);
  for (int r = 1; r <= N - 1; ++r) {
    double suf = 0;
    for (int n = N; n >= r + 1; --n) {
      suf += v[idx(n, r)];
      u[idx(n, r)] += suf;
    }
  }
  for (int m = 3; m <= N; ++m) {
    double suf = 0;
    for (int s = m - 1; s >= 1; --s) {
      int r = s - 1;
      if (r >= 1 && r <= m - 2) suf += v[idx(m - 1, r)];
      u[idx(m, s)] += suf;
    }
  }
  u[idx(N, N - 1)] = 0;
}

}  // namespace

double certify_cw_implicit_B(const ImplicitBOp& op, const std::vector<double>& v) {
  if ((int)v.size() != op.dim()) throw std::invalid_argument("certify: dimension mismatch");
  RoundDownGuard guard;
  std::vector<double> u;
  b_apply_lower(op.N, v, u);
  // the masked class has u = 0 by construction; certify over its complement
  std::vector<double> vv = v;
  vv[op.masked_index()] = 0;
  return min_ratio_down(u, vv);
}

}  // namespace swlim
