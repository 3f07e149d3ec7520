#include "swlim/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace swlim {

int QuotientGraph::index_of(const QKey& k) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it != keys.end() && *it == k) return (int)(it - keys.begin());
  return -1;
}

namespace {

std::unordered_map<std::uint64_t, BigInt> g_E;

std::uint64_t ekey(int n, int r, int m, int s) {
  return ((std::uint64_t)n << 30) | ((std::uint64_t)r << 20) | ((std::uint64_t)m << 10) |
         (std::uint64_t)s;
}

}  // namespace

BigInt edge_count_E(int n, int r, int m, int s) {
  if (r >= n || s >= m || n < 1 || m < 1 || r < 0 || s < 0 || m > n + 1) return 0;
  if (n < m && s < r) return 0;
  if (m == n + 1) return catalan_triangle(n - 1, r);
  auto key = ekey(n, r, m, s);
  auto it = g_E.find(key);
  if (it != g_E.end()) return it->second;
  BigInt v = edge_count_E(n, r - 1, m, s);
  if (m <= n - 1) v += edge_count_E(n - 1, r, m, s);
  if (m == n && r + s >= n) v += catalan_triangle(n - 2, r + s - n);
  g_E.emplace(key, v);
  return v;
}

namespace {

// SCC prune on a quotient adjacency, keeping the component of `hub`.
void scc_prune(QuotientGraph& q, int hub) {
  std::vector<std::vector<std::pair<int, int>>> adj(q.keys.size());
  for (size_t i = 0; i < q.out.size(); ++i)
    for (auto& [j, w] : q.out[i]) adj[i].emplace_back(j, 1);
  auto comp = tarjan_scc(adj);
  int target = comp[hub];
  std::vector<int> remap(q.keys.size(), -1);
  QuotientGraph r;
  r.kind = q.kind;
  r.cutoff = q.cutoff;
  for (size_t i = 0; i < q.keys.size(); ++i) {
    if (comp[i] == target) {
      remap[i] = (int)r.keys.size();
      r.keys.push_back(q.keys[i]);
    } else {
      r.dropped.push_back(q.keys[i]);
    }
  }
  r.out.resize(r.keys.size());
  for (size_t i = 0; i < q.keys.size(); ++i) {
    if (remap[i] < 0) continue;
    for (auto& [j, w] : q.out[i])
      if (remap[j] >= 0) r.out[remap[i]].emplace_back(remap[j], w);
  }
  r.start = (q.start >= 0 && remap[q.start] >= 0) ? remap[q.start] : 0;
  q = std::move(r);
}

}  // namespace

QuotientGraph build_quotient_B(int N) {
  if (N < 2) throw std::invalid_argument("build_quotient_B: cutoff < 2");
  QuotientGraph q;
  q.kind = QuotientKind::run_B;
  q.cutoff = N;
  for (int n = 2; n <= N; ++n)
    for (int r = 1; r <= n - 1; ++r) q.keys.push_back(QKey{n, r, 0});
  q.out.resize(q.keys.size());
  for (size_t i = 0; i < q.keys.size(); ++i) {
    int n = q.keys[i].n, r = q.keys[i].r;
    if (n + 1 <= N)
      for (int s = 1; s <= r + 1; ++s)
        q.out[i].emplace_back(q.index_of(QKey{n + 1, s, 0}), Rational(1));
    for (int m = r + 1; m <= n; ++m)
      q.out[i].emplace_back(q.index_of(QKey{m, r, 0}), Rational(1));
    std::sort(q.out[i].begin(), q.out[i].end(),
              [](auto& a, auto& b) { return a.first < b.first; });
  }
  q.start = q.index_of(QKey{2, 1, 0});
  scc_prune(q, q.start);
  return q;
}

namespace {

void gen_312_avoiders(int n, Perm& cur, std::vector<char>& used,
                      const std::function<void(const Perm&)>& fn) {
  if ((int)cur.size() == n) {
    fn(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    cur.push_back(v);
    used[v] = 1;
    if (!contains(cur, Perm{3, 1, 2})) gen_312_avoiders(n, cur, used, fn);
    used[v] = 0;
    cur.pop_back();
  }
}

}  // namespace

QuotientGraph build_quotient_C(int N, int cap) {
  if (N < 1 || N > cap) throw std::invalid_argument("build_quotient_C: cutoff outside 1..cap");
  const Perm t{3, 1, 2};
  // signature per class; computed for every member and checked for equality
  std::map<QKey, std::map<QKey, int>> sig;
  for (int n = 1; n <= N; ++n) {
    Perm cur;
    std::vector<char> used(n + 1, 0);
    gen_312_avoiders(n, cur, used, [&](const Perm& p) {
      QKey k{(int)p.size(), 0, descent_mask(p)};
      std::map<QKey, int> s;
      for (int pos = 0; pos <= (int)p.size(); ++pos) {
        Perm qv = insert_and_trim(p, pos, t);
        if ((int)qv.size() == N + 1) qv = standardise(Perm(qv.begin(), qv.end() - 1));
        s[QKey{(int)qv.size(), 0, descent_mask(qv)}] += 1;
      }
      auto it = sig.find(k);
      if (it == sig.end()) {
        sig.emplace(k, std::move(s));
      } else if (it->second != s) {
        throw std::logic_error("build_quotient_C: class out-signature not uniform");
      }
    });
  }
  QuotientGraph q;
  q.kind = QuotientKind::descents_C;
  q.cutoff = N;
  for (auto& [k, s] : sig) q.keys.push_back(k);
  q.out.resize(q.keys.size());
  for (auto& [k, s] : sig) {
    int i = q.index_of(k);
    for (auto& [k2, m] : s) q.out[i].emplace_back(q.index_of(k2), Rational(m));
  }
  q.start = q.index_of(QKey{1, 0, 0});
  return q;
}

QuotientGraph build_quotient_A_weighted(int N) {
  if (N < 1) throw std::invalid_argument("build_quotient_A_weighted: cutoff < 1");
  QuotientGraph q;
  q.kind = QuotientKind::short_A;
  q.cutoff = N;
  for (int n = 1; n <= N; ++n)
    for (int r = 0; r <= n - 1; ++r) q.keys.push_back(QKey{n, r, 0});
  q.out.resize(q.keys.size());
  for (size_t i = 0; i < q.keys.size(); ++i) {
    int n = q.keys[i].n, r = q.keys[i].r;
    BigInt A = class_size_A(n, r);
    for (int m = 1; m <= std::min(n + 1, N); ++m)
      for (int s = 0; s <= m - 1; ++s) {
        BigInt e = edge_count_E(n, r, m, s);
        if (e != 0) q.out[i].emplace_back(q.index_of(QKey{m, s, 0}), Rational(e, A));
      }
    std::sort(q.out[i].begin(), q.out[i].end(),
              [](auto& a, auto& b) { return a.first < b.first; });
  }
  q.start = q.index_of(QKey{1, 0, 0});
  return q;
}

QuotientGraph build_quotient_A_aggregated(int N) {
  auto g = build_avoider_graph(PatternSpec::make(Perm{1, 3, 2, 4}), N, EdgeRule::version_two);
  QuotientGraph q;
  q.kind = QuotientKind::short_A;
  q.cutoff = N;
  for (int n = 1; n <= N; ++n)
    for (int r = 0; r <= n - 1; ++r) q.keys.push_back(QKey{n, r, 0});
  std::map<std::pair<int, int>, BigInt> cnt;  // (srcClass, dstClass) -> edges
  for (size_t i = 0; i < g.verts.size(); ++i) {
    const Perm& p = g.verts[i];
    int ci = q.index_of(QKey{(int)p.size(), short_count(p), 0});
    for (auto& [j, m] : g.out[i]) {
      const Perm& t = g.verts[j];
      cnt[{ci, q.index_of(QKey{(int)t.size(), short_count(t), 0})}] += m;
    }
  }
  q.out.resize(q.keys.size());
  for (auto& [key, c] : cnt) {
    auto [ci, cj] = key;
    q.out[ci].emplace_back(cj, Rational(c, class_size_A(q.keys[ci].n, q.keys[ci].r)));
  }
  q.start = q.index_of(QKey{1, 0, 0});
  return q;
}

QuotientGraph build_quotient_chain213(int N) {
  if (N < 1) throw std::invalid_argument("build_quotient_chain213: cutoff < 1");
  QuotientGraph q;
  q.kind = QuotientKind::chain_213;
  q.cutoff = N;
  for (int n = 1; n <= N; ++n) q.keys.push_back(QKey{n, 0, 0});
  q.out.resize(N);
  for (int n = 1; n <= N; ++n) {
    for (int m = 1; m <= std::min(n + 1, N); ++m) {
      int mult = (n == N && m == N) ? 2 : 1;  // boundary redirect joins the trim edge
      q.out[n - 1].emplace_back(m - 1, Rational(mult));
    }
  }
  q.start = 0;
  return q;
}

std::vector<Rational> weighted_walk_table(const QuotientGraph& q, int k_max) {
  if (q.start < 0) throw std::invalid_argument("weighted_walk_table: no start key");
  std::vector<Rational> W(k_max + 1);
  std::vector<Rational> v(q.keys.size()), nv(q.keys.size());
  v[q.start] = 1;
  W[1] = 1;
  for (int k = 2; k <= k_max; ++k) {
    for (auto& x : nv) x = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (auto& [j, w] : q.out[i]) nv[j] += v[i] * w;
    }
    std::swap(v, nv);
    Rational s = 0;
    for (auto& x : v) s += x;  // sorted key order: deterministic
    W[k] = s;
  }
  return W;
}

Rational weighted_walk_diag_A(int n) {
  ImplicitAOp op(n);
  std::vector<Rational> v(op.dim()), u(op.dim());
  v[0] = 1;  // (1,0)
  for (int k = 2; k <= n; ++k) {
    op.apply_exact(v, u);
    std::swap(v, u);
  }
  Rational s = 0;
  for (auto& x : v) s += x;
  return s;
}

ConjectureReport conjecture_report(int n_max, int k_max) {
  ConjectureReport rep;
  for (int n = 1; n <= n_max; ++n) {
    auto g = build_avoider_graph(PatternSpec::make(Perm{1, 3, 2, 4}), n, EdgeRule::version_two);
    auto W = count_walks(g, k_max);
    auto q = build_quotient_A_aggregated(n);
    auto Wt = weighted_walk_table(q, k_max);
    for (int k = 1; k <= k_max; ++k) {
      ConjectureRow row{n, k, W[k], Wt[k], 0.0};
      Rational ratio = Wt[k] / Rational(W[k]);
      row.ratio = (double)ratio;
      if (ratio > 1) rep.counterexample = true;
      rep.max_ratio = std::max(rep.max_ratio, row.ratio);
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

// ---- implicit A operator ----

ImplicitAOp::ImplicitAOp(int N_) : N(N_) {
  T_near.resize(dim());
  T_lo.resize(dim());
  T_hi.resize(dim());
  T_exact.resize(dim());
  for (int n = 1; n <= N; ++n)
    for (int r = 0; r < n; ++r) {
      int i = n * (n - 1) / 2 + r;
      BigInt t = catalan_triangle(n - 1, r);
      T_exact[i] = Rational(t);
      double d = t.convert_to<double>();
      // bracket the exact integer between adjacent doubles
      while (BigInt(d) > t) d = std::nextafter(d, -1e308);
      double lo = d, hi = d;
      while (BigInt(hi) < t) hi = std::nextafter(hi, 1e308);
      T_near[i] = d;
      T_lo[i] = lo;
      T_hi[i] = hi;
    }
}

void ImplicitAOp::apply_exact(const std::vector<Rational>& v, std::vector<Rational>& u) const {
  u.assign(dim(), Rational(0));
  // z(n,r) = v(n,r)/T(n-1,r) + z(n+1,r) + z(n,r+1)
  std::vector<std::vector<Rational>> Z(N + 2);
  Z[N + 1].assign(N + 1, Rational(0));
  for (int n = N; n >= 1; --n) {
    Z[n].assign(n, Rational(0));
    for (int r = n - 1; r >= 0; --r) {
      int i = n * (n - 1) / 2 + r;
      Z[n][r] = v[i] / T_exact[i] + Z[n + 1][r] + (r + 1 < n ? Z[n][r + 1] : Rational(0));
    }
  }
  for (int m = 2; m <= N; ++m) {
    // ascending: u(m,s) += sum_{r'=0}^{min(s,m-2)} v(m-1,r')
    Rational cs = 0;
    std::vector<Rational> pref(m - 1);
    for (int rp = 0; rp <= m - 2; ++rp) {
      cs += v[(m - 1) * (m - 2) / 2 + rp];
      pref[rp] = cs;
    }
    for (int s = 0; s <= m - 1; ++s)
      u[m * (m - 1) / 2 + s] += pref[std::min(s, m - 2)];
    // descending: u(m,s) += sum_{j=0}^{s-1} T(m-2,j) z(m, m+j-s)
    for (int s = 1; s <= m - 1; ++s) {
      Rational tot = 0;
      for (int j = std::max(0, s - m); j <= s - 1 && j <= m - 2; ++j) {
        int r = m + j - s;
        if (r >= 0 && r < m) tot += T_exact[(m - 1) * (m - 2) / 2 + j] * Z[m][r];
      }
      u[m * (m - 1) / 2 + s] += tot;
    }
  }
}

void ImplicitAOp::apply_double(const std::vector<double>& v, std::vector<double>& u) const {
  u.assign(dim(), 0.0);
  std::vector<std::vector<double>> Z(N + 2);
  Z[N + 1].assign(N + 1, 0.0);
  for (int n = N; n >= 1; --n) {
    Z[n].assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
      int i = n * (n - 1) / 2 + r;
      Z[n][r] = v[i] / T_near[i] + Z[n + 1][r] + (r + 1 < n ? Z[n][r + 1] : 0.0);
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
        if (r >= 0 && r < m) tot += T_near[(m - 1) * (m - 2) / 2 + j] * Z[m][r];
      }
      u[m * (m - 1) / 2 + s] += tot;
    }
  }
}

void write_quotient_cache(std::ostream& os, const QuotientGraph& q) {
  const char* kind = nullptr;
  switch (q.kind) {
    case QuotientKind::run_B: kind = "run"; break;
    case QuotientKind::descents_C: kind = "descents"; break;
    case QuotientKind::short_A: kind = "short"; break;
    case QuotientKind::chain_213: kind = "chain"; break;
  }
  os << "quot v1 " << kind << ' ' << q.cutoff << '\n';
  for (size_t i = 0; i < q.keys.size(); ++i) {
    const QKey& a = q.keys[i];
    long ra = q.kind == QuotientKind::descents_C ? (long)a.mask : a.r;
    for (auto& [j, w] : q.out[i]) {
      const QKey& b = q.keys[j];
      long rb = q.kind == QuotientKind::descents_C ? (long)b.mask : b.r;
      os << a.n << ' ' << ra << ' ' << b.n << ' ' << rb << ' '
         << boost::multiprecision::numerator(w) << ' '
         << boost::multiprecision::denominator(w) << '\n';
    }
  }
}

QuotientGraph read_quotient_cache(std::istream& is) {
  std::string magic, ver, kind;
  int cutoff;
  if (!(is >> magic >> ver >> kind >> cutoff) || magic != "quot" || ver != "v1")
    throw std::invalid_argument("read_quotient_cache: bad header");
  QuotientGraph q;
  q.cutoff = cutoff;
  if (kind == "run") q.kind = QuotientKind::run_B;
  else if (kind == "descents") q.kind = QuotientKind::descents_C;
  else if (kind == "short") q.kind = QuotientKind::short_A;
  else if (kind == "chain") q.kind = QuotientKind::chain_213;
  else throw std::invalid_argument("read_quotient_cache: bad kind " + kind);
  struct Row { QKey a, b; Rational w; };
  std::vector<Row> rows;
  int an, bn;
  long ar, br;
  std::string num, den;
  std::map<QKey, int> seen;
  while (is >> an >> ar >> bn >> br >> num >> den) {
    Row row;
    row.a = q.kind == QuotientKind::descents_C ? QKey{an, 0, (std::uint32_t)ar} : QKey{an, (int)ar, 0};
    row.b = q.kind == QuotientKind::descents_C ? QKey{bn, 0, (std::uint32_t)br} : QKey{bn, (int)br, 0};
    row.w = Rational(BigInt(num), BigInt(den));
    seen[row.a];
    seen[row.b];
    rows.push_back(std::move(row));
  }
  for (auto& [k, idx] : seen) {
    idx = (int)q.keys.size();
    q.keys.push_back(k);
  }
  q.out.resize(q.keys.size());
  for (auto& row : rows) q.out[seen.at(row.a)].emplace_back(seen.at(row.b), row.w);
  switch (q.kind) {
    case QuotientKind::run_B: q.start = q.index_of(QKey{2, 1, 0}); break;
    case QuotientKind::chain_213: q.start = q.index_of(QKey{1, 0, 0}); break;
    default: q.start = q.index_of(QKey{1, 0, 0}); break;
  }
  return q;
}

void write_walk_csv(std::ostream& os, const std::vector<ConjectureRow>& rows, bool have_W) {
  os << "n,k,W,Wtilde,ratio\n";
  for (auto& r : rows) {
    os << r.n << ',' << r.k << ',';
    if (have_W) os << r.W;
    std::ostringstream wt;
    wt.precision(15);
    wt << (double)r.Wt;
    os << ',' << wt.str() << ',';
    if (have_W) {
      std::ostringstream rt;
      rt.precision(10);
      rt << r.ratio;
      os << rt.str();
    }
    os << '\n';
  }
}

// ---- implicit B operator ----

ImplicitBOp::ImplicitBOp(int N_) : N(N_) {
  if (N < 3) throw std::invalid_argument("ImplicitBOp: cutoff too small");
}

template <class Num>
static void b_apply(int N, const std::vector<Num>& vin, std::vector<Num>& u) {
  auto idx = [](int n, int r) { return (n - 1) * (n - 2) / 2 + (r - 1); };
  int d = (N - 1) * N / 2;
  std::vector<Num> v = vin;
  v[idx(N, N - 1)] = 0;  // masked class
  u.assign(d, Num(0));
  // lateral/self: (n,r) -> (m,r), r+1 <= m <= n
  for (int r = 1; r <= N - 1; ++r) {
    Num suf(0);
    for (int n = N; n >= r + 1; --n) {
      suf += v[idx(n, r)];
      u[idx(n, r)] += suf;
    }
  }
  // ascending: (m-1,r) -> (m,s), s <= r+1
  for (int m = 3; m <= N; ++m) {
    Num suf(0);
    for (int s = m - 1; s >= 1; --s) {
      int r = s - 1;
      if (r >= 1 && r <= m - 2) suf += v[idx(m - 1, r)];
      u[idx(m, s)] += suf;
    }
  }
  u[idx(N, N - 1)] = 0;
}

void ImplicitBOp::apply_exact(const std::vector<BigInt>& v, std::vector<BigInt>& u) const {
  b_apply<BigInt>(N, v, u);
}

void ImplicitBOp::apply_double(const std::vector<double>& v, std::vector<double>& u) const {
  b_apply<double>(N, v, u);
}

}  // namespace swlim
