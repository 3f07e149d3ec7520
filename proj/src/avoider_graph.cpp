#include "swlim/avoider_graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace swlim {

PatternSpec PatternSpec::make(const Perm& pattern) {
  if (pattern.empty() || pattern.back() != (int)pattern.size())
    throw std::invalid_argument("PatternSpec: pattern must end in its maximum");
  PatternSpec s;
  s.pattern = pattern;
  s.trim_target = standardise(Perm(pattern.begin(), pattern.end() - 1));
  return s;
}

int AvoiderGraph::index_of(const Perm& p) const {
  auto cmp = [](const Perm& a, const Perm& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto it = std::lower_bound(verts.begin(), verts.end(), p, cmp);
  if (it != verts.end() && *it == p) return (int)(it - verts.begin());
  return -1;
}

long long AvoiderGraph::edge_count() const {
  long long c = 0;
  for (auto& e : out)
    for (auto& [t, m] : e) c += m;
  return c;
}

namespace {

void gen_avoiders(const Perm& t, int n, Perm& cur, std::vector<char>& used,
                  std::vector<Perm>& out) {
  if ((int)cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    cur.push_back(v);
    used[v] = 1;
    if (!contains(cur, t)) gen_avoiders(t, n, cur, used, out);
    used[v] = 0;
    cur.pop_back();
  }
}

}  // namespace

AvoiderGraph build_avoider_graph(const PatternSpec& spec, int N, EdgeRule rule,
                                 long long vertex_cap) {
  if (N < 1) throw std::invalid_argument("build_avoider_graph: cutoff < 1");
  AvoiderGraph g;
  g.spec = spec;
  g.cutoff = N;
  g.rule = rule;
  for (int n = 1; n <= N; ++n) {
    Perm cur;
    std::vector<char> used(n + 1, 0);
    gen_avoiders(spec.trim_target, n, cur, used, g.verts);
    if ((long long)g.verts.size() > vertex_cap)
      throw std::invalid_argument("build_avoider_graph: vertex cap exceeded");
  }
  // generation order is already (length, lex)
  g.start = g.index_of(Perm{1});
  g.out.resize(g.verts.size());
  for (size_t i = 0; i < g.verts.size(); ++i) {
    const Perm& p = g.verts[i];
    int n = (int)p.size();
    std::map<int, int> acc;
    for (int pos = 0; pos <= n; ++pos) {
      Perm q = insert_and_trim(p, pos, spec.trim_target);
      if (q.empty()) throw std::logic_error("build_avoider_graph: empty trim result");
      if ((int)q.size() == N + 1) {
        if (rule == EdgeRule::version_one) continue;
        q = standardise(Perm(q.begin(), q.end() - 1));
      }
      int j = g.index_of(q);
      if (j < 0) throw std::logic_error("build_avoider_graph: target vertex missing");
      acc[j] += 1;
    }
    g.out[i].assign(acc.begin(), acc.end());
  }
  return g;
}

std::vector<int> tarjan_scc(const std::vector<std::vector<std::pair<int, int>>>& adj) {
  int n = (int)adj.size();
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  // iterative Tarjan
  struct Frame { int v; size_t ei; };
  for (int s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    std::vector<Frame> call{{s, 0}};
    num[s] = low[s] = counter++;
    stk.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei < adj[v].size()) {
        int w = adj[v][ei++].first;
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return comp;
}

AvoiderGraph prune_for_spectral(const AvoiderGraph& g, std::optional<Perm> hub) {
  int h = -1;
  if (hub) h = g.index_of(*hub);
  if (h < 0) h = g.index_of(Perm{2, 1});
  if (h < 0) h = g.start;
  if (h < 0) throw std::invalid_argument("prune_for_spectral: no hub vertex");
  auto comp = tarjan_scc(g.out);
  int target = comp[h];
  AvoiderGraph r;
  r.spec = g.spec;
  r.cutoff = g.cutoff;
  r.rule = g.rule;
  std::vector<int> remap(g.verts.size(), -1);
  for (size_t i = 0; i < g.verts.size(); ++i) {
    if (comp[i] == target) {
      remap[i] = (int)r.verts.size();
      r.verts.push_back(g.verts[i]);
    } else {
      r.dropped.push_back(g.verts[i]);
    }
  }
  if (r.verts.empty()) throw std::invalid_argument("prune_for_spectral: degenerate result");
  r.out.resize(r.verts.size());
  for (size_t i = 0; i < g.verts.size(); ++i) {
    if (remap[i] < 0) continue;
    for (auto& [j, m] : g.out[i])
      if (remap[j] >= 0) r.out[remap[i]].emplace_back(remap[j], m);
  }
  r.start = (remap[g.start] >= 0) ? remap[g.start] : 0;
  return r;
}

std::vector<BigInt> count_walks_from(const AvoiderGraph& g, int src, int k_max) {
  std::vector<BigInt> W(k_max + 1);
  std::vector<BigInt> v(g.verts.size()), nv(g.verts.size());
  v[src] = 1;
  W[1] = 1;
  for (int k = 2; k <= k_max; ++k) {
    for (auto& x : nv) x = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (auto& [j, m] : g.out[i]) nv[j] += v[i] * m;
    }
    std::swap(v, nv);
    BigInt s = 0;
    for (auto& x : v) s += x;
    W[k] = s;
  }
  return W;
}

std::vector<BigInt> count_walks(const AvoiderGraph& g, int k_max) {
  if (g.start < 0) throw std::invalid_argument("count_walks: no start vertex");
  return count_walks_from(g, g.start, k_max);
}

StatKey stat_key(const Perm& p, StatKeyer k) {
  StatKey s;
  s.n = (int)p.size();
  switch (k) {
    case StatKeyer::initial_run: s.r = initial_run_length(p); break;
    case StatKeyer::short_count: s.r = short_count(p); break;
    case StatKeyer::descent_set: s.mask = descent_mask(p); break;
  }
  return s;
}

std::vector<StatKey> class_statistics(const AvoiderGraph& g, StatKeyer k) {
  std::vector<StatKey> out;
  out.reserve(g.verts.size());
  for (auto& p : g.verts) out.push_back(stat_key(p, k));
  return out;
}

void write_graph_cache(std::ostream& os, const AvoiderGraph& g) {
  os << "avgraph v1 ";
  for (int v : g.spec.pattern) os << v;
  os << ' ' << g.cutoff << ' ' << (g.rule == EdgeRule::version_one ? "v1" : "v2") << '\n';
  for (size_t i = 0; i < g.verts.size(); ++i)
    os << i << ' ' << perm_to_string(g.verts[i]) << '\n';
  for (size_t i = 0; i < g.verts.size(); ++i)
    for (auto& [j, m] : g.out[i]) os << i << ' ' << j << ' ' << m << '\n';
}

AvoiderGraph read_graph_cache(std::istream& is) {
  std::string magic, ver, pat, rule;
  int cutoff;
  if (!(is >> magic >> ver >> pat >> cutoff >> rule) || magic != "avgraph" || ver != "v1")
    throw std::invalid_argument("read_graph_cache: bad header");
  Perm pattern;
  for (char c : pat) pattern.push_back(c - '0');
  AvoiderGraph g;
  g.spec = PatternSpec::make(pattern);
  g.cutoff = cutoff;
  g.rule = rule == "v1" ? EdgeRule::version_one : EdgeRule::version_two;
  std::string line;
  std::getline(is, line);
  std::vector<std::string> toks;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long a, c;
    std::string b;
    ls >> a >> b;
    if (ls >> c) {  // edge line: src dst mult
      int src = (int)a, dst = (int)std::stoll(b);
      if (src >= (int)g.out.size()) g.out.resize(src + 1);
      g.out[src].emplace_back(dst, (int)c);
    } else {  // vertex line: idx perm
      if ((long long)g.verts.size() != a)
        throw std::invalid_argument("read_graph_cache: vertex index mismatch");
      g.verts.push_back(perm_from_string(b));
    }
  }
  g.out.resize(g.verts.size());
  g.start = g.index_of(Perm{1});
  return g;
}

}  // namespace swlim
