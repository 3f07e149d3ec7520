#include "swlim/perm.hpp"

#include <algorithm>
#include <numeric>

namespace swlim {

Perm standardise(const std::vector<int>& seq) {
  int n = (int)seq.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  Perm out(n);
  for (int rank = 0; rank < n; ++rank) {
    if (rank > 0 && seq[idx[rank]] == seq[idx[rank - 1]])
      throw std::invalid_argument("standardise: duplicate entries");
    out[idx[rank]] = rank + 1;
  }
  return out;
}

bool is_permutation(const Perm& p) {
  int n = (int)p.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : p) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool contains_generic(const Perm& host, const Perm& pat) {
  int n = (int)host.size(), k = (int)pat.size();
  if (k == 0) return true;
  if (k > n) return false;
  // match[j] = host index chosen for pat position j
  std::vector<int> match(k, -1);
  // Backtracking over host positions for each pattern slot; order constraints
  // checked pairwise against already-placed slots.
  std::vector<int> start(k, 0);
  int j = 0;
  while (true) {
    bool advanced = false;
    for (int i = start[j]; i <= n - (k - j); ++i) {
      bool ok = true;
      for (int q = 0; q < j; ++q) {
        if ((pat[q] < pat[j]) != (host[match[q]] < host[i])) { ok = false; break; }
      }
      if (!ok) continue;
      match[j] = i;
      start[j] = i + 1;
      if (j + 1 == k) return true;
      start[j + 1] = i + 1;
      ++j;
      advanced = true;
      break;
    }
    if (!advanced) {
      if (j == 0) return false;
      --j;
    }
  }
}

namespace {

bool contains1(const Perm& h) { return !h.empty(); }

// An inversion exists iff an adjacent descent exists (and dually for ascents).
bool contains21_full(const Perm& h) {
  for (size_t i = 1; i < h.size(); ++i)
    if (h[i] < h[i - 1]) return true;
  return false;
}

bool contains12_full(const Perm& h) {
  for (size_t i = 1; i < h.size(); ++i)
    if (h[i] > h[i - 1]) return true;
  return false;
}

bool contains132(const Perm& h) {
  // h_i < h_k < h_j with i<j<k: track min prefix, then look for a later pair
  // (big, mid) with min < mid < big.
  int n = (int)h.size();
  int mn = 1 << 30;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k)
      if (mn < h[k] && h[k] < h[j]) return true;
    mn = std::min(mn, h[j]);
  }
  return false;
}

bool contains213(const Perm& h) {
  // h_j < h_i < h_k with i<j<k: for each i, min over j>i, then any k after
  int n = (int)h.size();
  for (int i = 0; i < n; ++i) {
    int mn = 1 << 30;
    for (int j = i + 1; j < n; ++j) {
      if (mn < h[i] && h[j] > h[i]) return true;
      if (h[j] < h[i]) mn = std::min(mn, h[j]);
    }
  }
  return false;
}

bool contains312(const Perm& h) {
  int n = (int)h.size();
  for (int i = 0; i < n; ++i) {
    int mn = 1 << 30;
    for (int j = i + 1; j < n; ++j) {
      if (mn < h[j] && h[j] < h[i]) return true;
      mn = std::min(mn, h[j]);
    }
  }
  return false;
}

bool contains123(const Perm& h) {
  int n = (int)h.size();
  int mn = 1 << 30;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k)
      if (mn < h[j] && h[j] < h[k]) return true;
    mn = std::min(mn, h[j]);
  }
  return false;
}

bool contains231(const Perm& h) {
  int n = (int)h.size();
  for (int i = 0; i < n; ++i) {
    int mx = -1;
    for (int j = i + 1; j < n; ++j) {
      if (mx > h[i] && h[j] < h[i]) return true;
      if (h[j] > h[i]) mx = std::max(mx, h[j]);
    }
  }
  return false;
}

bool contains321(const Perm& h) {
  int n = (int)h.size();
  for (int j = 0; j < n; ++j) {
    bool bigger_before = false;
    for (int i = 0; i < j; ++i)
      if (h[i] > h[j]) { bigger_before = true; break; }
    if (!bigger_before) continue;
    for (int k = j + 1; k < n; ++k)
      if (h[k] < h[j]) return true;
  }
  return false;
}

}  // namespace

bool contains(const Perm& host, const Perm& pat) {
  switch (pat.size()) {
    case 0: return true;
    case 1: return contains1(host);
    case 2:
      return pat[0] == 2 ? contains21_full(host) : contains12_full(host);
    case 3: {
      int code = pat[0] * 100 + pat[1] * 10 + pat[2];
      switch (code) {
        case 123: return contains123(host);
        case 132: return contains132(host);
        case 213: return contains213(host);
        case 231: return contains231(host);
        case 312: return contains312(host);
        case 321: return contains321(host);
      }
      break;
    }
    default: break;
  }
  return contains_generic(host, pat);
}

Perm insert_max(const Perm& p, int pos) {
  int n = (int)p.size();
  if (pos < 0 || pos > n) throw std::invalid_argument("insert_max: pos out of range");
  Perm out;
  out.reserve(n + 1);
  out.insert(out.end(), p.begin(), p.begin() + pos);
  out.push_back(n + 1);
  out.insert(out.end(), p.begin() + pos, p.end());
  return out;
}

Perm trim_to_avoid(const Perm& p, const Perm& t) {
  // containment is monotone under prefix extension: binary search the cut.
  int n = (int)p.size();
  if (!contains(p, t)) return standardise(p);
  int lo = 0, hi = n;  // prefix of length lo avoids, length hi contains
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    Perm pre(p.begin(), p.begin() + mid);
    if (contains(pre, t)) hi = mid; else lo = mid;
  }
  return standardise(Perm(p.begin(), p.begin() + lo));
}

namespace {

// Specialised insert-then-trim for an avoider p of t and insertion position
// pos; q = insert_max(p, pos) with max M = n+1 at index pos.
// Each returns the standardised longest t-avoiding prefix of q.

Perm std_prefix(const Perm& q, int len) { return standardise(Perm(q.begin(), q.begin() + len)); }

Perm trim21(const Perm& p, int pos) {
  // p increasing; q has M at pos followed by smaller values: cut right after M
  // unless M is at the end.
  int n = (int)p.size();
  Perm q = insert_max(p, pos);
  if (pos == n) return q;
  return std_prefix(q, pos + 1);
}

Perm trim132(const Perm& p, int pos) {
  // q = p[0..pos) M p[pos..): first 132 occurrence uses M as the '3' — cut
  // before the first later element exceeding min(p[0..pos)).
  int n = (int)p.size();
  Perm q = insert_max(p, pos);
  int mn = 1 << 30;
  for (int i = 0; i < pos; ++i) mn = std::min(mn, p[i]);
  for (int i = pos; i < n; ++i)
    if (p[i] > mn) return std_prefix(q, (i - pos) + pos + 1);
  return q;
}

Perm trim213(const Perm& p, int pos) {
  // An inversion in p[0..pos) together with M is a 213 (and the first one);
  // if that prefix is increasing no occurrence can involve M at all.
  Perm q = insert_max(p, pos);
  for (int i = 1; i < pos; ++i)
    if (p[i] < p[i - 1]) return std_prefix(q, pos);
  return q;
}

Perm trim312(const Perm& p, int pos) {
  // first 312 occurrence after inserting M: M plays '3'; need a later ascent
  // (low then high, both below M). Cut before the top of the first ascent
  // after M.
  int n = (int)p.size();
  Perm q = insert_max(p, pos);
  if (pos >= n - 1) return q;
  int mn = p[pos];
  for (int i = pos + 1; i < n; ++i) {
    if (p[i] > mn) return std_prefix(q, pos + 1 + (i - pos));
    mn = std::min(mn, p[i]);
  }
  return q;
}

}  // namespace

Perm insert_and_trim(const Perm& p, int pos, const Perm& t) {
  if (t.size() == 2 && t[0] == 2) return trim21(p, pos);
  if (t.size() == 3) {
    int code = t[0] * 100 + t[1] * 10 + t[2];
    if (code == 132) return trim132(p, pos);
    if (code == 213) return trim213(p, pos);
    if (code == 312) return trim312(p, pos);
  }
  return trim_to_avoid(insert_max(p, pos), t);
}

int initial_run_length(const Perm& p) {
  if (p.empty()) throw std::invalid_argument("initial_run_length: empty");
  int r = 1;
  while (r < (int)p.size() && p[r] > p[r - 1]) ++r;
  return r;
}

std::uint32_t descent_mask(const Perm& p) {
  if (p.empty()) throw std::invalid_argument("descent_mask: empty");
  std::uint32_t m = 0;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] > p[i]) m |= (1u << (i - 1));
  return m;
}

int short_count(const Perm& p) {
  if (p.empty()) throw std::invalid_argument("short_count: empty");
  int mx = 0, rlm = 0;
  for (int i = (int)p.size() - 1; i >= 0; --i) {
    if (p[i] > mx) { mx = p[i]; ++rlm; }
  }
  return (int)p.size() - rlm;
}

std::string perm_to_string(const Perm& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Perm perm_from_string(const std::string& s) {
  Perm p;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    p.push_back(std::stoi(s.substr(i, j - i)));
    i = j + 1;
  }
  if (!is_permutation(p)) throw std::invalid_argument("perm_from_string: not a permutation: " + s);
  return p;
}

namespace {

void enum_rec(const Perm& pat, int n, Perm& cur, std::vector<char>& used,
              std::vector<Perm>* out, long long* count) {
  if ((int)cur.size() == n) {
    if (out) out->push_back(cur);
    if (count) ++*count;
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    cur.push_back(v);
    used[v] = 1;
    if (!contains(cur, pat)) enum_rec(pat, n, cur, used, out, count);
    used[v] = 0;
    cur.pop_back();
  }
}

}  // namespace

std::vector<Perm> enumerate_avoiders(const Perm& pat, int n, int cap) {
  if (n < 0) throw std::invalid_argument("enumerate_avoiders: n < 0");
  if (n > cap) throw std::invalid_argument("enumerate_avoiders: n exceeds cap");
  std::vector<Perm> out;
  Perm cur;
  std::vector<char> used(n + 1, 0);
  enum_rec(pat, n, cur, used, &out, nullptr);
  return out;
}

long long count_avoiders(const Perm& pat, int n) {
  long long c = 0;
  Perm cur;
  std::vector<char> used(n + 1, 0);
  enum_rec(pat, n, cur, used, nullptr, &c);
  return c;
}

}  // namespace swlim
