#include "swlim/catalan.hpp"

#include <mutex>
#include <vector>

namespace swlim {

namespace {

// Row-extended memo for T; grown under a lock, then read-only.
std::vector<std::vector<BigInt>> g_rows;  // g_rows[n][k], k <= n
std::mutex g_mu;

const BigInt& T_cached(int n, int k) {
  static BigInt zero = 0;
  if (k < 0 || k > n || n < 0) return zero;
  if ((int)g_rows.size() <= n) {
    std::lock_guard<std::mutex> lk(g_mu);
    while ((int)g_rows.size() <= n) {
      int m = (int)g_rows.size();
      std::vector<BigInt> row(m + 1);
      row[0] = 1;
      for (int j = 1; j <= m; ++j)
        row[j] = row[j - 1] + (j <= m - 1 ? g_rows[m - 1][j] : BigInt(0));
      g_rows.push_back(std::move(row));
    }
  }
  return g_rows[n][k];
}

}  // namespace

BigInt catalan_triangle(int n, int k) { return T_cached(n, k); }

BigInt catalan_number(int n) { return n < 0 ? BigInt(0) : T_cached(n, n); }

BigInt class_size_B(int n, int r) {
  if (r < 1 || r > n) return 0;
  return catalan_triangle(n - 1, n - r);
}

BigInt class_size_A(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) return 0;
  return catalan_triangle(n - 1, k);
}

BigInt class_size_A_recurrence(int n, int k) {
  if (n == 0) return k >= 0 ? 1 : 0;
  if (n == 1) return k == 0 ? 1 : 0;
  if (k < 0 || k > n - 1) return 0;
  BigInt s = 0;
  for (int m = 1; m <= n - 1; ++m) {
    int np = n - m - 1, kp = k - m + 1;
    BigInt a = (np == 0) ? (kp >= 0 ? BigInt(1) : BigInt(0)) : class_size_A(np, kp);
    s += catalan_number(m) * a;
  }
  return s;
}

BigInt class_size_C(int n, std::uint32_t S) {
  if (n < 1) return 0;
  if (n >= 32) throw std::invalid_argument("class_size_C: n too large for bitmask keys");
  if (S >> (n - 1)) return 0;  // descents outside 1..n-1
  // dp over pending count u after each of the n placements
  int nd = __builtin_popcount(S);
  std::vector<BigInt> dp(nd + 1);
  dp[0] = 1;
  for (int i = 1; i <= n; ++i) {
    bool descent_move = i >= 2 && (S >> (i - 2)) & 1u;  // move i realises descent at i-1
    int rem = 0;  // descents still ahead (at positions >= i)
    for (int j = i; j <= n - 1; ++j) rem += (S >> (j - 1)) & 1u;
    std::vector<BigInt> nx(nd + 1);
    if (descent_move) {
      for (int u = 1; u <= nd; ++u)
        if (dp[u] != 0) nx[u - 1] += dp[u];
    } else {
      for (int u = 0; u <= nd; ++u) {
        if (dp[u] == 0) continue;
        for (int j = 0; u + j <= rem; ++j) nx[u + j] += dp[u];
      }
    }
    // pending values can only be consumed by remaining descents
    for (int u = rem + 1; u <= nd; ++u) nx[u] = 0;
    dp = std::move(nx);
  }
  return dp[0];
}

}  // namespace swlim
