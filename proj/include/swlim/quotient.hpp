#pragma once
// Quotient graphs: B(n,r) for 2134, C(n,S) for 3124, the weighted A(n,r)
// quotient for 1324 (E(n,r,m,s)/|A(n,r)| weights), weighted walk tables, the
// conjecture checker, and implicit large-cutoff operators.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "swlim/avoider_graph.hpp"
#include "swlim/catalan.hpp"

namespace swlim {

using Rational = boost::multiprecision::cpp_rational;

enum class QuotientKind { run_B, descents_C, short_A, chain_213 };

struct QKey {
  int n = 0;
  int r = 0;              // run_B / short_A / chain (r unused for chain)
  std::uint32_t mask = 0; // descents_C
  auto operator<=>(const QKey&) const = default;
};

struct QuotientGraph {
  QuotientKind kind;
  int cutoff = 0;
  std::vector<QKey> keys;  // sorted
  std::vector<std::vector<std::pair<int, Rational>>> out;
  int start = -1;
  std::vector<QKey> dropped;  // classes removed by SCC pruning

  int index_of(const QKey& k) const;
};

// Number of full-1324-graph edges from class A(n,r) to class A(m,s).
// Corrected Pascal-style recurrence (the m=n boundary needs a Catalan-
// triangle term; verified against brute-force edge counts for n <= 9):
//   0 on guards; T(n-1,r) if m=n+1; else
//   E(n,r-1,m,s) + [m<=n-1] E(n-1,r,m,s) + [m=n & r+s>=n] T(n-2, r+s-n).
BigInt edge_count_E(int n, int r, int m, int s);

// B(n,r) quotient for 2134: formula edges, unit weights, SCC-pruned
// (drops exactly the class (N, N-1)). Start key (2,1).
QuotientGraph build_quotient_B(int N);

// C(n,S) quotient for 3124: aggregated by streaming over the full Av(312)
// version-two graph; asserts per-vertex out-signature uniformity (throws
// std::logic_error on violation). Unit weights with multiplicities.
QuotientGraph build_quotient_C(int N, int cap = 14);

// Weighted A(n,r) quotient for 1324 with E/|A| weights; ascending edges only
// when n+1 <= N (cutoff boundary dropped in quotient space).
QuotientGraph build_quotient_A_weighted(int N);

// Same classes but with weights aggregated from the explicit version-two
// cutoff graph (boundary redirection aggregated); used by the conjecture
// grid, where ratios against full-graph W need matching boundary behaviour.
QuotientGraph build_quotient_A_aggregated(int N);

// Av(213) chain: one class per length, n -> m for all m <= min(n+1, N).
QuotientGraph build_quotient_chain213(int N);

// Wt[k], k = 1..k_max: weighted walks from the start key, exact rationals.
std::vector<Rational> weighted_walk_table(const QuotientGraph& q, int k_max);

// W~_{N,N} via the implicit drop-boundary operator (exact): cheap route to
// the Appendix column (identical to the aggregated value at k = n).
Rational weighted_walk_diag_A(int n);

struct ConjectureRow {
  int n, k;
  BigInt W;
  Rational Wt;
  double ratio;
};
struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  double max_ratio = 0;
  bool counterexample = false;  // some ratio > 1 (exact comparison)
};
ConjectureReport conjecture_report(int n_max, int k_max);

// ---- implicit operators for large cutoffs (push-forward convention) ----

// Weighted A-quotient operator, drop boundary. State vector indexed by
// (n,r), 1 <= n <= N, 0 <= r <= n-1, flattened as n(n-1)/2 + r.
struct ImplicitAOp {
  explicit ImplicitAOp(int N);
  int N;
  int dim() const { return N * (N + 1) / 2; }
  void apply_exact(const std::vector<Rational>& v, std::vector<Rational>& u) const;
  // Plain double evaluation (round-to-nearest T values).
  void apply_double(const std::vector<double>& v, std::vector<double>& u) const;
  // Outward-rounded lower-bound evaluation; caller must have FE_DOWNWARD set
  // (see certified.cpp). Divisions use upward-rounded T.
  void apply_double_lower(const std::vector<double>& v, std::vector<double>& u) const;

  std::vector<double> T_near, T_lo, T_hi;  // T(n-1,r) flattened like the state
  std::vector<Rational> T_exact;
};

// B-quotient operator with the (N,N-1) class dropped. State indexed by
// (n,r), 2 <= n <= N, 1 <= r <= n-1, flattened as (n-1)(n-2)/2 + (r-1).
struct ImplicitBOp {
  explicit ImplicitBOp(int N);
  int N;
  int dim() const { return (N - 1) * N / 2; }
  int masked_index() const { return dim() - 1; }  // (N, N-1)
  void apply_exact(const std::vector<BigInt>& v, std::vector<BigInt>& u) const;
  void apply_double(const std::vector<double>& v, std::vector<double>& u) const;
};

// Cache format: `quot v1 <kind> <cutoff>`, then `n r m s num den` rows
// (r/s hold the descent bitmask for the C kind).
void write_quotient_cache(std::ostream& os, const QuotientGraph& q);
QuotientGraph read_quotient_cache(std::istream& is);

// WalkTable CSV: header `n,k,W,Wtilde,ratio`; W empty when not supplied.
void write_walk_csv(std::ostream& os, const std::vector<ConjectureRow>& rows,
                    bool have_W);

}  // namespace swlim
