#pragma once
// Permutations in one-line notation, pattern containment, and the statistics
// that key the quotient constructions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swlim {

using Perm = std::vector<int>;  // values 1..n, each exactly once

// Rename distinct integers to 1..n preserving relative order.
// Throws std::invalid_argument on duplicates.
Perm standardise(const std::vector<int>& seq);

bool is_permutation(const Perm& p);

// True iff some subsequence of host is order-isomorphic to pat.
// Dispatches to linear scans for |pat| <= 3, generic backtracking otherwise.
bool contains(const Perm& host, const Perm& pat);
inline bool avoids(const Perm& host, const Perm& pat) { return !contains(host, pat); }

// Generic backtracking embedding search, any pattern. Exposed so tests can
// cross-check the specialised paths.
bool contains_generic(const Perm& host, const Perm& pat);

// Insert a new maximum with `pos` elements to its left (0 <= pos <= n).
Perm insert_max(const Perm& p, int pos);

// Longest prefix of p avoiding t, standardised. May be empty (|t| <= 1).
Perm trim_to_avoid(const Perm& p, const Perm& t);

// Fast path for graph building: trim_to_avoid(insert_max(p, pos), t) where p
// already avoids t. Specialised for t in {21, 132, 213, 312}; falls back to
// the generic pair otherwise.
Perm insert_and_trim(const Perm& p, int pos, const Perm& t);

int initial_run_length(const Perm& p);
// Descent set as bitmask: bit (i-1) set iff p[i-1] > p[i], i in 1..n-1.
std::uint32_t descent_mask(const Perm& p);
// Count of values that are not right-to-left maxima.
int short_count(const Perm& p);

std::string perm_to_string(const Perm& p);     // "1,3,2"
Perm perm_from_string(const std::string& s);   // inverse, validates

// All permutations of length n avoiding pat, lexicographic order.
// Guard: refuses n > cap (resource growth for long patterns).
std::vector<Perm> enumerate_avoiders(const Perm& pat, int n, int cap = 12);
// Count only (no materialisation); same pruning search.
long long count_avoiders(const Perm& pat, int n);

}  // namespace swlim
