#pragma once
// Catalan triangle, closed-form quotient class sizes, and the descent-set
// size dynamic program.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "swlim/perm.hpp"

namespace swlim {

using BigInt = boost::multiprecision::cpp_int;

// T(n,k) = ((n-k+1)/(n+1)) C(n+k,n); 0 outside 0 <= k <= n. OEIS A009766.
BigInt catalan_triangle(int n, int k);
BigInt catalan_number(int n);

// |B(n,r)|: 213-avoiders of length n with initial increasing run r.
BigInt class_size_B(int n, int r);
// |A(n,k)|: 132-avoiders of length n with k short values (non-RL-maxima).
BigInt class_size_A(int n, int k);
// The defining Catalan-convolution recurrence for |A(n,k)|; base convention
// |A(0,k)| = 1 for every k >= 0 (required to make the diagonal work).
BigInt class_size_A_recurrence(int n, int k);

// |C(n,S)|: 312-avoiders of length n with descent set S (bitmask over 1..n-1).
// Left-to-right DP: a sub-maximum placement is forced & always a descent; a
// new-maximum placement skips j pending values & is always an ascent.
BigInt class_size_C(int n, std::uint32_t descent_bits);

}  // namespace swlim
