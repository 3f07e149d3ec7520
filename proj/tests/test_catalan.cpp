#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "swlim/catalan.hpp"

using namespace swlim;

TEST_CASE("catalan triangle values") {
  CHECK(catalan_triangle(0, 0) == 1);
  CHECK(catalan_triangle(4, 2) == 9);
  CHECK(catalan_triangle(4, 4) == 14);
  CHECK(catalan_triangle(3, -1) == 0);
  CHECK(catalan_triangle(3, 4) == 0);
  for (int n = 0; n <= 20; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(catalan_triangle(n, k) ==
            catalan_triangle(n, k - 1) + catalan_triangle(n - 1, k));
}

TEST_CASE("catalan numbers") {
  BigInt want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n) CHECK(catalan_number(n) == want[n]);
}

TEST_CASE("class sizes partition the Catalan number") {
  for (int n = 1; n <= 12; ++n) {
    BigInt sb = 0, sa = 0;
    for (int r = 1; r <= n; ++r) sb += class_size_B(n, r);
    for (int k = 0; k <= n - 1; ++k) sa += class_size_A(n, k);
    CHECK(sb == catalan_number(n));
    CHECK(sa == catalan_number(n));
  }
}

TEST_CASE("class_size_B matches brute enumeration of 213-avoiders") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, BigInt> cnt;
    for (auto& p : enumerate_avoiders({2, 1, 3}, n)) ++cnt[initial_run_length(p)];
    for (int r = 1; r <= n; ++r) {
      BigInt want = cnt.count(r) ? cnt[r] : 0;
      CHECK(class_size_B(n, r) == want);
    }
  }
}

TEST_CASE("class_size_A matches brute enumeration of 132-avoiders") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, BigInt> cnt;
    for (auto& p : enumerate_avoiders({1, 3, 2}, n)) ++cnt[short_count(p)];
    for (int k = 0; k <= n - 1; ++k) {
      BigInt want = cnt.count(k) ? cnt[k] : 0;
      CHECK(class_size_A(n, k) == want);
    }
  }
}

TEST_CASE("A recurrence equals the closed form up to n = 40") {
  for (int n = 1; n <= 40; ++n)
    for (int k = 0; k <= n - 1; ++k)
      CHECK(class_size_A_recurrence(n, k) == class_size_A(n, k));
}

TEST_CASE("descent-set class sizes partition the Catalan number") {
  for (int n = 1; n <= 12; ++n) {
    BigInt s = 0;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
      s += class_size_C(n, mask);
    CHECK(s == catalan_number(n));
  }
}

TEST_CASE("descent-set class sizes match brute enumeration") {
  for (int n = 1; n <= 8; ++n) {
    std::map<std::uint32_t, BigInt> cnt;
    for (auto& p : enumerate_avoiders({3, 1, 2}, n)) ++cnt[descent_mask(p)];
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      BigInt want = cnt.count(mask) ? cnt[mask] : 0;
      CHECK(class_size_C(n, mask) == want);
    }
  }
}
