#include "doctest.h"
#include "socenter/center.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace socenter;

TEST_CASE("low rank closed forms") {
  // u^2 + A_{2,1}^2
  Element c2 = build_C(2);
  CHECK(c2 == Element::one(2) * UPoly::monomial(2) + multiply(gen(2, 2, 1), gen(2, 2, 1)));
  // u^2 - 1/4 + Omega_3, derived by hand from the recursion
  Element c3 = build_C(3);
  Element expect = Element::one(3) * (UPoly::monomial(2) - UPoly(GaussianRational::fraction(1, 4))) +
                   casimir_omega(3, 3);
  CHECK(c3 == expect);
}

TEST_CASE("centrality and monicity up to rank 5") {
  for (int n = 2; n <= 5; ++n) {
    Element c = build_C(n);
    auto rep = is_central(c, 1);
    CHECK_MESSAGE(rep.central, "n=" << n);
    CHECK(monic_degree_check(c, n));
  }
}

TEST_CASE("pfaffians") {
  CHECK(build_PF(1) == gen(2, 2, 1));
  for (int m = 1; m <= 3; ++m) {
    CHECK(is_central(build_PF(m), 1).central);
    CHECK(iwasawa_pf_check(m).ok);
  }
  CHECK_FALSE(is_central(build_pf({3, 1}, 3), 1).central);
}

TEST_CASE("pfaffian permutation sign law") {
  CHECK(build_pf({2, 1}, 2) == gen(2, 2, 1));
  CHECK(build_pf({1, 2}, 2) == -gen(2, 2, 1));
  CHECK(build_pf({3, 2, 1, 4}, 4) == -build_pf({4, 3, 2, 1}, 4));
  std::mt19937 rng(7);
  for (int size : {2, 4, 6}) {
    const int n = 6;
    for (int s = 0; s < 20; ++s) {
      std::vector<int> pool(n);
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> idx(pool.begin(), pool.begin() + size);
      std::vector<int> sorted = idx;
      std::sort(sorted.rbegin(), sorted.rend());
      // inversion count against the descending order
      int inv = 0;
      for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) inv += idx[a] < idx[b];
      Element expect = build_pf(sorted, n);
      if (inv % 2) expect = -expect;
      CHECK(build_pf(idx, n) == expect);
    }
  }
  CHECK_THROWS(build_pf({2, 2}, 3));
  CHECK_THROWS(build_pf({1, 2, 3}, 3));
}
