#include "doctest.h"
#include "socenter/center.hpp"
#include "socenter/harish_chandra.hpp"

using namespace socenter;

namespace {

const UPoly kU2 = UPoly::monomial(2);

// (u^2 - H^2) prod_i (u^2 - T_i^2)
HPoly expected_gamma_C(int n) {
  const int r = (n - 2) / 2;
  HPoly out = HPoly::constant(r, kU2) - HPoly::variable(r, 0) * HPoly::variable(r, 0);
  for (int i = 1; i <= r; ++i)
    out = out * (HPoly::constant(r, kU2) - HPoly::variable(r, i) * HPoly::variable(r, i));
  return out;
}

}  // namespace

TEST_CASE("triangular basis invariants") {
  for (int n = 2; n <= 7; ++n) {
    const auto& tb = build_triangular(n);
    CHECK(static_cast<int>(tb.X.size()) == n - 2);
    CHECK(static_cast<int>(tb.T.size()) == (n - 2) / 2);
    CHECK(tb.change_of_basis.rank() == dimension(n));
    for (int i = 0; i < n - 2; ++i) {
      CHECK(commutator(tb.H, tb.X[i]) == tb.X[i]);
      CHECK(commutator(tb.H, tb.Xbar[i]) == -tb.Xbar[i]);
    }
    for (std::size_t k = 0; k < tb.U_pos.size(); ++k) {
      for (std::size_t i = 0; i < tb.T.size(); ++i) {
        CHECK(commutator(tb.T[i], tb.U_pos[k]) == tb.U_pos[k] * UPoly(tb.pos_weights[k][i]));
        CHECK(commutator(tb.T[i], tb.U_neg[k]) == tb.U_neg[k] * UPoly(-tb.pos_weights[k][i]));
      }
      auto first = std::find_if(tb.pos_weights[k].begin(), tb.pos_weights[k].end(), [](int c) { return c != 0; });
      CHECK(*first > 0);
    }
    for (const auto& t : tb.T) CHECK(commutator(tb.H, t).is_zero());
  }
  CHECK(build_triangular(3).U_pos.empty());
  CHECK(build_triangular(4).U_pos.empty());
  CHECK(build_triangular(4).T[0] == gen(4, 2, 1) * UPoly(GaussianRational::i()));
  const auto& six = build_triangular(6);
  REQUIRE(six.pos_weights.size() == 2);
  CHECK(six.pos_weights[0] == std::vector<int>{1, 1});
  CHECK(six.pos_weights[1] == std::vector<int>{1, -1});
}

TEST_CASE("secondary expansions round trip") {
  Element c = build_C(5);
  const auto& tb = build_triangular(5);
  CHECK(tb.n_order->collapse(tb.n_order->expand(c, true)) == c);
  CHECK(tb.p_order->collapse(tb.p_order->expand(c, false)) == c);
  Element c3 = embed_shift(build_C(3), 3, 5);
  CHECK(tb.u_order->collapse(tb.u_order->expand(c3, true)) == c3);
}

TEST_CASE("discarded parts lie in the ideals") {
  for (int n = 3; n <= 5; ++n) {
    Element c = build_C(n);
    const auto& tb = build_triangular(n);
    const auto& b = *tb.n_order;
    Terms full = b.expand(c, true);
    Terms kept, dropped;
    for (const auto& t : full)
      (t.first.contains_letter_in(1, n - 2) || t.first.contains_letter_in(n + dimension(n - 2), dimension(n))
           ? dropped
           : kept)
          .push_back(t);
    // Every dropped monomial starts with an X letter or ends with an Xbar letter.
    for (const auto& [m, coef] : dropped)
      CHECK((m.front() <= n - 2 || m.back() >= n + dimension(n - 2)));
    CHECK(b.collapse(kept) + b.collapse(dropped) == c);
  }
}

TEST_CASE("simple projections") {
  for (int n = 3; n <= 5; ++n) {
    const auto& tb = build_triangular(n);
    CHECK(gamma_n(Element::one(n)) == Element::one(n));
    CHECK(gamma_n(tb.X[0]).is_zero());
    CHECK(projection_p(multiply(tb.X[0], tb.H)).parts.empty());
    auto p = projection_p(gen(n, 2, 1));
    REQUIRE(p.parts.size() == 1);
    CHECK(p.parts.at(0) == gen(n, 2, 1));
    CHECK(gamma(Element::one(n)) == HPoly::constant((n - 2) / 2, 1));
  }
  for (int n = 4; n <= 7; ++n) {
    const auto& tb = build_triangular(n);
    const int r = (n - 2) / 2;
    CHECK(gamma_u(tb.T[0]) == HPoly::variable(r, 1) + HPoly::constant(r, UPoly(GaussianRational::fraction(n - 4, 2))));
    for (const auto& u : tb.U_pos) CHECK(gamma_u(u).is_zero());
  }
  CHECK_THROWS_AS(gamma_u(gen(4, 3, 1)), std::invalid_argument);
}

TEST_CASE("images of C_n") {
  for (int n = 2; n <= 7; ++n) {
    Element c = build_C(n);
    Element gn = gamma_n(c);
    Element expect = multiply(Element::one(n) * kU2 + multiply(gen(n, n, n - 1), gen(n, n, n - 1)),
                              embed_shift(build_C(n - 2), n - 2, n));
    CHECK_MESSAGE(gn == expect, "n=" << n);
    HPoly g = gamma_u(gn);
    CHECK_MESSAGE(g == expected_gamma_C(n), "n=" << n << " got " << g.str());
  }
}

TEST_CASE("gamma_u of C_{n-2}") {
  for (int n = 4; n <= 7; ++n) {
    const int r = (n - 2) / 2;
    HPoly expect = HPoly::constant(r, 1);
    for (int i = 1; i <= r; ++i)
      expect = expect * (HPoly::constant(r, kU2) - HPoly::variable(r, i) * HPoly::variable(r, i));
    Element c = embed_shift(build_C(n - 2), n - 2, n);
    CHECK(gamma_u(c) == expect);
    CHECK(gamma_u(opp(c)) == gamma_u(c));
  }
}

TEST_CASE("Weyl invariance and multiplicativity") {
  for (int n = 3; n <= 6; ++n) {
    HPoly g = gamma(build_C(n));
    const int r = (n - 2) / 2;
    for (int k = 0; k <= r; ++k) CHECK(g.negated_var(k) == g);
    for (int a = 1; a <= r; ++a)
      for (int b = a + 1; b <= r; ++b) CHECK(g.swapped(a, b) == g);
  }
  for (int n = 3; n <= 5; ++n) {
    Element c = build_C(n);
    GaussianRational u1 = GaussianRational::fraction(1, 3), u2(2, 1);
    Element prod = multiply(specialize(c, u1), specialize(c, u2));
    HPoly g = gamma(c);
    CHECK(gamma(prod) == g.specialize(u1) * g.specialize(u2));
  }
}

TEST_CASE("projection p and the rho shift") {
  for (int n = 3; n <= 6; ++n) {
    Element c = build_C(n);
    PProjection p = projection_p(c);
    PProjection shifted = p.rho_shifted(GaussianRational::fraction(n - 2, 2)).restricted_to_m();
    CHECK(shifted.to_element() == gamma_n(c));
  }
}

TEST_CASE("Pfaffian images") {
  GaussianRational minus_i = -GaussianRational::i();
  GaussianRational scale = 1;
  for (int m = 1; m <= 3; ++m) {
    scale *= minus_i;
    const int r = m - 1;
    std::vector<int> exps(r + 1, 1);
    HPoly expect(r);
    expect.add_term(exps, UPoly(scale));
    CHECK_MESSAGE(gamma(build_PF(m)) == expect, "m=" << m << " got " << gamma(build_PF(m)).str());
  }
}
