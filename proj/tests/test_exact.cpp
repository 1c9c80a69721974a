#include <random>

#include "doctest.h"
#include "socenter/exact.hpp"

using socenter::ExactMatrix;
using socenter::GaussianRational;
using socenter::UPoly;

namespace {

GaussianRational random_gr(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("gaussian rational field axioms") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_gr(rng), b = random_gr(rng), c = random_gr(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GaussianRational(0));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(GaussianRational::fraction(2, 4) == GaussianRational::fraction(-1, -2));
}

TEST_CASE("string round trip") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = random_gr(rng);
    CHECK(GaussianRational::from_strings(a.to_strings()) == a);
  }
  CHECK(GaussianRational(1, 1).str() == "(1+i)");
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    UPoly p, q;
    for (int k = 0; k < 4; ++k) {
      p += UPoly::monomial(k, random_gr(rng));
      q += UPoly::monomial(k, random_gr(rng));
    }
    auto z = random_gr(rng);
    CHECK((p * q).eval(z) == p.eval(z) * q.eval(z));
    CHECK((p + q).eval(z) == p.eval(z) + q.eval(z));
    CHECK((p - p).is_zero());
  }
  UPoly u2 = UPoly::monomial(2) - UPoly(1);
  CHECK(u2.degree() == 2);
  CHECK(u2.eval(GaussianRational(1)).is_zero());
}

TEST_CASE("exact matrix inverse and nullspace") {
  std::mt19937 rng(5);
  ExactMatrix m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = random_gr(rng);
  if (m.rank() == 3) CHECK(m * m.inverse() == ExactMatrix::identity(3));

  ExactMatrix s(2, 3);
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
  s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  CHECK(s.rank() == 1);
  auto ns = s.nullspace();
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    GaussianRational dot = s(0, 0) * v[0] + s(0, 1) * v[1] + s(0, 2) * v[2];
    CHECK(dot.is_zero());
  }
  CHECK_THROWS_AS(s.inverse(), std::domain_error);
}
