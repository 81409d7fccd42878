#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/laurent.hpp"
#include "hecke/scalar.hpp"

using namespace hecke;

namespace {

Scalar rnd_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  return Scalar(num(rng), den(rng));
}

}  // namespace

TEST_CASE("scalar basics and serialization") {
  CHECK(Scalar(6, 4) == Scalar(3, 2));
  CHECK(Scalar(-5, 3).str() == "-5/3");
  CHECK(Scalar(5, -3).str() == "-5/3");  // denominator kept positive
  CHECK(Scalar(7).str() == "7");
  CHECK(Scalar::parse("-5/3") == Scalar(-5, 3));
  CHECK(Scalar::parse("42") == Scalar(42));
  CHECK(Scalar(2).pow(-3) == Scalar(1, 8));
  CHECK(Scalar(3, 2).inverse() == Scalar(2, 3));
  CHECK_THROWS(Scalar(0).inverse());
  Scalar r;
  CHECK(Scalar(9, 4).rational_sqrt(&r));
  CHECK(r == Scalar(3, 2));
  CHECK_FALSE(Scalar(2).rational_sqrt(nullptr));
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(0xB00B5);
  for (int t = 0; t < 200; ++t) {
    Scalar a = rnd_scalar(rng), b = rnd_scalar(rng), c = rnd_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("laurent arithmetic: inverse pair and distributivity") {
  // X_1 * X_1^{-1} = 1 (slot 1 of a rank-2 lattice)
  LaurentPoly x1 = LaurentPoly::monomial(Weight({0, 1}), Scalar(1));
  LaurentPoly x1inv = LaurentPoly::monomial(Weight({0, -1}), Scalar(1));
  CHECK(x1 * x1inv == LaurentPoly::constant(2, Scalar(1)));

  // (X_1+1)(X_2+1) = X_1X_2 + X_1 + X_2 + 1 over a rank-3 lattice
  LaurentPoly f(3), g(3);
  f.add_term(Weight({0, 1, 0}), Scalar(1));
  f.add_term(Weight(3), Scalar(1));
  g.add_term(Weight({0, 0, 1}), Scalar(1));
  g.add_term(Weight(3), Scalar(1));
  LaurentPoly expect(3);
  expect.add_term(Weight({0, 1, 1}), Scalar(1));
  expect.add_term(Weight({0, 1, 0}), Scalar(1));
  expect.add_term(Weight({0, 0, 1}), Scalar(1));
  expect.add_term(Weight(3), Scalar(1));
  CHECK(f * g == expect);
}

TEST_CASE("laurent product: hand expansion frozen") {
  // (X_0^2 X_1 X_2 - mu) * X_0 = X_0^3 X_1 X_2 - mu X_0, mu = 5
  LaurentPoly f(3);
  f.add_term(Weight({2, 1, 1}), Scalar(1));
  f.add_term(Weight(3), Scalar(-5));
  LaurentPoly x0 = LaurentPoly::monomial(Weight({1, 0, 0}), Scalar(1));
  LaurentPoly prod = f * x0;
  LaurentPoly expect(3);
  expect.add_term(Weight({3, 1, 1}), Scalar(1));
  expect.add_term(Weight({1, 0, 0}), Scalar(-5));
  CHECK(prod == expect);

  // cross-check by evaluation at random points
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    std::vector<Scalar> pt;
    std::uniform_int_distribution<long> num(1, 9);
    for (int i = 0; i < 3; ++i) pt.push_back(Scalar(num(rng), num(rng)));
    CHECK(prod.eval(pt) == f.eval(pt) * x0.eval(pt));
  }
}

TEST_CASE("laurent evaluation") {
  LaurentPoly f = LaurentPoly::monomial(Weight({1, 1}), Scalar(1));
  CHECK(f.eval({Scalar(2), Scalar(3)}) == Scalar(6));
  LaurentPoly g = LaurentPoly::monomial(Weight({0, -1}), Scalar(1));
  CHECK(g.eval({Scalar(2), Scalar(3)}) == Scalar(1, 3));
  CHECK_THROWS(g.eval({Scalar(2), Scalar(0)}));

  // X_0^2 X_1 X_2 at (5,7,7) = 25*49
  LaurentPoly h = LaurentPoly::monomial(Weight({2, 1, 1}), Scalar(1));
  CHECK(h.eval({Scalar(5), Scalar(7), Scalar(7)}) == Scalar(1225));
}

TEST_CASE("evaluation is a ring homomorphism on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> exp(-3, 3);
  std::uniform_int_distribution<long> num(1, 7);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly f(2), g(2);
    for (int k = 0; k < 3; ++k) {
      f.add_term(Weight({(int)exp(rng), (int)exp(rng)}), rnd_scalar(rng));
      g.add_term(Weight({(int)exp(rng), (int)exp(rng)}), rnd_scalar(rng));
    }
    std::vector<Scalar> pt{Scalar(num(rng)), Scalar(num(rng))};
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
    CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
  }
}

namespace {
Scalar rnd_scalar_reuse(std::mt19937_64& rng) { return rnd_scalar(rng); }
}  // namespace

TEST_CASE("rnd helper sanity") {
  std::mt19937_64 rng(1);
  CHECK_FALSE(rnd_scalar_reuse(rng).den().get_str().empty());
}
