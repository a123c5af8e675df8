#include <doctest.h>

#include <random>

#include "pearl/coeff_ring.hpp"
#include "pearl/errors.hpp"

using namespace pearl;

namespace {

LaurentElement random_element(std::mt19937_64& rng, int lo, int hi) {
  std::vector<int> e;
  for (int k = lo; k <= hi; ++k)
    if (rng() & 1U) e.push_back(k);
  return LaurentElement(e);
}

}  // namespace

TEST_CASE("addition is symmetric difference") {
  CHECK((LaurentElement{0} + LaurentElement{0}).is_zero());
  CHECK(LaurentElement{1} + LaurentElement{0} == LaurentElement{0, 1});
  CHECK(LaurentElement{} + LaurentElement{3} == LaurentElement{3});
}

TEST_CASE("multiplication is parity-reduced convolution") {
  CHECK(LaurentElement{1} * LaurentElement{2} == LaurentElement{3});
  CHECK(LaurentElement{0, 1} * LaurentElement{0, 1} == LaurentElement{0, 2});
  CHECK(LaurentElement{0} * LaurentElement{5} == LaurentElement{5});
  CHECK((LaurentElement{} * LaurentElement{5}).is_zero());
  CHECK(LaurentElement{-1, 2} * LaurentElement{1} == LaurentElement{0, 3});
}

TEST_CASE("constructor normalizes repeated exponents mod 2") {
  CHECK(LaurentElement(std::vector<int>{3, 1, 3, 3}) == LaurentElement{1, 3});
  CHECK(LaurentElement(std::vector<int>{2, 2}).is_zero());
}

TEST_CASE("printing") {
  CHECK(LaurentElement{}.str() == "0");
  CHECK(LaurentElement{0}.str() == "1");
  CHECK(LaurentElement{0, 1}.str() == "1 + t");
  CHECK(LaurentElement{-1, 2}.str('q') == "q^-1 + q^2");
}

TEST_CASE("ring elements check their ring") {
  const auto L2 = RingSpec::laurent(2);
  const auto L4 = RingSpec::laurent(4);
  const auto P2 = RingSpec::positive(2);
  CHECK(add(RingElement(L2, {0}), RingElement(L2, {1})).value() == LaurentElement{0, 1});
  CHECK_THROWS_AS(add(RingElement(L2, {0}), RingElement(L4, {0})), RingMismatch);
  CHECK_THROWS_AS(mul(RingElement(L2, {0}), RingElement(P2, {0})), RingMismatch);
  CHECK_THROWS_AS(RingElement(P2, {-1}), NotPositive);
  CHECK(mul(RingElement(P2, {0, 1}), RingElement(P2, {2})).value() == LaurentElement{2, 3});
  CHECK_THROWS_AS(RingSpec::laurent(0), InvalidData);
}

TEST_CASE("ambient ring only over even laurent rings") {
  CHECK(RingSpec::ambient_over(RingSpec::laurent(4)).generator_degree == 2);
  CHECK(RingSpec::ambient_over(RingSpec::laurent(4)).variable() == 'q');
  CHECK_THROWS_AS(RingSpec::ambient_over(RingSpec::laurent(3)), OddMaslovNumber);
  CHECK_THROWS_AS(RingSpec::ambient_over(RingSpec::positive(2)), RingMismatch);
}

TEST_CASE("t maps to q^(N/2)") {
  CHECK(to_ambient(LaurentElement{1}, 2) == LaurentElement{1});
  CHECK(to_ambient(LaurentElement{0}, 6) == LaurentElement{0});
  CHECK(to_ambient(LaurentElement{2}, 4) == LaurentElement{4});
  CHECK_THROWS_AS(to_ambient(LaurentElement{1}, 3), OddMaslovNumber);
  const auto a = to_ambient(RingElement(RingSpec::laurent(4), {1, -2}));
  CHECK(a.ring() == RingSpec::ambient_over(RingSpec::laurent(4)));
  CHECK(a.value() == LaurentElement{-4, 2});
}

TEST_CASE("sigma keeps the constant term") {
  CHECK(sigma_specialize(LaurentElement{0}));
  CHECK_FALSE(sigma_specialize(LaurentElement{1, 2}));
  CHECK_FALSE(sigma_specialize(LaurentElement{}));
  CHECK_THROWS_AS(sigma_specialize(LaurentElement{-1, 0}), NotPositive);
  CHECK(sigma_specialize(RingElement(RingSpec::positive(2), {0, 1})));
  CHECK_THROWS_AS(sigma_specialize(RingElement(RingSpec::ambient_over(RingSpec::laurent(2)), {0})), RingMismatch);
}

TEST_CASE("ring axioms and homomorphisms on random elements") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_element(rng, -4, 4);
    const auto b = random_element(rng, -4, 4);
    const auto c = random_element(rng, -4, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + a).is_zero());
    CHECK(a * LaurentElement::one() == a);
    for (int N : {2, 4, 6}) {
      CHECK(to_ambient(a * b, N) == to_ambient(a, N) * to_ambient(b, N));
      CHECK(to_ambient(a + b, N) == to_ambient(a, N) + to_ambient(b, N));
      // total degree is preserved: k·N = (k·N/2)·2
      for (int k : a.exponents()) CHECK(to_ambient(LaurentElement::monomial(k), N).min_exponent() * 2 == k * N);
    }
    const auto p = random_element(rng, 0, 5);
    const auto r = random_element(rng, 0, 5);
    CHECK(sigma_specialize(p * r) == (sigma_specialize(p) && sigma_specialize(r)));
    CHECK(sigma_specialize(p + r) == (sigma_specialize(p) != sigma_specialize(r)));
    CHECK(a.evaluate_at_one() == (a.term_count() % 2 == 1));
    CHECK((a * b).evaluate_at_one() == (a.evaluate_at_one() && b.evaluate_at_one()));
  }
}
