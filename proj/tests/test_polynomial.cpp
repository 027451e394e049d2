#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "hspecht/permutation.hpp"
#include "hspecht/polynomial.hpp"

using namespace hspecht;

TEST_SUITE("polynomial") {

TEST_CASE("text form round trips") {
  const auto f = parse_polynomial("-3/2*x1^2*x2 + x3", 3);
  CHECK(to_string(f) == "-3/2*x1^2*x2 + x3");
  CHECK(to_string(parse_polynomial("x3 + 2 - x1*x1", 3)) == "-x1^2 + x3 + 2");
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(f.degree() == 3);
  CHECK(max_variable_index("x1*d4 + x2") == 4);
  CHECK_THROWS_WITH_AS(parse_polynomial("x1 + y2", 2), doctest::Contains("'y"), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("x3", 2), InvalidInput);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_polynomial(3, 3, 4, rng);
    const auto b = random_polynomial(3, 3, 4, rng);
    const auto c = random_polynomial(3, 2, 3, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(3));
    CHECK(oracle::same(oracle::multiply(oracle::from(a), oracle::from(b)), a * b));
  }
}

TEST_CASE("permutation action is a left action") {
  std::mt19937_64 rng(11);
  const auto group = symmetric_group_on(4, std::vector<int>{1, 2, 3, 4});
  for (int k = 0; k < 10; ++k) {
    const auto f = random_polynomial(4, 3, 4, rng);
    const auto& s = group[static_cast<std::size_t>(k * 5 % 24)];
    const auto& t = group[static_cast<std::size_t>(k * 7 % 24)];
    CHECK(permute(s, permute(t, f)) == permute(s * t, f));
    CHECK(oracle::same(oracle::act(s.images(), oracle::from(f)), permute(s, f)));
  }
  const auto x1 = Polynomial::variable(3, 1);
  CHECK(permute(Permutation({2, 3, 1}), x1) == Polynomial::variable(3, 2));
}

TEST_CASE("exact division") {
  const auto x1 = Polynomial::variable(2, 1);
  const auto x2 = Polynomial::variable(2, 2);
  const auto q = exact_divide(x2 * x2 - x1 * x1, x2 - x1);
  REQUIRE(q.has_value());
  CHECK(*q == x1 + x2);
  CHECK_FALSE(exact_divide(x2 * x2 + x1, x2 - x1).has_value());
  CHECK_THROWS_AS(exact_divide(x1, Polynomial(2)), InvalidInput);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_polynomial(3, 2, 3, rng);
    const auto b = random_polynomial(3, 2, 3, rng);
    if (b.is_zero()) continue;
    const auto r = exact_divide(a * b, b);
    REQUIRE(r.has_value());
    CHECK(*r == a);
  }
}

TEST_CASE("invariance agrees with the group average") {
  const BlockStructure block({2, 1});
  const auto group = block_group_elements(block);
  const auto gens = block_group_generators(block);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_polynomial(3, 3, 4, rng);
    const auto avg = group_average(f, group);
    CHECK(is_invariant(avg, gens));
    CHECK(is_invariant(f, gens) == (avg == f));
  }
  CHECK(is_invariant(vandermonde(block) * vandermonde(block), gens));
  CHECK_FALSE(is_invariant(vandermonde(block), gens));
}

TEST_CASE("symmetric functions") {
  const std::vector<int> vars{1, 2, 3};
  for (int k = 0; k <= 3; ++k) CHECK(oracle::same(oracle::elementary(3, vars, k), elementary_symmetric(3, vars, k)));
  CHECK(to_string(vandermonde(BlockStructure({2}))) == "x1 - x2");
}

TEST_CASE("evaluation and derivatives") {
  const auto f = parse_polynomial("x1^2*x2 + 1/2*x2", 2);
  CHECK(f.evaluate(std::vector<Rational>{2, 3}) == Rational(27, 2));
  CHECK(to_string(f.derivative(1)) == "2*x1*x2");
  CHECK(to_string(f.homogeneous_part(1)) == "1/2*x2");
}

}
