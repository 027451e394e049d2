#include "doctest.h"

#include <random>

#include "hspecht/weyl.hpp"

using namespace hspecht;

TEST_SUITE("weyl") {

TEST_CASE("applying operators") {
  CHECK(to_string(apply_operator(DifferentialOperator::partial(1, 1), parse_polynomial("x1^2", 1))) == "2*x1");
  const auto f = parse_polynomial("3*x1^2*x2 - x2^3", 2);
  CHECK(apply_operator(DifferentialOperator::euler(2), f) == f * Rational(3));
  const auto d = parse_operator("d1 + d2", 2);
  CHECK(apply_operator(d, parse_polynomial("-1/2*x1 + 1/2*x2", 2)).is_zero());
}

TEST_CASE("normal ordering respects the commutation relation") {
  const int n = 3;
  std::mt19937_64 rng(37);
  for (int j = 1; j <= n; ++j) {
    const auto dj = DifferentialOperator::partial(n, j);
    const auto xj = DifferentialOperator::multiplication(Polynomial::variable(n, j));
    CHECK(dj * xj - xj * dj == DifferentialOperator::identity(n));
  }
  CHECK(to_string(parse_operator("d1*x1", 1)) == "x1*d1 + 1");
  const auto d1 = DifferentialOperator::partial(2, 1);
  const auto x1 = DifferentialOperator::multiplication(Polynomial::variable(2, 1));
  for (int k = 0; k < 50; ++k) {
    const auto f = random_polynomial(2, 4, 4, rng);
    CHECK(apply_operator(d1 * x1 - x1 * d1, f) == f);
  }
}

TEST_CASE("composition matches successive application") {
  std::mt19937_64 rng(41);
  const auto a = parse_operator("x1^2*d2 + 3*d1^2", 2);
  const auto b = parse_operator("x2*d1*d2 - 1/2*x1", 2);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_polynomial(2, 4, 4, rng);
    CHECK(apply_operator(a * b, f) == apply_operator(a, apply_operator(b, f)));
  }
}

TEST_CASE("first-order operators satisfy the Leibniz rule") {
  std::mt19937_64 rng(43);
  const auto d = parse_operator("x1^2*d1 + x2^2*d2 - 2/3*x3*d3", 3);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_polynomial(3, 3, 3, rng);
    const auto g = random_polynomial(3, 3, 3, rng);
    CHECK(apply_operator(d, f * g) == apply_operator(d, f) * g + f * apply_operator(d, g));
    CHECK(apply_operator(d, f + g) == apply_operator(d, f) + apply_operator(d, g));
  }
}

TEST_CASE("conjugation relabels indices and is an action") {
  const auto s = Permutation::transposition(2, 1, 2);
  CHECK(conjugate_by_permutation(s, DifferentialOperator::partial(2, 1)) == DifferentialOperator::partial(2, 2));
  CHECK(to_string(conjugate_by_permutation(s, parse_operator("x1*d2", 2))) == "x2*d1");
  const auto group = symmetric_group_on(3, std::vector<int>{1, 2, 3});
  const auto op = parse_operator("x1^2*d2 + d3*x1", 3);
  for (const auto& a : group)
    for (const auto& b : group)
      CHECK(conjugate_by_permutation(a, conjugate_by_permutation(b, op)) == conjugate_by_permutation(a * b, op));
  const auto e = DifferentialOperator::euler(3);
  for (const auto& g : group) CHECK(conjugate_by_permutation(g, e) == e);
}

TEST_CASE("conjugation agrees with the action on polynomials") {
  std::mt19937_64 rng(47);
  const auto op = parse_operator("x1^2*d2 + x3*d1^2", 3);
  const auto sigma = Permutation({2, 3, 1});
  for (int k = 0; k < 10; ++k) {
    const auto f = random_polynomial(3, 3, 3, rng);
    CHECK(apply_operator(conjugate_by_permutation(sigma, op), permute(sigma, f)) == permute(sigma, apply_operator(op, f)));
  }
}

TEST_CASE("invariant derivations") {
  const BlockStructure block({2});
  CHECK(invariant_derivation(block, 0, 0) == parse_operator("d1 + d2", 2));
  CHECK(invariant_derivation(block, 0, 1) == DifferentialOperator::euler(2));
  const BlockStructure three({3, 1});
  const auto d = invariant_derivation(three, 0, 2);
  CHECK(to_string(d) == "x1^2*d1 + x2^2*d2 + x3^2*d3");
  CHECK(commutes_with_group(d, block_group_generators(three)));
  CHECK(commutes_with_group(DifferentialOperator::euler(3), block_group_generators(BlockStructure({3}))));
  CHECK_FALSE(commutes_with_group(DifferentialOperator::partial(2, 1), block_group_generators(block)));
  CHECK_THROWS_AS(invariant_derivation(block, 0, 9), BoundExceeded);
}

TEST_CASE("divisibility witnesses") {
  const BlockStructure block({2});
  const auto d = parse_diagram("[1,1]", block);
  const auto T = canonical_tableau(d);
  const HigherSpechtKey key{d, T, T};
  CHECK(divisibility_witness(parse_operator("d1 + d2", 2), key).zero_image);
  const auto w = divisibility_witness(parse_operator("x1^2*d1 + x2^2*d2", 2), key);
  CHECK_FALSE(w.zero_image);
  REQUIRE(w.quotient.has_value());
  CHECK(to_string(w.image) == "-1/2*x1^2 + 1/2*x2^2");
  CHECK(to_string(*w.quotient) == "1/2*x1 + 1/2*x2");
  CHECK_THROWS_AS(divisibility_witness(DifferentialOperator::partial(2, 1), key), InvalidInput);

  const BlockStructure three({3});
  for (const auto& k : enumerate_keys(three)) {
    const auto euler = divisibility_witness(DifferentialOperator::euler(3), k);
    CHECK(euler.zero_image == (higher_specht(k).degree() == 0));
    const auto id = divisibility_witness(DifferentialOperator::identity(3), k);
    REQUIRE(id.quotient.has_value());
    CHECK(*id.quotient * classical_specht(k.T) == higher_specht(k));
  }
}

TEST_CASE("image modules") {
  const BlockStructure block({3});
  const auto d = parse_diagram("[2,1]", block);
  const auto S = canonical_tableau(d);
  CHECK(image_module_check(DifferentialOperator::identity(3), d, S).status == CheckStatus::passed);
  CHECK(image_module_check(DifferentialOperator::euler(3), d, S).status == CheckStatus::passed);
  CHECK(image_module_check(parse_operator("d1 + d2 + d3", 3), d, S).status == CheckStatus::skipped);
  const BlockStructure two({2});
  const auto sign = parse_diagram("[1,1]", two);
  const auto report = image_module_check(parse_operator("x1^2*d1 + x2^2*d2", 2), sign, canonical_tableau(sign));
  CHECK(report.status == CheckStatus::passed);
  REQUIRE(report.images.size() == 1);
  CHECK(permute(Permutation::transposition(2, 1, 2), report.images[0]) == report.images[0] * Rational(-1));
}

TEST_CASE("operator text form") {
  CHECK(to_string(parse_operator("x1^2*d1 + x2^2*d2", 2)) == "x1^2*d1 + x2^2*d2");
  CHECK_THROWS_WITH_AS(parse_operator("x1*q2", 2), doctest::Contains("'q"), InvalidInput);
}

}
