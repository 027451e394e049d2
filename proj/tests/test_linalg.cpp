#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "hspecht/linalg.hpp"

using namespace hspecht;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int density_percent) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), coin(0, 99);
  RationalMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density_percent) a(r, c) = fraction(num(rng), den(rng));
  return a;
}

oracle::Dense dense(const RationalMatrix& a) {
  oracle::Dense out(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c);
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank matches plain Gaussian elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 7);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 7) % 6);
    auto a = random_matrix(rows, cols, rng, trial % 2 ? 35 : 80);
    if (trial % 5 == 0 && cols > 1) {
      // Force a dependent column.
      for (std::size_t r = 0; r < rows; ++r) a(r, cols - 1) = a(r, 0) * Rational(3, 2);
    }
    CAPTURE(trial);
    CHECK(rank(a) == oracle::rank(dense(a)));
    CHECK(ExactSolver(a, false).rank() == oracle::rank(dense(a)));
  }
}

TEST_CASE("solutions agree with the oracle") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 2 + static_cast<std::size_t>(trial % 6);
    const std::size_t cols = 1 + static_cast<std::size_t>(trial % 4);
    const auto a = random_matrix(rows, cols, rng, 60);
    std::vector<Rational> b(rows);
    if (trial % 2 == 0) {
      std::vector<Rational> x(cols);
      for (auto& v : x) v = fraction(num(rng), 3);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b[r] += a(r, c) * x[c];
    } else {
      for (auto& v : b) v = num(rng);
    }
    const ExactSolver solver(a);
    const auto got = solver.solve(b);
    const auto want = oracle::solve(dense(a), std::vector<mpq_class>(b.begin(), b.end()));
    CAPTURE(trial);
    REQUIRE(got.has_value() == want.has_value());
    if (!got) continue;
    for (std::size_t r = 0; r < rows; ++r) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < cols; ++c) lhs += a(r, c) * (*got)[c];
      CHECK(lhs == b[r]);
    }
    if (solver.full_column_rank()) {
      for (std::size_t c = 0; c < cols; ++c) CHECK((*got)[c] == (*want)[c]);
    }
  }
}

TEST_CASE("degenerate shapes") {
  CHECK(rank(RationalMatrix(3, 0)) == 0);
  CHECK(rank(RationalMatrix(0, 3)) == 0);
  RationalMatrix zero(2, 2);
  const ExactSolver s(zero);
  CHECK(s.rank() == 0);
  CHECK(s.solve(std::vector<Rational>{0, 0}).has_value());
  CHECK_FALSE(s.solve(std::vector<Rational>{1, 0}).has_value());
}

TEST_CASE("polynomial spans") {
  const auto f = parse_polynomial("x1 + x2", 2);
  const auto g = parse_polynomial("x1 - x2", 2);
  const PolynomialSpan span({f, g});
  CHECK(span.independent());
  const auto c = span.coordinates(parse_polynomial("x1", 2));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(1, 2));
  CHECK((*c)[1] == Rational(1, 2));
  CHECK_FALSE(span.contains(parse_polynomial("x1^2", 2)));
  const std::vector<Polynomial> dependent{f, g, f + g * Rational(2)};
  CHECK(polynomial_rank(dependent) == 2);
  CHECK_FALSE(PolynomialSpan(dependent).independent());
}

}
