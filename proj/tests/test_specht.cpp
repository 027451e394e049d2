#include "doctest.h"
#include "oracles.hpp"

#include "hspecht/specht.hpp"

using namespace hspecht;

namespace {

std::vector<oracle::Grid> grids(const MultiTableau& t) {
  std::vector<oracle::Grid> out;
  for (const auto& c : t.components) out.push_back(c.rows());
  return out;
}

int index_sum(const IndexTableau& index) {
  int total = 0;
  for (const auto& g : index.components)
    for (const auto& row : g)
      for (int v : row) total += v;
  return total;
}

}  // namespace

TEST_SUITE("specht") {

TEST_CASE("small higher Specht polynomials") {
  const BlockStructure two({2});
  const auto d = parse_diagram("[1,1]", two);
  const auto t = canonical_tableau(d);
  CHECK(to_string(higher_specht(t, t)) == "-1/2*x1 + 1/2*x2");
  CHECK(to_string(higher_specht(canonical_tableau(parse_diagram("[2]", two)), canonical_tableau(parse_diagram("[2]", two)))) == "1");

  const BlockStructure three({3});
  const auto T = parse_multi_tableau("[[1,2],[3]]", three);
  const auto f = higher_specht(T, T);
  CHECK(f.degree() == 1);
  CHECK(oracle::same(oracle::higher_specht(grids(T), grids(T), 3), f));
}

TEST_CASE("every key agrees with direct summation") {
  for (const auto& sizes : std::vector<std::vector<int>>{{3}, {2, 1}, {2, 2}, {4}, {1, 3}, {2, 1, 1}}) {
    const BlockStructure block(sizes);
    for (const auto& key : enumerate_keys(block)) {
      CAPTURE(to_string(key));
      const auto f = higher_specht(key);
      CHECK(oracle::same(oracle::higher_specht(grids(key.T), grids(key.S), block.total()), f));
      CHECK(f.is_homogeneous());
      CHECK(f.degree() == index_sum(block_index_tableau(key.S)));
    }
  }
}

TEST_CASE("key counts equal the group order") {
  CHECK(enumerate_keys(BlockStructure({3})).size() == 6);
  CHECK(enumerate_keys(BlockStructure({3, 2})).size() == 12);
  CHECK(enumerate_keys(BlockStructure({2, 2, 1})).size() == 4);
}

TEST_CASE("classical Specht polynomials are proportional") {
  const BlockStructure block({3, 2});
  for (const auto& d : enumerate_r_diagrams(block)) {
    for (const auto& T : enumerate_NST(d)) {
      CAPTURE(to_string(T));
      const Rational c = proportionality_constant(T);
      CHECK(c != 0);
      CHECK(specht_generator(T) == classical_specht(T) * c);
    }
  }
  const auto T = parse_multi_tableau("[[1],[2]]", BlockStructure({2}));
  CHECK(to_string(classical_specht(T)) == "-x1 + x2");
}

TEST_CASE("modules are irreducible of the expected dimension") {
  const BlockStructure block({4});
  for (const auto& d : enumerate_r_diagrams(block)) {
    for (const auto& S : enumerate_NST(d)) {
      const auto basis = module_basis(d, S);
      CHECK(static_cast<long long>(basis.vectors.size()) == count_standard(d.components[0]));
      CHECK(irreducibility_check(basis));
    }
  }
}

TEST_CASE("a doubled module has character norm 4") {
  const BlockStructure block({3});
  const auto d = parse_diagram("[2,1]", block);
  const auto nst = enumerate_NST(d);
  const auto a = module_basis(d, nst[0]);
  const auto b = module_basis(d, nst[1]);
  std::vector<Polynomial> both = a.vectors;
  both.insert(both.end(), b.vectors.begin(), b.vectors.end());
  CHECK(polynomial_rank(both) == 4);
  CHECK(character_norm(both, block) == 4);
  CHECK_FALSE(irreducibility_check(both, block));
}

TEST_CASE("characters of different shapes are orthogonal") {
  const BlockStructure block({2, 2});
  const auto group = block_group_elements(block);
  std::vector<std::vector<Rational>> chars;
  for (const auto& d : enumerate_r_diagrams(block)) chars.push_back(character(module_basis(d, canonical_tableau(d)).vectors, group));
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j)
      CHECK(character_inner_product(chars[i], chars[j], group) == (i == j ? 1 : 0));
}

TEST_CASE("tensor factors multiply back") {
  const BlockStructure block({2, 3});
  for (const auto& key : enumerate_keys(block)) {
    const auto factors = identify_tensor(key);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].polynomial * factors[1].polynomial == higher_specht(key));
  }
}

TEST_CASE("invalid keys are rejected") {
  const BlockStructure block({2, 1});
  const auto d = parse_diagram("[2]|[1]", block);
  const auto T = canonical_tableau(d);
  const auto other = canonical_tableau(parse_diagram("[1,1]|[1]", block));
  CHECK_THROWS_AS(higher_specht(T, other), InvalidInput);
  CHECK_THROWS_AS(higher_specht(parse_multi_tableau("[[1,3]]|[[2]]", block), T), InvalidInput);
}

}
