#ifndef HSPECHT_SPECHT_HPP
#define HSPECHT_SPECHT_HPP

#include <map>
#include <string>
#include <vector>

#include "hspecht/combinatorics.hpp"
#include "hspecht/group_algebra.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/polynomial.hpp"

namespace hspecht {

/// (diagram, T, S) naming one higher Specht polynomial F_T^S.
struct HigherSpechtKey {
  MultiDiagram diagram;
  MultiTableau T;
  MultiTableau S;

  friend bool operator==(const HigherSpechtKey&, const HigherSpechtKey&) = default;
  friend auto operator<=>(const HigherSpechtKey&, const HigherSpechtKey&) = default;
};

/// "lambda=[2,1]|[1];T=[[1,2],[3]]|[[4]];S=..." -- enough to rebuild the key.
std::string to_string(const HigherSpechtKey& key);

/// Whole-word index (the index tableau of S read over all components) or the
/// per-component index used for higher Specht generators.
enum class IndexMode { global, per_block };

/// x_T^{i(S)}: the box of T holding k carries the exponent written in the
/// same box of the index tableau of S.
Polynomial specht_monomial(const MultiTableau& T, const MultiTableau& S, IndexMode mode = IndexMode::global);

/// F_T^S = e_T(x_T^{i(S)}) with per-block indices. T must be natural
/// standard and S a block-respecting (natural) standard tableau of the same shape.
Polynomial higher_specht(const MultiTableau& T, const MultiTableau& S);
Polynomial higher_specht(const HigherSpechtKey& key);

/// The factor e_{T^i}(x_{T^i}^{i(S^i)}) of block i, as a polynomial in all n variables.
Polynomial higher_specht_block(const MultiTableau& T, const MultiTableau& S, int block);

/// F_T := F_T^{S_0} with S_0 the canonical tableau of T's shape.
Polynomial specht_generator(const MultiTableau& T);

/// Product over every column of prod_{a above b} (x_b - x_a).
Polynomial classical_specht(const MultiTableau& T);

/// c with higher_specht(T, S_0) == c * classical_specht(T).
/// Throws Falsification when the two are not proportional.
Rational proportionality_constant(const MultiTableau& T);

/// Every key (lambda, T in NST, S block-respecting of the same shape).
std::vector<HigherSpechtKey> enumerate_keys(const BlockStructure& block);

struct RepresentationBasis {
  MultiDiagram diagram;
  MultiTableau S;
  std::vector<MultiTableau> T;
  std::vector<Polynomial> vectors;
};

/// {F_T^S : T in NST(diagram)}, checked for independence, closure under the
/// block group generators and dimension prod f^{lambda^i}.
/// Throws Falsification on any failure.
RepresentationBasis module_basis(const MultiDiagram& diagram, const MultiTableau& S);

/// Matrix of each permutation in the basis: sigma v_j = sum_i M(i, j) v_i.
/// Throws Falsification if some image leaves the span.
std::vector<RationalMatrix> representation_matrices(std::span<const Polynomial> basis,
                                                    std::span<const Permutation> perms);
std::vector<RationalMatrix> representation_matrices(const RepresentationBasis& basis,
                                                    std::span<const Permutation> perms);

/// Character values over `group` (trace of each representation matrix).
std::vector<Rational> character(std::span<const Polynomial> basis, std::span<const Permutation> group);

/// (1/|G|) sum_g chi(g) psi(g^{-1}); characters indexed like `group`.
Rational character_inner_product(std::span<const Rational> chi, std::span<const Rational> psi,
                                 std::span<const Permutation> group);

/// <chi, chi> over the full block group, computed from the span of `basis`
/// (which must be stable under the group).
Rational character_norm(std::span<const Polynomial> basis, const BlockStructure& block,
                        long long max_group_order = 720);

/// True iff <chi, chi> == 1 exactly. Throws BoundExceeded past the group-order bound.
bool irreducibility_check(const RepresentationBasis& basis, long long max_group_order = 720);
bool irreducibility_check(std::span<const Polynomial> basis, const BlockStructure& block,
                          long long max_group_order = 720);

struct BlockFactor {
  int block;
  Tableau T;
  Tableau S;
  Polynomial polynomial;
};

/// Splits F_T^S into its per-block factors and checks that their product is F_T^S.
/// Throws Falsification if the product identity fails.
std::vector<BlockFactor> identify_tensor(const HigherSpechtKey& key);

}  // namespace hspecht

#endif
