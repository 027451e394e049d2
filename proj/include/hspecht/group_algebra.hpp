#ifndef HSPECHT_GROUP_ALGEBRA_HPP
#define HSPECHT_GROUP_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "hspecht/combinatorics.hpp"
#include "hspecht/common.hpp"
#include "hspecht/permutation.hpp"
#include "hspecht/polynomial.hpp"

namespace hspecht {

/// Finite rational combination of block-preserving permutations, an element
/// of Q[S_{n_1} x ... x S_{n_r}].
class GroupAlgebraElement {
 public:
  using Support = std::map<Permutation, Rational>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(BlockStructure block) : block_(std::move(block)) {}

  static GroupAlgebraElement identity(const BlockStructure& block);

  const BlockStructure& block() const { return block_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  Rational coefficient(const Permutation& p) const;

  /// Adds c * p; throws InvalidInput if p does not preserve the blocks.
  void add(const Permutation& p, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& c);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
  /// Convolution: (sum a_g g)(sum b_h h) = sum a_g b_h (g * h).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  BlockStructure block_;
  Support support_;
};

/// e = (f^shape / m!) * sum over sigma in R(t), tau in C(t) of sgn(tau) tau*sigma,
/// where m = |t| and tau*sigma applies sigma first. `t` must be standard with
/// all entries inside one block of `block`.
GroupAlgebraElement young_symmetrizer(const Tableau& t, const BlockStructure& block);

/// e_T = e_{T^1} ... e_{T^r} for a natural standard multi-tableau.
GroupAlgebraElement product_symmetrizer(const MultiTableau& t);

/// sum_sigma coeff(sigma) * permute(sigma, f).
Polynomial apply_element(const GroupAlgebraElement& a, const Polynomial& f);

struct IdempotentReport {
  BlockStructure block;
  std::vector<MultiTableau> tableaux;   // all natural standard tableaux, diagram order
  std::vector<bool> idempotent;         // e_T * e_T == e_T, per tableau
  bool sums_to_identity = false;        // sum of all e_T == 1
  std::vector<std::vector<bool>> product_nonzero;  // [a][b]: e_{T_a} * e_{T_b} != 0
  GroupAlgebraElement sum;
};

/// Throws BoundExceeded when the group order exceeds `max_group_order`.
IdempotentReport idempotent_report(const BlockStructure& block, long long max_group_order = 720);

std::string to_string(const GroupAlgebraElement& a);

}  // namespace hspecht

#endif
