#ifndef HSPECHT_PERMUTATION_HPP
#define HSPECHT_PERMUTATION_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace hspecht {

class BlockStructure;

/// A bijection of {1..n} in one-line notation: images()[k] = sigma(k+1).
///
/// Composition is ordinary function composition, (a * b)(k) = a(b(k)), which
/// makes the substitution action on polynomials a left action.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Transposition of a and b (1-based) on {1..n}.
  static Permutation transposition(int n, int a, int b);
  /// Cycle a_1 -> a_2 -> ... -> a_k -> a_1 on {1..n}.
  static Permutation cycle(int n, std::span<const int> points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int sign() const;

  /// True iff every block range of `block` is mapped to itself.
  bool preserves(const BlockStructure& block) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// One-line image notation, e.g. "[2,1,3]".
std::string to_string(const Permutation& p);
Permutation parse_permutation(const std::string& text);

/// All permutations of `points` (extended by the identity to {1..n}), identity first.
std::vector<Permutation> symmetric_group_on(int n, std::span<const int> points);

/// Every element of S_{n_1} x ... x S_{n_r}, sorted.
std::vector<Permutation> block_group_elements(const BlockStructure& block);

/// Adjacent transpositions inside each block; they generate the block group.
std::vector<Permutation> block_group_generators(const BlockStructure& block);

/// Product of factorials of the block sizes.
long long block_group_order(const BlockStructure& block);

}  // namespace hspecht

#endif
