#ifndef HSPECHT_COMBINATORICS_HPP
#define HSPECHT_COMBINATORICS_HPP

#include <compare>
#include <string>
#include <vector>

#include "hspecht/permutation.hpp"

namespace hspecht {

/// Type vector (n_1, ..., n_r) of a product of symmetric groups.
///
/// Block i (0-based here) owns the consecutive entries
/// n_1 + ... + n_{i-1} + 1 through n_1 + ... + n_i.
class BlockStructure {
 public:
  BlockStructure() = default;
  explicit BlockStructure(std::vector<int> sizes);

  int count() const { return static_cast<int>(sizes_.size()); }
  int total() const { return total_; }
  int size(int block) const { return sizes_.at(static_cast<std::size_t>(block)); }
  const std::vector<int>& sizes() const { return sizes_; }

  int first(int block) const;
  int last(int block) const;
  std::vector<int> range(int block) const;
  /// Index of the block containing entry k (1-based entry).
  int block_of(int entry) const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
  friend auto operator<=>(const BlockStructure&, const BlockStructure&) = default;

 private:
  std::vector<int> sizes_;
  int total_ = 0;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int row) const { return parts_.at(static_cast<std::size_t>(row)); }
  const std::vector<int>& parts() const { return parts_; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// An r-tuple of partitions whose i-th component has size n_i.
struct MultiDiagram {
  BlockStructure block;
  std::vector<Partition> components;

  MultiDiagram() = default;
  MultiDiagram(BlockStructure block, std::vector<Partition> components);

  /// The diagram whose components are all single rows (trivial representation).
  static MultiDiagram trivial(const BlockStructure& block);

  friend bool operator==(const MultiDiagram&, const MultiDiagram&) = default;
  friend auto operator<=>(const MultiDiagram&, const MultiDiagram&) = default;
};

using Grid = std::vector<std::vector<int>>;

/// A Young diagram filled with distinct positive integers.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(Grid rows);

  const Grid& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  int at(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
  /// Entries in row-reading order.
  std::vector<int> entries() const;
  std::vector<std::vector<int>> columns() const;
  bool is_standard() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  Grid rows_;
};

/// An r-tuple of tableaux using each of 1..n exactly once.
struct MultiTableau {
  BlockStructure block;
  std::vector<Tableau> components;

  MultiTableau() = default;
  /// Checks shapes against `block` sizes and that the entries are exactly 1..n.
  MultiTableau(BlockStructure block, std::vector<Tableau> components);

  MultiDiagram shape() const;
  bool is_standard() const;
  /// Component i holds exactly block i's entry range.
  bool is_natural() const;

  friend bool operator==(const MultiTableau&, const MultiTableau&) = default;
  friend auto operator<=>(const MultiTableau&, const MultiTableau&) = default;
};

struct Word {
  std::vector<int> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Indices aligned position-wise with the letters of a Word.
struct IndexWord {
  std::vector<int> indices;
  friend bool operator==(const IndexWord&, const IndexWord&) = default;
};

/// Per-box integers laid out like a MultiTableau.
struct IndexTableau {
  std::vector<Grid> components;
  friend bool operator==(const IndexTableau&, const IndexTableau&) = default;
};

/// Partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);

/// Cartesian product of the partitions of each block size; lexicographic in
/// the per-block partition orders.
std::vector<MultiDiagram> enumerate_r_diagrams(const BlockStructure& block);

/// Standard fillings of `shape` by `entries`, sorted by row-reading word.
std::vector<Tableau> enumerate_standard_tableaux(const Partition& shape, std::vector<int> entries);

/// Natural standard r-tableaux: component i is filled with block i's range.
std::vector<MultiTableau> enumerate_NST(const MultiDiagram& diagram);

/// All standard r-tableaux of the given shape with entry set 1..n.
std::vector<MultiTableau> enumerate_ST(const MultiDiagram& diagram);

/// The row-by-row numbering of each component from its block range.
MultiTableau canonical_tableau(const MultiDiagram& diagram);

/// Column reading: each column bottom to top, columns left to right,
/// components in block order.
Word word(const MultiTableau& t);
Word word(const Tableau& t);

/// Letter 1 gets index 0; k+1 gets the index of k, plus one when k+1 sits at
/// an earlier word position than k. Requires `w` to be a permutation of 1..n.
IndexWord index_word(const Word& w);

/// Writes each letter's index back into its box.
IndexTableau index_tableau(const MultiTableau& t);

/// Index tableau computed separately for every component: the smallest entry
/// of each component gets index 0 and the rule is applied to the successor
/// order of that component's entries. Coincides with `index_tableau` when r = 1.
IndexTableau block_index_tableau(const MultiTableau& t);

/// Number of standard tableaux of the given shape (hook-length formula).
long long count_standard(const Partition& shape);

/// Permutations of {1..n} that fix every row (resp. column) of `t` setwise.
std::vector<Permutation> row_stabilizer(const Tableau& t, int n);
std::vector<Permutation> column_stabilizer(const Tableau& t, int n);

/// Generators (adjacent transpositions within columns) of the column group of
/// every component.
std::vector<Permutation> column_group_generators(const MultiTableau& t);

// Text grammars: partitions "[3,2]", diagrams "[3,2]|[2,1]",
// tableaux "[[1,4,6],[2,7]]", multi-tableaux "[[1,4,6],[2,7]]|[[3,8],[5]]".
std::string to_string(const Partition& p);
std::string to_string(const MultiDiagram& d);
std::string to_string(const Grid& g);
std::string to_string(const Tableau& t);
std::string to_string(const MultiTableau& t);
std::string to_string(const IndexTableau& t);
std::string to_string(const Word& w);
/// "2,1" for blocks (2,1).
std::string to_string(const BlockStructure& b);

BlockStructure parse_blocks(const std::string& text);
MultiDiagram parse_diagram(const std::string& text, const BlockStructure& block);
MultiTableau parse_multi_tableau(const std::string& text, const BlockStructure& block);

}  // namespace hspecht

#endif
