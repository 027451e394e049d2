#ifndef HSPECHT_DECOMP_HPP
#define HSPECHT_DECOMP_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hspecht/linalg.hpp"
#include "hspecht/specht.hpp"

namespace hspecht {

/// A product of per-block elementary symmetric polynomials.
struct InvariantMonomial {
  /// powers[i][k-1] is the exponent of e_k in block i's variables.
  std::vector<std::vector<int>> powers;
  int degree = 0;
  Polynomial value;
  std::string label;  // e.g. "e1_b1^2*e2_b1", "1"
};

/// Basis of the degree-d part of the invariant ring.
std::vector<InvariantMonomial> invariant_monomials_of_degree(const BlockStructure& block, int degree);
/// All basis elements of degree <= max_degree, by increasing degree.
std::vector<InvariantMonomial> invariant_monomial_basis(const BlockStructure& block, int max_degree);

/// Truncated power series in q with integer coefficients.
struct GradedSeries {
  std::vector<long long> coefficients;

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;
};
std::string to_string(const GradedSeries& s);

/// prod_i [n_i]_q! = prod_i prod_{k=1}^{n_i} (1 + q + ... + q^{k-1}).
GradedSeries q_factorial_series(const BlockStructure& block);

/// One free generator F_T^S of the polynomial ring over the invariant ring.
struct Generator {
  HigherSpechtKey key;
  Polynomial polynomial;
  int degree = 0;
};

/// Every (lambda, T in NST(lambda), S block-respecting) generator.
std::vector<Generator> decomposition_generators(const BlockStructure& block);

/// sum over generators of q^{deg F_T^S}, truncated at `max_degree`; throws
/// Falsification unless it matches q_factorial_series through that degree.
GradedSeries graded_rank_series(const BlockStructure& block, int max_degree);

struct GeneratorCoefficient {
  HigherSpechtKey key;
  Polynomial generator;
  Polynomial coefficient;  // invariant under the block group
};

struct DecompositionResult {
  Polynomial input;
  std::vector<GeneratorCoefficient> terms;  // one per generator, generator order; empty for f = 0
};

/// Size and rank of the degree-d system {m * F : deg m + deg F = d}.
struct DegreeCertificate {
  int degree = 0;
  std::size_t rows = 0;  // monomials of degree d
  std::size_t cols = 0;  // (invariant monomial, generator) pairs
  std::size_t rank = 0;
  bool full_column_rank() const { return rank == cols; }
  bool spanning() const { return rank == rows; }
};

/// Writes polynomials as sum_g coeff_g * F_g with invariant coefficients by
/// solving one exact linear system per homogeneous degree.
///
/// The per-degree systems are factored once in the constructor (concurrently
/// across degrees), after which `decompose` is const and thread-safe.
class Decomposer {
 public:
  Decomposer(const BlockStructure& block, int max_degree);

  const BlockStructure& block() const { return block_; }
  int max_degree() const { return max_degree_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const DegreeCertificate& certificate(int degree) const { return systems_.at(static_cast<std::size_t>(degree)).certificate; }

  /// Throws InvalidInput for a degree above max_degree() and Falsification
  /// when a degree system is rank deficient or has no solution.
  DecompositionResult decompose(const Polynomial& f) const;

 private:
  struct Column {
    std::size_t generator;
    std::size_t invariant;  // index into DegreeSystem::invariants
  };
  struct DegreeSystem {
    DegreeCertificate certificate;
    std::vector<InvariantMonomial> invariants;  // all degrees <= this degree
    std::vector<Monomial> monomials;
    std::vector<Column> columns;
    std::unique_ptr<ExactSolver> solver;
  };
  DegreeSystem build_system(int degree) const;

  BlockStructure block_;
  int max_degree_;
  std::vector<Generator> generators_;
  std::vector<DegreeSystem> systems_;
};

DecompositionResult decompose(const BlockStructure& block, const Polynomial& f);

/// sum_g coefficient_g * generator_g.
Polynomial reconstruct(const DecompositionResult& result);

struct MultiplicityRow {
  MultiDiagram diagram;
  long long f = 0;          // prod_i f^{lambda^i}
  long long nst_count = 0;  // |NST(lambda)|
};

struct MultiplicityTable {
  std::vector<MultiplicityRow> rows;
  long long sum_of_squares = 0;
  long long group_order = 0;
};

/// Throws BoundExceeded past the group-order bound and Falsification when
/// f^lambda != |NST(lambda)| or sum (f^lambda)^2 != prod n_i!.
MultiplicityTable multiplicity_table(const BlockStructure& block, long long max_group_order = 720);

/// Central projectors (f^lambda / |G|) sum_g chi_lambda(g^{-1}) g for every
/// diagram of a block structure; characters come from the S_0 module bases.
class IsotypicProjector {
 public:
  explicit IsotypicProjector(const BlockStructure& block, long long max_group_order = 720);

  const std::vector<MultiDiagram>& diagrams() const { return diagrams_; }
  const std::vector<Rational>& character_of(const MultiDiagram& diagram) const;
  Polynomial project(const MultiDiagram& diagram, const Polynomial& f) const;

 private:
  BlockStructure block_;
  std::vector<Permutation> group_;
  std::vector<std::size_t> inverse_index_;
  std::vector<MultiDiagram> diagrams_;
  std::map<MultiDiagram, std::vector<Rational>> characters_;
  std::map<MultiDiagram, long long> dimensions_;
};

Polynomial isotypic_projection(const MultiDiagram& diagram, const Polynomial& f, long long max_group_order = 720);

/// Rank of {e_T v : v in V^{S_0}(lambda)}; throws Falsification unless it is 1.
std::size_t one_dimensionality_check(const MultiDiagram& diagram, const MultiTableau& T);

/// Generator count and rank over Q when S ranges over all of ST(lambda)
/// (entries drawn from all of 1..n, whole-word indices).
struct FullEntryReading {
  std::size_t generator_count = 0;
  std::size_t linear_rank = 0;
  long long free_rank = 0;  // prod n_i!
};
FullEntryReading full_entry_reading(const BlockStructure& block);

}  // namespace hspecht

#endif
