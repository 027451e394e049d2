#ifndef HSPECHT_LINALG_HPP
#define HSPECHT_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "hspecht/common.hpp"
#include "hspecht/polynomial.hpp"

namespace hspecht {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact solver for A x = b built on fraction-free Gauss-Jordan elimination.
///
/// Columns are scaled to integers, then [A | I] is reduced with Bareiss-style
/// exact divisions so every intermediate stays integral. Pivot rows end with
/// the common pivot value `d` on their pivot column, and the right block holds
/// the integral transform M with M A = R. One factorization serves any
/// number of right-hand sides; a candidate solution is read off the pivot rows
/// of M and then checked against the original system.
class ExactSolver {
 public:
  /// `with_transform = false` computes the rank only.
  explicit ExactSolver(const RationalMatrix& a, bool with_transform = true);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool full_column_rank() const { return rank() == cols_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// A solution of A x = b with every free variable set to zero, or nullopt
  /// when b is outside the column space. Unique whenever full_column_rank().
  std::optional<std::vector<Rational>> solve(std::span<const Rational> b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> column_scale_;
  std::vector<std::size_t> pivots_;
  Integer pivot_value_ = 1;
  // Nonzero entries of the column-scaled integer matrix, per row.
  std::vector<std::vector<std::pair<std::size_t, Integer>>> scaled_;
  // Rows of the transform belonging to pivot rows, rank() x rows_.
  std::vector<std::vector<Integer>> transform_;
  bool has_transform_ = false;
};

std::size_t rank(const RationalMatrix& a);

/// Coordinates of polynomials with respect to a fixed list of polynomials.
///
/// Rows of the underlying system are the monomials occurring in the list;
/// a target using any other monomial is reported as outside the span.
class PolynomialSpan {
 public:
  explicit PolynomialSpan(std::vector<Polynomial> vectors);

  std::size_t dimension() const { return solver_.rank(); }
  bool independent() const { return solver_.full_column_rank(); }
  const std::vector<Polynomial>& vectors() const { return vectors_; }

  std::optional<std::vector<Rational>> coordinates(const Polynomial& target) const;
  bool contains(const Polynomial& target) const { return coordinates(target).has_value(); }

 private:
  std::vector<Polynomial> vectors_;
  std::vector<Monomial> monomials_;
  ExactSolver solver_;
};

/// Rank over Q of a list of polynomials.
std::size_t polynomial_rank(std::span<const Polynomial> polys);

}  // namespace hspecht

#endif
