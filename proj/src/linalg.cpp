#include "hspecht/linalg.hpp"

#include <map>

namespace hspecht {

ExactSolver::ExactSolver(const RationalMatrix& a, bool with_transform)
    : rows_(a.rows()), cols_(a.cols()), column_scale_(a.cols(), 1), has_transform_(with_transform) {
  for (std::size_t c = 0; c < cols_; ++c) {
    Integer scale = 1;
    for (std::size_t r = 0; r < rows_; ++r) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(r, c).get_den_mpz_t());
    column_scale_[c] = scale;
  }
  const std::size_t width = cols_ + (with_transform ? rows_ : 0);
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(width, 0));
  scaled_.resize(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& q = a(r, c);
      if (q != 0) {
        m[r][c] = q.get_num() * (column_scale_[c] / q.get_den());
        if (with_transform) scaled_[r].emplace_back(c, m[r][c]);
      }
    }
    if (with_transform) m[r][cols_ + r] = 1;
  }

  Integer previous = 1;
  Integer scratch;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols_ && next_row < rows_; ++c) {
    std::size_t p = next_row;
    while (p < rows_ && m[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(m[p], m[next_row]);
    const auto& pivot_row = m[next_row];
    const Integer pivot = pivot_row[c];
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == next_row) continue;
      auto& row = m[i];
      const Integer factor = row[c];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == c) continue;
        // row[j] = (pivot * row[j] - factor * pivot_row[j]) / previous, exact.
        scratch = pivot * row[j];
        if (factor != 0 && pivot_row[j] != 0) scratch -= factor * pivot_row[j];
        if (previous != 1) mpz_divexact(scratch.get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
        row[j] = scratch;
      }
      row[c] = 0;
    }
    previous = pivot;
    pivots_.push_back(c);
    ++next_row;
  }
  pivot_value_ = previous;

  if (with_transform) {
    for (std::size_t r = 0; r < rank(); ++r) transform_.emplace_back(m[r].begin() + static_cast<long>(cols_), m[r].end());
  }
}

std::optional<std::vector<Rational>> ExactSolver::solve(std::span<const Rational> b) const {
  if (!has_transform_) throw InvalidInput("solver was built without a transform");
  if (b.size() != rows_) throw InvalidInput("right-hand side has wrong length");
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < rows_; ++k) {
    if (b[k] != 0) support.push_back(k);
  }
  // x' solves the scaled system; x = diag(scale) x'.
  std::vector<Rational> scaled_x(cols_, 0);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational acc = 0;
    for (std::size_t r : support) {
      if (transform_[k][r] != 0) acc += Rational(transform_[k][r]) * b[r];
    }
    scaled_x[pivots_[k]] = acc / Rational(pivot_value_);
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (const auto& [c, v] : scaled_[r]) {
      if (scaled_x[c] != 0) acc += Rational(v) * scaled_x[c];
    }
    if (acc != b[r]) return std::nullopt;
  }
  std::vector<Rational> x(cols_, 0);
  for (std::size_t c = 0; c < cols_; ++c) x[c] = scaled_x[c] * Rational(column_scale_[c]);
  return x;
}

std::size_t rank(const RationalMatrix& a) { return ExactSolver(a, false).rank(); }

// ---------------------------------------------------------------------------

namespace {

using MonomialIndex = std::map<Monomial, std::size_t, GradedLexDescending>;

RationalMatrix coefficient_matrix(const std::vector<Polynomial>& polys, std::vector<Monomial>& monomials) {
  MonomialIndex index;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  }
  monomials.clear();
  for (auto& [m, row] : index) {
    row = monomials.size();
    monomials.push_back(m);
  }
  RationalMatrix a(monomials.size(), polys.size());
  for (std::size_t col = 0; col < polys.size(); ++col) {
    for (const auto& [m, c] : polys[col].terms()) a(index.at(m), col) = c;
  }
  return a;
}

}  // namespace

PolynomialSpan::PolynomialSpan(std::vector<Polynomial> vectors)
    : vectors_(std::move(vectors)), solver_(coefficient_matrix(vectors_, monomials_)) {}

std::optional<std::vector<Rational>> PolynomialSpan::coordinates(const Polynomial& target) const {
  std::vector<Rational> b(monomials_.size(), 0);
  std::size_t matched = 0;
  for (std::size_t r = 0; r < monomials_.size(); ++r) {
    b[r] = target.coefficient(monomials_[r]);
    if (b[r] != 0) ++matched;
  }
  if (matched != target.size()) return std::nullopt;
  return solver_.solve(b);
}

std::size_t polynomial_rank(std::span<const Polynomial> polys) {
  std::vector<Polynomial> copy(polys.begin(), polys.end());
  std::vector<Monomial> monomials;
  return rank(coefficient_matrix(copy, monomials));
}

}  // namespace hspecht
