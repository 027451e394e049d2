#ifndef HSPECHT_POLYNOMIAL_HPP
#define HSPECHT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hspecht/combinatorics.hpp"
#include "hspecht/common.hpp"
#include "hspecht/permutation.hpp"

namespace hspecht {

/// Exponent vector x_1^{a_1} ... x_n^{a_n} with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : exponents_(static_cast<std::size_t>(n), 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(int n, int var, int power = 1);

  int ambient() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int var) const { return exponents_[static_cast<std::size_t>(var - 1)]; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// Moves the exponent of x_k onto x_{sigma(k)}.
  Monomial permuted(const Permutation& sigma) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Graded lexicographic order; `operator()` sorts larger monomials first.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// Sparse polynomial in x_1..x_n with exact rational coefficients.
/// No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexDescending>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, int var);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest term in graded lex order; requires a nonzero polynomial.
  const Terms::value_type& leading_term() const { return *terms_.begin(); }

  void add_term(const Monomial& m, const Rational& c);
  Polynomial homogeneous_part(int degree) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(std::span<const Rational> point) const;
  /// d/dx_var.
  Polynomial derivative(int var) const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// sigma f, defined by (sigma f)(x_1..x_n) = f(x_{sigma(1)}, ..., x_{sigma(n)}).
/// This is a left action: permute(s, permute(t, f)) == permute(s * t, f).
Polynomial permute(const Permutation& sigma, const Polynomial& f);

/// Returns q with f == g * q, or nullopt when g does not divide f.
/// Throws InvalidInput when g is zero.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

bool is_invariant(const Polynomial& f, std::span<const Permutation> gens);

/// Product of (x_a - x_b), a < b, over block `index`'s range.
Polynomial block_vandermonde(const BlockStructure& block, int index);
/// Product of all block Vandermondes.
Polynomial vandermonde(const BlockStructure& block);

/// Elementary symmetric polynomial e_k in the variables listed.
Polynomial elementary_symmetric(int n, std::span<const int> vars, int k);

/// Average of f over the given group elements.
Polynomial group_average(const Polynomial& f, std::span<const Permutation> group);

/// Up to `terms` random terms of total degree <= max_degree with small
/// rational coefficients (numerators in [-9, 9], denominators in [1, 5]).
Polynomial random_polynomial(int n, int max_degree, int terms, std::mt19937_64& rng);

/// Text form, terms in descending graded lex order: "-3/2*x1^2*x2 + x3".
std::string to_string(const Polynomial& f);
/// Parses the text form; variables above `n` are rejected.
Polynomial parse_polynomial(const std::string& text, int n);
/// Largest variable index used in a polynomial expression, 0 if none.
int max_variable_index(const std::string& text);

}  // namespace hspecht

#endif
