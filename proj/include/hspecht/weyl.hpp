#ifndef HSPECHT_WEYL_HPP
#define HSPECHT_WEYL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hspecht/polynomial.hpp"
#include "hspecht/specht.hpp"

namespace hspecht {

/// Monomial part x^a and derivative part d^b of one normal-ordered term.
struct OperatorMonomial {
  Monomial x;
  Monomial d;

  friend bool operator==(const OperatorMonomial&, const OperatorMonomial&) = default;
};

struct OperatorOrder {
  bool operator()(const OperatorMonomial& a, const OperatorMonomial& b) const {
    GradedLexDescending less;
    const int da = a.x.degree() + a.d.degree();
    const int db = b.x.degree() + b.d.degree();
    if (da != db) return da > db;
    if (a.x != b.x) return less(a.x, b.x);
    return less(a.d, b.d);
  }
};

/// Element of the Weyl algebra Q<x_1..x_n, d_1..d_n>, stored in normal form:
/// every term is c * x^a d^b with all derivatives to the right.
class DifferentialOperator {
 public:
  using Terms = std::map<OperatorMonomial, Rational, OperatorOrder>;

  DifferentialOperator() = default;
  explicit DifferentialOperator(int n) : n_(n) {}

  static DifferentialOperator identity(int n);
  static DifferentialOperator multiplication(const Polynomial& p);
  /// d_var^power.
  static DifferentialOperator partial(int n, int var, int power = 1);
  /// sum_j x_j d_j.
  static DifferentialOperator euler(int n);

  int ambient() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest derivative order among the terms.
  int order() const;
  /// Every term has exactly one derivative (a vector field sum_j g_j d_j).
  bool is_derivation() const;

  void add_term(const Monomial& x, const Monomial& d, const Rational& c);

  DifferentialOperator& operator+=(const DifferentialOperator& other);
  DifferentialOperator& operator*=(const Rational& c);
  friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) { return a += b; }
  friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b);
  friend DifferentialOperator operator*(DifferentialOperator a, const Rational& c) { return a *= c; }
  /// Composition (a then b applied right to left: (a*b)(f) = a(b(f))), renormalized.
  friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b);
  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

 private:
  int n_ = 0;
  Terms terms_;
};

Polynomial apply_operator(const DifferentialOperator& op, const Polynomial& f);

/// sigma D sigma^{-1}: relabels x_k and d_k as x_{sigma(k)} and d_{sigma(k)}.
DifferentialOperator conjugate_by_permutation(const Permutation& sigma, const DifferentialOperator& op);

/// sum over block `index` of x_j^k d_j. Throws BoundExceeded for k > max_power.
DifferentialOperator invariant_derivation(const BlockStructure& block, int index, int k, int max_power = 8);

/// Conjugation test on every generator, plus apply/permute commutation on
/// `samples` pseudo-random polynomials (deterministic in `seed`).
bool commutes_with_group(const DifferentialOperator& op, std::span<const Permutation> gens, int samples = 3,
                         unsigned seed = 1);

/// D(F_T^S) = F_T * G with F_T the classical Specht polynomial and G invariant
/// under C(T^1) x ... x C(T^r).
/// `quotient` is empty when D(F_T^S) = 0.
struct DivisibilityWitness {
  bool zero_image = false;
  Polynomial image;
  std::optional<Polynomial> quotient;
};

/// Requires D to commute with the block group (InvalidInput otherwise).
/// Throws Falsification when F_T does not divide the image or the quotient is
/// not column-invariant.
DivisibilityWitness divisibility_witness(const DifferentialOperator& op, const HigherSpechtKey& key);

enum class CheckStatus { passed, failed, skipped };
std::string to_string(CheckStatus s);

struct ImageModuleReport {
  CheckStatus status = CheckStatus::skipped;
  std::string instance;
  std::string witness;
  std::vector<Polynomial> images;
};

/// Checks that {D(F_T^S)}_T is independent and that F_T^S -> D(F_T^S)
/// intertwines the group action. Skipped (with a notice) when some image is zero.
ImageModuleReport image_module_check(const DifferentialOperator& op, const MultiDiagram& diagram,
                                     const MultiTableau& S);

/// Text form "x1^2*d1 + x2^2*d2", normal ordered.
std::string to_string(const DifferentialOperator& op);
/// Parses a sum of products of rationals, x_k^e and d_k^e factors; each product
/// is composed left to right, so "d1*x1" means x1*d1 + 1.
DifferentialOperator parse_operator(const std::string& text, int n);

}  // namespace hspecht

#endif
