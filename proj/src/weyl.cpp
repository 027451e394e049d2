#include "hspecht/weyl.hpp"

#include <functional>

#include "term_parser.hpp"

namespace hspecht {

DifferentialOperator DifferentialOperator::identity(int n) {
  DifferentialOperator op(n);
  op.add_term(Monomial(n), Monomial(n), 1);
  return op;
}

DifferentialOperator DifferentialOperator::multiplication(const Polynomial& p) {
  DifferentialOperator op(p.ambient());
  for (const auto& [m, c] : p.terms()) op.add_term(m, Monomial(p.ambient()), c);
  return op;
}

DifferentialOperator DifferentialOperator::partial(int n, int var, int power) {
  DifferentialOperator op(n);
  op.add_term(Monomial(n), Monomial::variable(n, var, power), 1);
  return op;
}

DifferentialOperator DifferentialOperator::euler(int n) {
  DifferentialOperator op(n);
  for (int j = 1; j <= n; ++j) op.add_term(Monomial::variable(n, j), Monomial::variable(n, j), 1);
  return op;
}

int DifferentialOperator::order() const {
  int best = 0;
  for (const auto& [t, c] : terms_) best = std::max(best, t.d.degree());
  return best;
}

bool DifferentialOperator::is_derivation() const {
  for (const auto& [t, c] : terms_) {
    if (t.d.degree() != 1) return false;
  }
  return true;
}

void DifferentialOperator::add_term(const Monomial& x, const Monomial& d, const Rational& c) {
  if (x.ambient() != n_ || d.ambient() != n_) throw InvalidInput("operator term ambient mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(OperatorMonomial{x, d}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DifferentialOperator& DifferentialOperator::operator+=(const DifferentialOperator& other) {
  if (n_ != other.n_) throw InvalidInput("operator ambient mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t.x, t.d, c);
  return *this;
}

DifferentialOperator& DifferentialOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) {
  if (a.n_ != b.n_) throw InvalidInput("operator ambient mismatch");
  for (const auto& [t, c] : b.terms_) a.add_term(t.x, t.d, -c);
  return a;
}

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// c!/(c-k)!
Integer falling(int c, int k) {
  Integer r = 1;
  for (int j = 0; j < k; ++j) r *= c - j;
  return r;
}

}  // namespace

DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
  if (a.n_ != b.n_) throw InvalidInput("operator ambient mismatch");
  const int n = a.n_;
  DifferentialOperator out(n);
  std::vector<int> x(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      // x^{a1} (d^{b1} x^{a2}) d^{b2}, expanding d_j^{b} x_j^{c} by Leibniz per variable.
      std::function<void(int, Rational)> rec = [&](int var, Rational coeff) {
        if (var > n) {
          out.add_term(Monomial(x), Monomial(d), coeff);
          return;
        }
        const int b1 = ta.d[var], c2 = tb.x[var];
        for (int k = 0; k <= std::min(b1, c2); ++k) {
          x[static_cast<std::size_t>(var - 1)] = ta.x[var] + c2 - k;
          d[static_cast<std::size_t>(var - 1)] = b1 - k + tb.d[var];
          rec(var + 1, coeff * Rational(binomial(b1, k) * falling(c2, k)));
        }
      };
      rec(1, ca * cb);
    }
  }
  return out;
}

Polynomial apply_operator(const DifferentialOperator& op, const Polynomial& f) {
  if (op.ambient() != f.ambient()) throw InvalidInput("operator and polynomial differ in n");
  const int n = f.ambient();
  Polynomial out(n);
  std::map<Monomial, Polynomial, GradedLexDescending> derivatives;
  for (const auto& [t, c] : op.terms()) {
    auto it = derivatives.find(t.d);
    if (it == derivatives.end()) {
      Polynomial g = f;
      for (int var = 1; var <= n && !g.is_zero(); ++var) {
        for (int e = 0; e < t.d[var]; ++e) g = g.derivative(var);
      }
      it = derivatives.emplace(t.d, std::move(g)).first;
    }
    for (const auto& [m, coeff] : it->second.terms()) out.add_term(t.x * m, c * coeff);
  }
  return out;
}

DifferentialOperator conjugate_by_permutation(const Permutation& sigma, const DifferentialOperator& op) {
  if (sigma.degree() != op.ambient()) throw InvalidInput("permutation degree does not match operator ambient");
  DifferentialOperator out(op.ambient());
  for (const auto& [t, c] : op.terms()) out.add_term(t.x.permuted(sigma), t.d.permuted(sigma), c);
  return out;
}

DifferentialOperator invariant_derivation(const BlockStructure& block, int index, int k, int max_power) {
  if (k < 0) throw InvalidInput("derivation power must be non-negative");
  if (k > max_power) {
    throw BoundExceeded("derivation power " + std::to_string(k) + " exceeds bound " + std::to_string(max_power));
  }
  const int n = block.total();
  DifferentialOperator op(n);
  for (int j : block.range(index)) op.add_term(Monomial::variable(n, j, k), Monomial::variable(n, j), 1);
  return op;
}

bool commutes_with_group(const DifferentialOperator& op, std::span<const Permutation> gens, int samples,
                         unsigned seed) {
  for (const auto& g : gens) {
    if (conjugate_by_permutation(g, op) != op) return false;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Polynomial f = random_polynomial(op.ambient(), 3, 4, rng);
    for (const auto& g : gens) {
      if (apply_operator(op, permute(g, f)) != permute(g, apply_operator(op, f))) return false;
    }
  }
  return true;
}

DivisibilityWitness divisibility_witness(const DifferentialOperator& op, const HigherSpechtKey& key) {
  const auto gens = block_group_generators(key.T.block);
  if (!commutes_with_group(op, gens, 0)) {
    throw InvalidInput("operator " + to_string(op) + " is not invariant under the block group");
  }
  DivisibilityWitness out;
  out.image = apply_operator(op, higher_specht(key));
  if (out.image.is_zero()) {
    out.zero_image = true;
    return out;
  }
  const std::string instance = "D=" + to_string(op) + ";" + to_string(key);
  const Polynomial generator = classical_specht(key.T);
  auto quotient = exact_divide(out.image, generator);
  if (!quotient) {
    throw Falsification("divisibility", instance, "F_T = " + to_string(generator) + " does not divide " +
                                                      to_string(out.image));
  }
  const auto column_gens = column_group_generators(key.T);
  if (!is_invariant(*quotient, column_gens)) {
    throw Falsification("divisibility", instance, "quotient " + to_string(*quotient) + " is not C(T)-invariant");
  }
  out.quotient = std::move(quotient);
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed:
      return "pass";
    case CheckStatus::failed:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

ImageModuleReport image_module_check(const DifferentialOperator& op, const MultiDiagram& diagram,
                                     const MultiTableau& S) {
  ImageModuleReport report;
  report.instance = "D=" + to_string(op) + ";lambda=" + to_string(diagram) + ";S=" + to_string(S);
  const auto gens = block_group_generators(diagram.block);
  if (!commutes_with_group(op, gens, 0)) {
    throw InvalidInput("operator " + to_string(op) + " is not invariant under the block group");
  }
  const RepresentationBasis basis = module_basis(diagram, S);
  for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
    report.images.push_back(apply_operator(op, basis.vectors[j]));
    if (report.images.back().is_zero()) {
      report.status = CheckStatus::skipped;
      report.witness = "D(F_T^S) = 0 for T=" + to_string(basis.T[j]);
      return report;
    }
  }
  const PolynomialSpan image_span(report.images);
  if (!image_span.independent()) {
    report.status = CheckStatus::failed;
    report.witness = "images have rank " + std::to_string(image_span.dimension()) + " < " +
                     std::to_string(report.images.size());
    return report;
  }
  const auto matrices = representation_matrices(basis, gens);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t j = 0; j < report.images.size(); ++j) {
      Polynomial expected(diagram.block.total());
      for (std::size_t i = 0; i < report.images.size(); ++i) expected += report.images[i] * matrices[g](i, j);
      if (permute(gens[g], report.images[j]) != expected) {
        report.status = CheckStatus::failed;
        report.witness = "sigma=" + to_string(gens[g]) + " does not intertwine at T=" + to_string(basis.T[j]);
        return report;
      }
    }
  }
  report.status = CheckStatus::passed;
  return report;
}

std::string to_string(const DifferentialOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : op.terms()) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    auto append = [&](const Monomial& m, char symbol) {
      for (int k = 1; k <= m.ambient(); ++k) {
        if (m[k] == 0) continue;
        if (!body.empty()) body += "*";
        body += symbol + std::to_string(k);
        if (m[k] > 1) body += "^" + std::to_string(m[k]);
      }
    };
    append(t.x, 'x');
    append(t.d, 'd');
    const Rational magnitude = abs(c);
    if (body.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += magnitude.get_str() + "*" + body;
    }
  }
  return out;
}

DifferentialOperator parse_operator(const std::string& text, int n) {
  DifferentialOperator out(n);
  for (const auto& term : detail::parse_sum(text, "xd")) {
    DifferentialOperator product = DifferentialOperator::identity(n) * Rational(term.sign);
    for (const auto& f : term.factors) {
      if (f.is_number) {
        product *= f.value;
        continue;
      }
      if (f.index > n) {
        throw InvalidInput(std::string("symbol '") + f.symbol + std::to_string(f.index) + "' outside 1.." +
                           std::to_string(n));
      }
      const DifferentialOperator factor = f.symbol == 'x'
                                              ? DifferentialOperator::multiplication(Polynomial::from_monomial(
                                                    Monomial::variable(n, f.index, f.power)))
                                              : DifferentialOperator::partial(n, f.index, f.power);
      product = product * factor;
    }
    out += product;
  }
  return out;
}

}  // namespace hspecht
