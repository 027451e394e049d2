#include "hspecht/polynomial.hpp"

#include <algorithm>

#include "term_parser.hpp"

namespace hspecht {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw InvalidInput("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int n, int var, int power) {
  if (var < 1 || var > n) throw InvalidInput("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
  Monomial m(n);
  m.exponents_[static_cast<std::size_t>(var - 1)] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] > other.exponents_[k]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q = other;
  for (std::size_t k = 0; k < exponents_.size(); ++k) q.exponents_[k] -= exponents_[k];
  q.degree_ -= degree_;
  return q;
}

Monomial Monomial::permuted(const Permutation& sigma) const {
  Monomial m(ambient());
  for (int k = 1; k <= ambient(); ++k) m.exponents_[static_cast<std::size_t>(sigma(k) - 1)] = (*this)[k];
  m.degree_ = degree_;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t k = 0; k < m.exponents_.size(); ++k) m.exponents_[k] += b.exponents_[k];
  m.degree_ += b.degree_;
  return m;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_ambient(const Polynomial& a, const Polynomial& b) {
  if (a.ambient() != b.ambient()) {
    throw InvalidInput("polynomial ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                       std::to_string(b.ambient()));
  }
}

}  // namespace

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Polynomial Polynomial::variable(int n, int var) { return from_monomial(Monomial::variable(n, var)); }

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.ambient());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.ambient() != n_) throw InvalidInput("monomial ambient mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(n_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) p.terms_.emplace_hint(p.terms_.end(), m, c);
  }
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ambient(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ambient(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ambient(a, b);
  Polynomial p(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  }
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n_) throw InvalidInput("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (int k = 1; k <= n_; ++k) {
      for (int e = 0; e < m[k]; ++e) value *= point[static_cast<std::size_t>(k - 1)];
    }
    total += value;
  }
  return total;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 1 || var > n_) throw InvalidInput("derivative variable out of range");
  Polynomial p(n_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[static_cast<std::size_t>(var - 1)] -= 1;
    p.add_term(Monomial(std::move(exps)), c * e);
  }
  return p;
}

// ---------------------------------------------------------------------------

Polynomial permute(const Permutation& sigma, const Polynomial& f) {
  if (sigma.degree() != f.ambient()) throw InvalidInput("permutation degree does not match polynomial ambient");
  Polynomial p(f.ambient());
  for (const auto& [m, c] : f.terms()) p.add_term(m.permuted(sigma), c);
  return p;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidInput("division by the zero polynomial");
  require_same_ambient(f, g);
  Polynomial remainder = f;
  Polynomial quotient(f.ambient());
  const auto& [lead_m, lead_c] = g.leading_term();
  while (!remainder.is_zero()) {
    auto [m, c] = remainder.leading_term();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial shift = lead_m.quotient_of(m);
    Rational factor = c / lead_c;
    quotient.add_term(shift, factor);
    for (const auto& [gm, gc] : g.terms()) remainder.add_term(shift * gm, -factor * gc);
  }
  return quotient;
}

bool is_invariant(const Polynomial& f, std::span<const Permutation> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return permute(g, f) == f; });
}

Polynomial block_vandermonde(const BlockStructure& block, int index) {
  const int n = block.total();
  Polynomial p = Polynomial::constant(n, 1);
  for (int a = block.first(index); a <= block.last(index); ++a) {
    for (int b = a + 1; b <= block.last(index); ++b) {
      p = p * (Polynomial::variable(n, a) - Polynomial::variable(n, b));
    }
  }
  return p;
}

Polynomial vandermonde(const BlockStructure& block) {
  Polynomial p = Polynomial::constant(block.total(), 1);
  for (int i = 0; i < block.count(); ++i) p = p * block_vandermonde(block, i);
  return p;
}

Polynomial elementary_symmetric(int n, std::span<const int> vars, int k) {
  Polynomial p(n);
  if (k < 0 || k > static_cast<int>(vars.size())) return p;
  std::vector<bool> mask(vars.size(), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    Monomial m(n);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (mask[j]) exps[static_cast<std::size_t>(vars[j] - 1)] = 1;
    }
    p.add_term(Monomial(std::move(exps)), 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return p;
}

Polynomial group_average(const Polynomial& f, std::span<const Permutation> group) {
  Polynomial sum(f.ambient());
  for (const auto& g : group) sum += permute(g, f);
  return sum * (Rational(1) / Rational(static_cast<long>(group.size())));
}

Polynomial random_polynomial(int n, int max_degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree_dist(0, max_degree);
  std::uniform_int_distribution<int> var_dist(1, n);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 5);
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    const int degree = degree_dist(rng);
    for (int k = 0; k < degree; ++k) exps[static_cast<std::size_t>(var_dist(rng) - 1)] += 1;
    const int num = num_dist(rng);
    const int den = den_dist(rng);
    p.add_term(Monomial(std::move(exps)), fraction(num, den));
  }
  return p;
}

// ---------------------------------------------------------------------------

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (int k = 1; k <= m.ambient(); ++k) {
      if (m[k] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(k);
      if (m[k] > 1) body += "^" + std::to_string(m[k]);
    }
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

Polynomial parse_polynomial(const std::string& text, int n) {
  Polynomial p(n);
  for (const auto& term : detail::parse_sum(text, "x")) {
    Rational coeff = term.sign;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (const auto& f : term.factors) {
      if (f.is_number) {
        coeff *= f.value;
        continue;
      }
      if (f.index > n) {
        throw InvalidInput("variable 'x" + std::to_string(f.index) + "' outside x1..x" + std::to_string(n));
      }
      exps[static_cast<std::size_t>(f.index - 1)] += f.power;
    }
    p.add_term(Monomial(std::move(exps)), coeff);
  }
  return p;
}

int max_variable_index(const std::string& text) {
  int best = 0;
  for (const auto& term : detail::parse_sum(text, "xd")) {
    for (const auto& f : term.factors) {
      if (!f.is_number) best = std::max(best, f.index);
    }
  }
  return best;
}

}  // namespace hspecht
