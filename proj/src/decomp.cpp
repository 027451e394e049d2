#include "hspecht/decomp.hpp"

#include <functional>
#include <future>

namespace hspecht {

namespace {

// Exponent vectors p (p[k-1] = power of e_k) with sum_k k * p[k-1] == degree.
std::vector<std::vector<int>> weighted_exponents(int max_part, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(max_part), 0);
  std::function<void(int, int)> rec = [&](int part, int remaining) {
    if (part == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int p = remaining / part; p >= 0; --p) {
      current[static_cast<std::size_t>(part - 1)] = p;
      rec(part - 1, remaining - p * part);
    }
    current[static_cast<std::size_t>(part - 1)] = 0;
  };
  rec(max_part, degree);
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      rec(var + 1, remaining - e);
    }
  };
  rec(0, degree);
  return out;
}

std::string polynomial_count_label(const std::vector<std::vector<int>>& powers) {
  std::string label;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t k = 0; k < powers[i].size(); ++k) {
      if (powers[i][k] == 0) continue;
      if (!label.empty()) label += "*";
      label += "e" + std::to_string(k + 1) + "_b" + std::to_string(i + 1);
      if (powers[i][k] > 1) label += "^" + std::to_string(powers[i][k]);
    }
  }
  return label.empty() ? "1" : label;
}

}  // namespace

std::vector<InvariantMonomial> invariant_monomials_of_degree(const BlockStructure& block, int degree) {
  if (degree < 0) return {};
  const int n = block.total();
  std::vector<std::vector<Polynomial>> elementary(static_cast<std::size_t>(block.count()));
  for (int i = 0; i < block.count(); ++i) {
    const auto vars = block.range(i);
    for (int k = 1; k <= block.size(i); ++k) elementary[static_cast<std::size_t>(i)].push_back(elementary_symmetric(n, vars, k));
  }
  std::vector<InvariantMonomial> out;
  std::vector<std::vector<int>> powers(static_cast<std::size_t>(block.count()));
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == block.count()) {
      if (remaining != 0) return;
      InvariantMonomial m;
      m.powers = powers;
      m.degree = degree;
      m.value = Polynomial::constant(n, 1);
      for (std::size_t b = 0; b < powers.size(); ++b) {
        for (std::size_t k = 0; k < powers[b].size(); ++k) {
          for (int e = 0; e < powers[b][k]; ++e) m.value = m.value * elementary[b][k];
        }
      }
      m.label = polynomial_count_label(powers);
      out.push_back(std::move(m));
      return;
    }
    for (int d = remaining; d >= 0; --d) {
      for (auto& p : weighted_exponents(block.size(i), d)) {
        powers[static_cast<std::size_t>(i)] = p;
        rec(i + 1, remaining - d);
      }
    }
  };
  rec(0, degree);
  return out;
}

std::vector<InvariantMonomial> invariant_monomial_basis(const BlockStructure& block, int max_degree) {
  std::vector<InvariantMonomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = invariant_monomials_of_degree(block, d);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::string to_string(const GradedSeries& s) {
  std::string out;
  for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
    const long long c = s.coefficients[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string power = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
    if (k == 0) {
      out += std::to_string(c);
    } else {
      out += (c == 1 ? "" : std::to_string(c)) + power;
    }
  }
  return out.empty() ? "0" : out;
}

GradedSeries q_factorial_series(const BlockStructure& block) {
  std::vector<long long> series{1};
  for (int s : block.sizes()) {
    for (int k = 1; k <= s; ++k) {
      std::vector<long long> next(series.size() + static_cast<std::size_t>(k - 1), 0);
      for (std::size_t a = 0; a < series.size(); ++a) {
        for (int b = 0; b < k; ++b) next[a + static_cast<std::size_t>(b)] += series[a];
      }
      series = std::move(next);
    }
  }
  return {series};
}

std::vector<Generator> decomposition_generators(const BlockStructure& block) {
  std::vector<Generator> out;
  for (auto& key : enumerate_keys(block)) {
    Polynomial f = higher_specht(key);
    if (f.is_zero() || !f.is_homogeneous()) {
      throw Falsification("generators", to_string(key), "F_T^S is zero or not homogeneous: " + to_string(f));
    }
    const int degree = f.degree();
    out.push_back({std::move(key), std::move(f), degree});
  }
  return out;
}

GradedSeries graded_rank_series(const BlockStructure& block, int max_degree) {
  if (max_degree < 0) throw InvalidInput("degree bound must be non-negative");
  GradedSeries series{std::vector<long long>(static_cast<std::size_t>(max_degree) + 1, 0)};
  for (const auto& g : decomposition_generators(block)) {
    if (g.degree <= max_degree) series.coefficients[static_cast<std::size_t>(g.degree)] += 1;
  }
  GradedSeries expected = q_factorial_series(block);
  expected.coefficients.resize(static_cast<std::size_t>(max_degree) + 1, 0);
  if (series != expected) {
    throw Falsification("graded_rank_series", "blocks=" + to_string(block),
                        to_string(series) + " != " + to_string(expected));
  }
  while (series.coefficients.size() > 1 && series.coefficients.back() == 0) series.coefficients.pop_back();
  return series;
}

// ---------------------------------------------------------------------------

Decomposer::Decomposer(const BlockStructure& block, int max_degree)
    : block_(block), max_degree_(max_degree), generators_(decomposition_generators(block)) {
  if (max_degree < 0) throw InvalidInput("degree bound must be non-negative");
  std::vector<std::future<DegreeSystem>> pending;
  for (int d = 0; d <= max_degree; ++d) {
    pending.push_back(std::async(std::launch::async, [this, d] { return build_system(d); }));
  }
  for (auto& p : pending) systems_.push_back(p.get());
}

Decomposer::DegreeSystem Decomposer::build_system(int degree) const {
  DegreeSystem sys;
  sys.invariants = invariant_monomial_basis(block_, degree);
  sys.monomials = monomials_of_degree(block_.total(), degree);
  std::map<Monomial, std::size_t, GradedLexDescending> row_of;
  for (std::size_t r = 0; r < sys.monomials.size(); ++r) row_of.emplace(sys.monomials[r], r);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    for (std::size_t m = 0; m < sys.invariants.size(); ++m) {
      if (sys.invariants[m].degree + generators_[g].degree == degree) sys.columns.push_back({g, m});
    }
  }
  RationalMatrix a(sys.monomials.size(), sys.columns.size());
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    const Polynomial column = sys.invariants[sys.columns[c].invariant].value * generators_[sys.columns[c].generator].polynomial;
    for (const auto& [mono, coeff] : column.terms()) a(row_of.at(mono), c) = coeff;
  }
  sys.solver = std::make_unique<ExactSolver>(a);
  sys.certificate = {degree, sys.monomials.size(), sys.columns.size(), sys.solver->rank()};
  return sys;
}

DecompositionResult Decomposer::decompose(const Polynomial& f) const {
  if (f.ambient() != block_.total()) throw InvalidInput("polynomial ambient does not match the block structure");
  if (f.degree() > max_degree_) {
    throw InvalidInput("degree " + std::to_string(f.degree()) + " exceeds the prepared bound " + std::to_string(max_degree_));
  }
  DecompositionResult result;
  result.input = f;
  if (f.is_zero()) return result;
  for (const auto& g : generators_) result.terms.push_back({g.key, g.polynomial, Polynomial(block_.total())});
  for (int d = 0; d <= f.degree(); ++d) {
    const Polynomial part = f.homogeneous_part(d);
    if (part.is_zero()) continue;
    const DegreeSystem& sys = systems_[static_cast<std::size_t>(d)];
    const std::string instance = "degree=" + std::to_string(d) + ";f=" + to_string(f);
    if (!sys.certificate.full_column_rank()) {
      throw Falsification("decompose", instance,
                          "rank " + std::to_string(sys.certificate.rank) + " < " + std::to_string(sys.certificate.cols) +
                              " columns (non-unique decomposition)");
    }
    std::vector<Rational> b(sys.monomials.size(), 0);
    for (std::size_t r = 0; r < sys.monomials.size(); ++r) b[r] = part.coefficient(sys.monomials[r]);
    auto x = sys.solver->solve(b);
    if (!x) throw Falsification("decompose", instance, "homogeneous part is outside the span of the generators");
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
      if ((*x)[c] == 0) continue;
      result.terms[sys.columns[c].generator].coefficient += sys.invariants[sys.columns[c].invariant].value * (*x)[c];
    }
  }
  return result;
}

DecompositionResult decompose(const BlockStructure& block, const Polynomial& f) {
  return Decomposer(block, std::max(f.degree(), 0)).decompose(f);
}

Polynomial reconstruct(const DecompositionResult& result) {
  Polynomial out(result.input.ambient());
  for (const auto& t : result.terms) {
    if (!t.coefficient.is_zero()) out += t.coefficient * t.generator;
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiplicityTable multiplicity_table(const BlockStructure& block, long long max_group_order) {
  MultiplicityTable table;
  table.group_order = block_group_order(block);
  if (table.group_order > max_group_order) {
    throw BoundExceeded("group order " + std::to_string(table.group_order) + " exceeds bound " +
                        std::to_string(max_group_order));
  }
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    MultiplicityRow row{diagram, 1, static_cast<long long>(enumerate_NST(diagram).size())};
    for (const auto& p : diagram.components) row.f *= count_standard(p);
    if (row.f != row.nst_count) {
      throw Falsification("multiplicity_table", "lambda=" + to_string(diagram),
                          "f = " + std::to_string(row.f) + " but |NST| = " + std::to_string(row.nst_count));
    }
    table.sum_of_squares += row.f * row.f;
    table.rows.push_back(std::move(row));
  }
  if (table.sum_of_squares != table.group_order) {
    throw Falsification("multiplicity_table", "blocks=" + to_string(block),
                        "sum of squares " + std::to_string(table.sum_of_squares) + " != " + std::to_string(table.group_order));
  }
  return table;
}

IsotypicProjector::IsotypicProjector(const BlockStructure& block, long long max_group_order) : block_(block) {
  if (block_group_order(block) > max_group_order) {
    throw BoundExceeded("group order " + std::to_string(block_group_order(block)) + " exceeds bound " +
                        std::to_string(max_group_order));
  }
  group_ = block_group_elements(block);
  std::map<Permutation, std::size_t> position;
  for (std::size_t k = 0; k < group_.size(); ++k) position.emplace(group_[k], k);
  for (const auto& g : group_) inverse_index_.push_back(position.at(g.inverse()));
  diagrams_ = enumerate_r_diagrams(block);
  for (const auto& diagram : diagrams_) {
    const auto basis = module_basis(diagram, canonical_tableau(diagram));
    characters_.emplace(diagram, character(basis.vectors, group_));
    dimensions_.emplace(diagram, static_cast<long long>(basis.vectors.size()));
  }
}

const std::vector<Rational>& IsotypicProjector::character_of(const MultiDiagram& diagram) const {
  auto it = characters_.find(diagram);
  if (it == characters_.end()) throw InvalidInput("diagram " + to_string(diagram) + " does not match the blocks");
  return it->second;
}

Polynomial IsotypicProjector::project(const MultiDiagram& diagram, const Polynomial& f) const {
  const auto& chi = character_of(diagram);
  const Rational scale = Rational(static_cast<long>(dimensions_.at(diagram))) / Rational(static_cast<long>(group_.size()));
  Polynomial out(f.ambient());
  for (std::size_t k = 0; k < group_.size(); ++k) {
    const Rational c = chi[inverse_index_[k]] * scale;
    if (c == 0) continue;
    for (const auto& [m, coeff] : f.terms()) out.add_term(m.permuted(group_[k]), c * coeff);
  }
  return out;
}

Polynomial isotypic_projection(const MultiDiagram& diagram, const Polynomial& f, long long max_group_order) {
  return IsotypicProjector(diagram.block, max_group_order).project(diagram, f);
}

std::size_t one_dimensionality_check(const MultiDiagram& diagram, const MultiTableau& T) {
  const auto basis = module_basis(diagram, canonical_tableau(diagram));
  const auto e = product_symmetrizer(T);
  std::vector<Polynomial> images;
  for (const auto& v : basis.vectors) images.push_back(apply_element(e, v));
  const std::size_t r = polynomial_rank(images);
  if (r != 1) {
    throw Falsification("one_dimensionality", "lambda=" + to_string(diagram) + ";T=" + to_string(T),
                        "rank of e_T V is " + std::to_string(r));
  }
  return r;
}

FullEntryReading full_entry_reading(const BlockStructure& block) {
  FullEntryReading out;
  out.free_rank = block_group_order(block);
  std::vector<Polynomial> polys;
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    const auto st = enumerate_ST(diagram);
    for (const auto& T : enumerate_NST(diagram)) {
      const auto e = product_symmetrizer(T);
      for (const auto& S : st) polys.push_back(apply_element(e, specht_monomial(T, S, IndexMode::global)));
    }
  }
  out.generator_count = polys.size();
  out.linear_rank = polynomial_rank(polys);
  return out;
}

}  // namespace hspecht
