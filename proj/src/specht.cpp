#include "hspecht/specht.hpp"

namespace hspecht {

std::string to_string(const HigherSpechtKey& key) {
  return "lambda=" + to_string(key.diagram) + ";T=" + to_string(key.T) + ";S=" + to_string(key.S);
}

namespace {

void require_same_shape(const MultiTableau& T, const MultiTableau& S) {
  if (T.block != S.block || T.shape() != S.shape()) {
    throw InvalidInput("tableaux " + to_string(T) + " and " + to_string(S) + " differ in shape");
  }
}

void require_key(const MultiTableau& T, const MultiTableau& S) {
  require_same_shape(T, S);
  if (!T.is_natural()) throw InvalidInput("T must be natural standard, got " + to_string(T));
  if (!S.is_natural()) throw InvalidInput("S must be block-respecting standard, got " + to_string(S));
}

Monomial monomial_from_boxes(const MultiTableau& T, const IndexTableau& index, int only_block) {
  const int n = T.block.total();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < T.components.size(); ++i) {
    if (only_block >= 0 && static_cast<int>(i) != only_block) continue;
    const auto& rows = T.components[i].rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        exps[static_cast<std::size_t>(rows[r][c] - 1)] = index.components[i][r][c];
      }
    }
  }
  return Monomial(std::move(exps));
}

}  // namespace

Polynomial specht_monomial(const MultiTableau& T, const MultiTableau& S, IndexMode mode) {
  require_same_shape(T, S);
  const IndexTableau index = mode == IndexMode::global ? index_tableau(S) : block_index_tableau(S);
  return Polynomial::from_monomial(monomial_from_boxes(T, index, -1));
}

Polynomial higher_specht(const MultiTableau& T, const MultiTableau& S) {
  require_key(T, S);
  return apply_element(product_symmetrizer(T), specht_monomial(T, S, IndexMode::per_block));
}

Polynomial higher_specht(const HigherSpechtKey& key) { return higher_specht(key.T, key.S); }

Polynomial higher_specht_block(const MultiTableau& T, const MultiTableau& S, int block) {
  require_key(T, S);
  const auto monomial = monomial_from_boxes(T, block_index_tableau(S), block);
  const auto e = young_symmetrizer(T.components.at(static_cast<std::size_t>(block)), T.block);
  return apply_element(e, Polynomial::from_monomial(monomial));
}

Polynomial specht_generator(const MultiTableau& T) { return higher_specht(T, canonical_tableau(T.shape())); }

Polynomial classical_specht(const MultiTableau& T) {
  const int n = T.block.total();
  Polynomial p = Polynomial::constant(n, 1);
  for (const auto& comp : T.components) {
    for (const auto& col : comp.columns()) {
      for (std::size_t upper = 0; upper < col.size(); ++upper) {
        for (std::size_t lower = upper + 1; lower < col.size(); ++lower) {
          p = p * (Polynomial::variable(n, col[lower]) - Polynomial::variable(n, col[upper]));
        }
      }
    }
  }
  return p;
}

Rational proportionality_constant(const MultiTableau& T) {
  const Polynomial higher = specht_generator(T);
  const Polynomial classical = classical_specht(T);
  const auto& [m, c] = classical.leading_term();
  const Rational ratio = higher.coefficient(m) / c;
  if (ratio == 0 || higher != classical * ratio) {
    throw Falsification("proportionality", "lambda=" + to_string(T.shape()) + ";T=" + to_string(T),
                        "F_T^S0 = " + to_string(higher) + " is not a multiple of " + to_string(classical));
  }
  return ratio;
}

std::vector<HigherSpechtKey> enumerate_keys(const BlockStructure& block) {
  std::vector<HigherSpechtKey> keys;
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    const auto nst = enumerate_NST(diagram);
    for (const auto& T : nst) {
      for (const auto& S : nst) keys.push_back({diagram, T, S});
    }
  }
  return keys;
}

RepresentationBasis module_basis(const MultiDiagram& diagram, const MultiTableau& S) {
  const std::string instance = "lambda=" + to_string(diagram) + ";S=" + to_string(S);
  RepresentationBasis basis{diagram, S, enumerate_NST(diagram), {}};
  for (const auto& T : basis.T) {
    Polynomial f = higher_specht(T, S);
    if (f.is_zero()) throw Falsification("module_basis", instance + ";T=" + to_string(T), "F_T^S is zero");
    basis.vectors.push_back(std::move(f));
  }
  const PolynomialSpan span(basis.vectors);
  if (!span.independent()) {
    throw Falsification("module_basis", instance,
                        "rank " + std::to_string(span.dimension()) + " < " + std::to_string(basis.vectors.size()));
  }
  long long expected = 1;
  for (const auto& p : diagram.components) expected *= count_standard(p);
  if (static_cast<long long>(span.dimension()) != expected) {
    throw Falsification("module_basis", instance,
                        "dimension " + std::to_string(span.dimension()) + " != " + std::to_string(expected));
  }
  for (const auto& g : block_group_generators(diagram.block)) {
    for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
      if (!span.contains(permute(g, basis.vectors[j]))) {
        throw Falsification("module_basis", instance + ";T=" + to_string(basis.T[j]),
                            "image under " + to_string(g) + " leaves the span");
      }
    }
  }
  return basis;
}

std::vector<RationalMatrix> representation_matrices(std::span<const Polynomial> basis,
                                                    std::span<const Permutation> perms) {
  const PolynomialSpan span(std::vector<Polynomial>(basis.begin(), basis.end()));
  std::vector<RationalMatrix> out;
  out.reserve(perms.size());
  for (const auto& g : perms) {
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto coords = span.coordinates(permute(g, basis[j]));
      if (!coords) {
        throw Falsification("representation_matrices", "perm=" + to_string(g) + ";v=" + to_string(basis[j]),
                            "image leaves the span");
      }
      for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = (*coords)[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<RationalMatrix> representation_matrices(const RepresentationBasis& basis,
                                                    std::span<const Permutation> perms) {
  return representation_matrices(basis.vectors, perms);
}

std::vector<Rational> character(std::span<const Polynomial> basis, std::span<const Permutation> group) {
  const PolynomialSpan span(std::vector<Polynomial>(basis.begin(), basis.end()));
  std::vector<Rational> chi;
  chi.reserve(group.size());
  for (const auto& g : group) {
    Rational trace = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto coords = span.coordinates(permute(g, basis[j]));
      if (!coords) {
        throw Falsification("character", "perm=" + to_string(g) + ";v=" + to_string(basis[j]),
                            "image leaves the span");
      }
      trace += (*coords)[j];
    }
    chi.push_back(trace);
  }
  return chi;
}

Rational character_inner_product(std::span<const Rational> chi, std::span<const Rational> psi,
                                 std::span<const Permutation> group) {
  std::map<Permutation, std::size_t> position;
  for (std::size_t k = 0; k < group.size(); ++k) position.emplace(group[k], k);
  Rational total = 0;
  for (std::size_t k = 0; k < group.size(); ++k) total += chi[k] * psi[position.at(group[k].inverse())];
  return total / Rational(static_cast<long>(group.size()));
}

Rational character_norm(std::span<const Polynomial> basis, const BlockStructure& block, long long max_group_order) {
  if (block_group_order(block) > max_group_order) {
    throw BoundExceeded("group order " + std::to_string(block_group_order(block)) + " exceeds bound " +
                        std::to_string(max_group_order));
  }
  const auto group = block_group_elements(block);
  const auto chi = character(basis, group);
  return character_inner_product(chi, chi, group);
}

bool irreducibility_check(std::span<const Polynomial> basis, const BlockStructure& block, long long max_group_order) {
  return character_norm(basis, block, max_group_order) == 1;
}

bool irreducibility_check(const RepresentationBasis& basis, long long max_group_order) {
  return irreducibility_check(basis.vectors, basis.diagram.block, max_group_order);
}

std::vector<BlockFactor> identify_tensor(const HigherSpechtKey& key) {
  std::vector<BlockFactor> factors;
  Polynomial product = Polynomial::constant(key.T.block.total(), 1);
  for (int i = 0; i < key.T.block.count(); ++i) {
    Polynomial f = higher_specht_block(key.T, key.S, i);
    product = product * f;
    factors.push_back({i, key.T.components[static_cast<std::size_t>(i)], key.S.components[static_cast<std::size_t>(i)],
                       std::move(f)});
  }
  const Polynomial whole = higher_specht(key);
  if (product != whole) {
    throw Falsification("identify_tensor", to_string(key),
                        "block product " + to_string(product) + " != " + to_string(whole));
  }
  return factors;
}

}  // namespace hspecht
