#include "hspecht/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace hspecht {

namespace {

using Records = std::vector<CheckRecord>;

CheckRecord verdict(std::string check, std::string instance, bool ok, std::string witness) {
  return {std::move(check), std::move(instance), ok ? "pass" : "fail", std::move(witness)};
}

// Runs one instance, turning falsifications into fail records and bound
// violations into skipped records.
void guarded(Records& out, const std::string& check, const std::string& instance,
             const std::function<CheckRecord()>& body) {
  try {
    out.push_back(body());
  } catch (const Falsification& f) {
    out.push_back({check, f.instance().empty() ? instance : f.instance(), "fail", f.witness()});
  } catch (const BoundExceeded& e) {
    out.push_back({check, instance, "skipped", e.what()});
  }
}

std::string blocks_instance(const BlockStructure& block) { return "blocks=" + to_string(block); }

std::string diagram_instance(const MultiDiagram& d) { return "lambda=" + to_string(d); }

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long long f_lambda(const MultiDiagram& d) {
  long long f = 1;
  for (const auto& p : d.components) f *= count_standard(p);
  return f;
}

void require_group_bound(const BlockStructure& block, const VerifyOptions& options) {
  if (block_group_order(block) > options.max_group_order) {
    throw BoundExceeded("group order " + std::to_string(block_group_order(block)) + " exceeds bound " +
                        std::to_string(options.max_group_order));
  }
}

std::vector<DifferentialOperator> second_order_family(const BlockStructure& block) {
  std::vector<DifferentialOperator> out;
  for (int i = 0; i < block.count(); ++i) {
    DifferentialOperator op(block.total());
    for (int j : block.range(i)) op += DifferentialOperator::partial(block.total(), j, 2);
    out.push_back(std::move(op));
  }
  return out;
}

std::string operator_instance(const DifferentialOperator& op) { return "D=" + to_string(op); }

}  // namespace

void VerifyOptions::validate() const {
  if (max_n < 1 || max_n > max_n_ceiling) {
    throw InvalidInput("--max-n must lie in 1.." + std::to_string(max_n_ceiling) + ", got " + std::to_string(max_n));
  }
  if (max_degree < 0 || max_degree > max_degree_ceiling) {
    throw InvalidInput("--max-degree must lie in 0.." + std::to_string(max_degree_ceiling) + ", got " +
                       std::to_string(max_degree));
  }
  if (max_group_order < 1 || max_group_order > max_group_order_ceiling) {
    throw InvalidInput("--max-group-order must lie in 1.." + std::to_string(max_group_order_ceiling) + ", got " +
                       std::to_string(max_group_order));
  }
  if (samples < 0) throw InvalidInput("--samples must be non-negative");
  if (random_operators < 0) throw InvalidInput("random operator count must be non-negative");
}

bool VerifyReport::ok() const { return count("fail") == 0; }

std::size_t VerifyReport::count(const std::string& status) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"combinatorics", "idempotent", "module",   "divisibility", "image",
                                              "decomposition", "counting",   "one-dim", "isotypic",     "all"};
  return names;
}

// ---------------------------------------------------------------------------

Records verify_combinatorics(const BlockStructure& block, const VerifyOptions&) {
  Records out;
  const int n = block.total();
  long long block_factorials = 1;
  for (int s : block.sizes()) block_factorials *= factorial(s);
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    const std::string instance = diagram_instance(diagram);
    guarded(out, "hook_length", instance, [&] {
      std::string witness;
      bool ok = true;
      for (int i = 0; i < block.count(); ++i) {
        const auto& p = diagram.components[static_cast<std::size_t>(i)];
        const auto counted = static_cast<long long>(enumerate_standard_tableaux(p, block.range(i)).size());
        witness += (witness.empty() ? "" : ", ") + to_string(p) + ": " + std::to_string(counted);
        ok = ok && counted == count_standard(p);
      }
      return verdict("hook_length", instance, ok, witness);
    });
    guarded(out, "tableau_counts", instance, [&] {
      const auto nst = enumerate_NST(diagram);
      const auto st = enumerate_ST(diagram);
      const long long f = f_lambda(diagram);
      const long long st_expected = factorial(n) / block_factorials * f;
      bool ok = static_cast<long long>(nst.size()) == f && static_cast<long long>(st.size()) == st_expected;
      for (const auto& t : nst) ok = ok && t.is_standard() && t.is_natural();
      for (const auto& t : st) ok = ok && t.is_standard();
      return verdict("tableau_counts", instance, ok,
                     "|NST|=" + std::to_string(nst.size()) + " |ST|=" + std::to_string(st.size()) +
                         " f=" + std::to_string(f));
    });
  }
  if (block == BlockStructure({5, 3})) {
    guarded(out, "index_golden", "T=[[1,4,6],[2,7]]|[[3,8],[5]]", [&] {
      const auto t = parse_multi_tableau("[[1,4,6],[2,7]]|[[3,8],[5]]", block);
      const auto index = index_tableau(t);
      const IndexTableau expected{{{{0, 2, 3}, {1, 4}}, {{1, 4}, {2}}}};
      return verdict("index_golden", "T=" + to_string(t), index == expected,
                     "w(T)=" + to_string(word(t)) + " i(T)=" + to_string(index));
    });
  }
  return out;
}

Records verify_idempotents(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  const std::string instance = blocks_instance(block);
  IdempotentReport report;
  try {
    report = idempotent_report(block, options.max_group_order);
  } catch (const BoundExceeded& e) {
    out.push_back({"idempotent", instance, "skipped", e.what()});
    return out;
  }
  for (std::size_t a = 0; a < report.tableaux.size(); ++a) {
    out.push_back(verdict("idempotent", "T=" + to_string(report.tableaux[a]), report.idempotent[a],
                          report.idempotent[a] ? "e_T*e_T = e_T" : "e_T*e_T != e_T"));
  }
  std::string cross_witness;
  std::size_t same_nonzero = 0;
  std::size_t same_pairs = 0;
  std::string same_witness;
  for (std::size_t a = 0; a < report.tableaux.size(); ++a) {
    for (std::size_t b = 0; b < report.tableaux.size(); ++b) {
      const bool same = report.tableaux[a].shape() == report.tableaux[b].shape();
      if (!same && report.product_nonzero[a][b] && cross_witness.empty()) {
        cross_witness = "e_T1*e_T2 != 0 for T1=" + to_string(report.tableaux[a]) + ", T2=" + to_string(report.tableaux[b]);
      }
      if (same && a != b) {
        ++same_pairs;
        if (report.product_nonzero[a][b]) {
          ++same_nonzero;
          if (same_witness.size() < 400) {
            same_witness += " (" + to_string(report.tableaux[a]) + ")*(" + to_string(report.tableaux[b]) + ")";
          }
        }
      }
    }
  }
  out.push_back(verdict("cross_shape_orthogonality", instance, cross_witness.empty(),
                        cross_witness.empty() ? "all products of different shapes vanish" : cross_witness));
  out.push_back({"same_shape_products", instance, "info",
                 std::to_string(same_nonzero) + " of " + std::to_string(same_pairs) +
                     " ordered same-shape pairs have nonzero product" + (same_nonzero ? ":" + same_witness : "")});
  const bool small = std::all_of(block.sizes().begin(), block.sizes().end(), [](int s) { return s <= 4; });
  std::string sum_witness = "sum of e_T = 1";
  if (!report.sums_to_identity) {
    const auto defect = report.sum - GroupAlgebraElement::identity(block);
    sum_witness = "sum of e_T - 1 has " + std::to_string(defect.support().size()) + " terms, first " +
                  to_string(defect.support().begin()->first) + " with coefficient " +
                  to_string(defect.support().begin()->second);
  }
  if (small) {
    out.push_back(verdict("sum_to_identity", instance, report.sums_to_identity, sum_witness));
  } else {
    out.push_back({"sum_to_identity", instance, "info", sum_witness});
  }
  guarded(out, "symmetrizer_factors_commute", instance, [&] {
    std::string witness;
    for (const auto& t : report.tableaux) {
      std::vector<GroupAlgebraElement> factors;
      for (const auto& c : t.components) factors.push_back(young_symmetrizer(c, block));
      for (std::size_t i = 0; i < factors.size() && witness.empty(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
          if (!(factors[i] * factors[j] == factors[j] * factors[i])) {
            witness = "factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " of " + to_string(t);
            break;
          }
        }
      }
    }
    return verdict("symmetrizer_factors_commute", instance, witness.empty(),
                   witness.empty() ? "block factors commute" : witness);
  });
  return out;
}

Records verify_modules(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  const auto group = block_group_order(block) <= options.max_group_order ? block_group_elements(block)
                                                                         : std::vector<Permutation>{};
  std::vector<std::pair<MultiDiagram, std::vector<Rational>>> characters;
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    for (const auto& S : enumerate_NST(diagram)) {
      const std::string instance = diagram_instance(diagram) + ";S=" + to_string(S);
      guarded(out, "irreducible_module", instance, [&] {
        const auto basis = module_basis(diagram, S);
        require_group_bound(block, options);
        const auto chi = character(basis.vectors, group);
        const Rational norm = character_inner_product(chi, chi, group);
        if (S == canonical_tableau(diagram)) characters.emplace_back(diagram, chi);
        return verdict("irreducible_module", instance, norm == 1,
                       "dim=" + std::to_string(basis.vectors.size()) + " <chi,chi>=" + to_string(norm));
      });
    }
    for (const auto& T : enumerate_NST(diagram)) {
      const std::string instance = diagram_instance(diagram) + ";T=" + to_string(T);
      guarded(out, "classical_proportionality", instance, [&] {
        const Rational c = proportionality_constant(T);
        return verdict("classical_proportionality", instance, c != 0, "F_T^S0 = " + to_string(c) + " * F_T");
      });
    }
  }
  if (!group.empty()) {
    guarded(out, "character_orthogonality", blocks_instance(block), [&] {
      std::string witness;
      for (std::size_t a = 0; a < characters.size(); ++a) {
        for (std::size_t b = a + 1; b < characters.size(); ++b) {
          const Rational ip = character_inner_product(characters[a].second, characters[b].second, group);
          if (ip != 0 && witness.empty()) {
            witness = "<chi_" + to_string(characters[a].first) + ", chi_" + to_string(characters[b].first) +
                      "> = " + to_string(ip);
          }
        }
      }
      return verdict("character_orthogonality", blocks_instance(block), witness.empty(),
                     witness.empty() ? std::to_string(characters.size()) + " pairwise orthogonal characters" : witness);
    });
  }
  return out;
}

std::vector<DifferentialOperator> derivation_family(const BlockStructure& block, const VerifyOptions& options) {
  const int n = block.total();
  std::vector<DifferentialOperator> base;
  for (int i = 0; i < block.count(); ++i) {
    for (int k = 0; k <= 3; ++k) base.push_back(invariant_derivation(block, i, k));
  }
  std::vector<DifferentialOperator> out{DifferentialOperator::identity(n)};
  out.insert(out.end(), base.begin(), base.end());
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(base.size()) - 1);
  std::uniform_int_distribution<int> terms(2, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int r = 0; r < options.random_operators; ++r) {
    DifferentialOperator op(n);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
      int a = 0;
      while (a == 0) a = num(rng);
      op += base[static_cast<std::size_t>(pick(rng))] * fraction(a, den(rng));
    }
    if (op.is_zero()) op = base.front();
    out.push_back(std::move(op));
  }
  return out;
}

Records verify_divisibility(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  const auto keys = enumerate_keys(block);
  for (const auto& op : derivation_family(block, options)) {
    const std::string instance = operator_instance(op);
    guarded(out, "divisibility", instance, [&] {
      std::size_t zero = 0;
      for (const auto& key : keys) {
        try {
          if (divisibility_witness(op, key).zero_image) ++zero;
        } catch (const Falsification& f) {
          throw Falsification("divisibility", instance + ";" + to_string(key), f.witness());
        }
      }
      return verdict("divisibility", instance, true,
                     std::to_string(keys.size()) + " keys, " + std::to_string(zero) + " zero images");
    });
  }
  for (const auto& op : second_order_family(block)) {
    const std::string instance = operator_instance(op);
    std::size_t divisible = 0;
    std::size_t zero = 0;
    std::string first_failure;
    for (const auto& key : keys) {
      try {
        if (divisibility_witness(op, key).zero_image) {
          ++zero;
        } else {
          ++divisible;
        }
      } catch (const Falsification& f) {
        if (first_failure.empty()) first_failure = "; first failure at " + to_string(key) + ": " + f.witness();
      }
    }
    out.push_back({"second_order_divisibility", instance, "info",
                   std::to_string(divisible) + " divisible, " + std::to_string(zero) + " zero, " +
                       std::to_string(keys.size() - divisible - zero) + " not divisible" + first_failure});
  }
  return out;
}

Records verify_images(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  auto family = derivation_family(block, options);
  for (auto& op : second_order_family(block)) family.push_back(std::move(op));
  const auto diagrams = enumerate_r_diagrams(block);
  for (const auto& op : family) {
    const std::string instance = operator_instance(op);
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::optional<CheckRecord> failure;
    for (const auto& diagram : diagrams) {
      for (const auto& S : enumerate_NST(diagram)) {
        const auto report = image_module_check(op, diagram, S);
        if (report.status == CheckStatus::passed) ++passed;
        if (report.status == CheckStatus::skipped) ++skipped;
        if (report.status == CheckStatus::failed && !failure) {
          failure = CheckRecord{"image_module", instance + ";" + report.instance, "fail", report.witness};
        }
      }
    }
    if (failure) {
      out.push_back(*failure);
    } else {
      out.push_back({"image_module", instance, passed > 0 ? "pass" : "skipped",
                     std::to_string(passed) + " modules checked, " + std::to_string(skipped) +
                         " skipped (some image is zero)"});
    }
  }
  return out;
}

Records verify_decomposition(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  const std::string instance = blocks_instance(block);
  int top = 0;
  for (int s : block.sizes()) top += s * (s - 1) / 2;
  guarded(out, "graded_rank_series", instance, [&] {
    const auto series = graded_rank_series(block, top);
    return verdict("graded_rank_series", instance, true, to_string(series));
  });
  std::optional<Decomposer> decomposer;
  try {
    decomposer.emplace(block, options.max_degree);
  } catch (const Falsification& f) {
    out.push_back({"decomposition", instance, "fail", f.witness()});
    return out;
  }
  for (int d = 0; d <= options.max_degree; ++d) {
    const auto& c = decomposer->certificate(d);
    out.push_back(verdict("full_column_rank", instance + ";degree=" + std::to_string(d),
                          c.full_column_rank() && c.spanning(),
                          "rows=" + std::to_string(c.rows) + " cols=" + std::to_string(c.cols) +
                              " rank=" + std::to_string(c.rank)));
  }
  guarded(out, "round_trip", instance, [&] {
    std::mt19937_64 rng(options.seed);
    const auto gens = block_group_generators(block);
    for (int k = 0; k < options.samples; ++k) {
      const Polynomial f = random_polynomial(block.total(), options.max_degree, 6, rng);
      const auto result = decomposer->decompose(f);
      if (reconstruct(result) != f) {
        throw Falsification("round_trip", instance + ";f=" + to_string(f), "reconstruction differs from input");
      }
      for (const auto& t : result.terms) {
        if (!is_invariant(t.coefficient, gens)) {
          throw Falsification("round_trip", instance + ";f=" + to_string(f),
                              "coefficient of " + to_string(t.key) + " is not invariant: " + to_string(t.coefficient));
        }
      }
    }
    return verdict("round_trip", instance, true,
                   std::to_string(options.samples) + " random polynomials of degree <= " +
                       std::to_string(options.max_degree) + " reconstructed exactly");
  });
  if (block_group_order(block) <= options.max_group_order) {
    const auto reading = full_entry_reading(block);
    out.push_back({"full_entry_reading", instance, "info",
                   std::to_string(reading.generator_count) + " generators, rank " +
                       std::to_string(reading.linear_rank) + " over Q, free rank " +
                       std::to_string(reading.free_rank)});
  }
  return out;
}

Records verify_counting(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  const std::string instance = blocks_instance(block);
  guarded(out, "multiplicity_table", instance, [&] {
    const auto table = multiplicity_table(block, options.max_group_order);
    return verdict("multiplicity_table", instance, true,
                   "sum (f^lambda)^2 = " + std::to_string(table.sum_of_squares) + " = " +
                       std::to_string(table.group_order));
  });
  guarded(out, "key_count", instance, [&] {
    long long total = 0;
    for (const auto& diagram : enumerate_r_diagrams(block)) {
      const auto nst = static_cast<long long>(enumerate_NST(diagram).size());
      total += nst * nst;
    }
    const auto keys = static_cast<long long>(enumerate_keys(block).size());
    const long long order = block_group_order(block);
    return verdict("key_count", instance, total == order && keys == order,
                   "sum |NST|*|S| = " + std::to_string(total) + ", keys = " + std::to_string(keys) +
                       ", group order = " + std::to_string(order));
  });
  return out;
}

Records verify_one_dimensionality(const BlockStructure& block, const VerifyOptions&) {
  Records out;
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    for (const auto& T : enumerate_NST(diagram)) {
      const std::string instance = diagram_instance(diagram) + ";T=" + to_string(T);
      guarded(out, "one_dimensional", instance, [&] {
        const auto r = one_dimensionality_check(diagram, T);
        return verdict("one_dimensional", instance, r == 1, "rank " + std::to_string(r));
      });
    }
  }
  return out;
}

Records verify_isotypic(const BlockStructure& block, const VerifyOptions& options) {
  Records out;
  const std::string instance = blocks_instance(block);
  std::optional<IsotypicProjector> projector;
  try {
    projector.emplace(block, options.max_group_order);
  } catch (const BoundExceeded& e) {
    out.push_back({"isotypic", instance, "skipped", e.what()});
    return out;
  }
  const int degree = std::min(options.max_degree, 3);
  const Decomposer decomposer(block, degree);
  std::vector<DifferentialOperator> derivations;
  for (int i = 0; i < block.count(); ++i) {
    for (int k = 0; k <= 3; ++k) derivations.push_back(invariant_derivation(block, i, k));
  }
  std::mt19937_64 rng(options.seed + 1);
  const int samples = std::min(options.samples, 3);
  std::vector<Polynomial> inputs;
  for (int k = 0; k < samples; ++k) inputs.push_back(random_polynomial(block.total(), degree, 5, rng));

  guarded(out, "isotypic_projectors", instance, [&] {
    for (const auto& f : inputs) {
      const std::string where = instance + ";f=" + to_string(f);
      Polynomial total(block.total());
      for (const auto& lambda : projector->diagrams()) {
        const Polynomial p = projector->project(lambda, f);
        total += p;
        if (projector->project(lambda, p) != p) {
          throw Falsification("isotypic_projectors", where, "projection onto " + to_string(lambda) + " is not idempotent");
        }
        for (const auto& mu : projector->diagrams()) {
          if (mu != lambda && !projector->project(mu, p).is_zero()) {
            throw Falsification("isotypic_projectors", where,
                                "projections onto " + to_string(lambda) + " and " + to_string(mu) + " do not annihilate");
          }
        }
        for (const auto& t : decomposer.decompose(p).terms) {
          if (!t.coefficient.is_zero() && t.key.diagram != lambda) {
            throw Falsification("isotypic_projectors", where,
                                "projection onto " + to_string(lambda) + " has a coefficient on " + to_string(t.key));
          }
        }
      }
      if (total != f) throw Falsification("isotypic_projectors", where, "projections do not sum to f");
    }
    return verdict("isotypic_projectors", instance, true,
                   std::to_string(inputs.size()) + " samples: idempotent, orthogonal, complete, supported on lambda");
  });
  guarded(out, "isotypic_compatibility", instance, [&] {
    for (const auto& op : derivations) {
      for (const auto& f : inputs) {
        const Polynomial df = apply_operator(op, f);
        for (const auto& lambda : projector->diagrams()) {
          if (projector->project(lambda, df) != apply_operator(op, projector->project(lambda, f))) {
            throw Falsification("isotypic_compatibility",
                                instance + ";" + operator_instance(op) + ";lambda=" + to_string(lambda) +
                                    ";f=" + to_string(f),
                                "projection does not commute with the operator");
          }
        }
      }
    }
    return verdict("isotypic_compatibility", instance, true,
                   std::to_string(derivations.size()) + " invariant derivations commute with every projector");
  });
  return out;
}

// ---------------------------------------------------------------------------

VerifyReport run_suite(const BlockStructure& block, const std::string& suite, const VerifyOptions& options) {
  options.validate();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidInput("unknown suite '" + suite + "'");
  }
  if (block.total() > options.max_n) {
    throw BoundExceeded("n = " + std::to_string(block.total()) + " exceeds --max-n " + std::to_string(options.max_n));
  }
  using Runner = Records (*)(const BlockStructure&, const VerifyOptions&);
  const std::vector<std::pair<std::string, Runner>> runners{
      {"combinatorics", verify_combinatorics}, {"idempotent", verify_idempotents},
      {"module", verify_modules},              {"divisibility", verify_divisibility},
      {"image", verify_images},                {"decomposition", verify_decomposition},
      {"counting", verify_counting},           {"one-dim", verify_one_dimensionality},
      {"isotypic", verify_isotypic}};
  VerifyReport report{block, suite, {}};
  for (const auto& [name, runner] : runners) {
    if (suite != "all" && suite != name) continue;
    auto records = runner(block, options);
    std::move(records.begin(), records.end(), std::back_inserter(report.records));
  }
  return report;
}

Json to_json(const CheckRecord& r) {
  return {{"check", r.check}, {"instance", r.instance}, {"status", r.status}, {"witness", r.witness}};
}

Json to_json(const VerifyReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"blocks", to_json(r.block)},
          {"suite", r.suite},
          {"ok", r.ok()},
          {"summary",
           {{"pass", r.count("pass")}, {"fail", r.count("fail")}, {"skipped", r.count("skipped")}, {"info", r.count("info")}}},
          {"records", records}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    out << rec.status << "  " << rec.check << "  " << rec.instance;
    if (!rec.witness.empty()) out << "  : " << rec.witness;
    out << '\n';
  }
  out << (r.ok() ? "OK" : "FAILED") << " blocks=" << to_string(r.block) << " suite=" << r.suite << " pass=" << r.count("pass")
      << " fail=" << r.count("fail") << " skipped=" << r.count("skipped") << " info=" << r.count("info") << '\n';
  return out.str();
}

}  // namespace hspecht
