#include "hspecht/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "hspecht/verify.hpp"

namespace hspecht::cli {

namespace {

struct Flags {
  std::string blocks;
  std::string diagram;
  std::string tableau;
  std::string index_source;
  std::string poly;
  std::string op;
  std::string format;
  std::string kind = "nst";
  std::string suite = "all";
  bool canonical = false;
  bool classical = false;
  bool show_index = false;
  bool per_block = false;
  int max_degree = -1;
  VerifyOptions verify;
};

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool json_format(const Flags& f, bool json_default) {
  return f.format.empty() ? json_default : f.format == "json";
}

BlockStructure blocks_of(const Flags& f) {
  if (f.blocks.empty()) throw InvalidInput("--blocks is required");
  return parse_blocks(f.blocks);
}

IndexTableau index_of(const MultiTableau& t, bool per_block) {
  return per_block ? block_index_tableau(t) : index_tableau(t);
}

int cmd_tableaux(const Flags& f, std::ostream& out) {
  const BlockStructure block = blocks_of(f);
  const bool json = json_format(f, false);
  if (!f.tableau.empty()) {
    const MultiTableau t = parse_multi_tableau(f.tableau, block);
    if (!f.diagram.empty() && parse_diagram(f.diagram, block) != t.shape()) {
      throw InvalidInput("tableau " + f.tableau + " does not have shape " + f.diagram);
    }
    const IndexTableau index = index_of(t, f.per_block);
    if (json) {
      Json j{{"tableau", to_json(t)}, {"shape", to_json(t.shape())}, {"standard", t.is_standard()},
             {"natural", t.is_natural()}, {"word", word(t).letters}};
      if (f.show_index) j["index"] = to_json(index);
      write_json(out, j);
    } else {
      out << "T = " << to_string(t) << '\n';
      out << "w(T) = " << to_string(word(t)) << '\n';
      if (f.show_index) out << "i(T) = " << to_string(index) << '\n';
    }
    return exit_ok;
  }
  if (f.kind != "nst" && f.kind != "st") throw InvalidInput("unknown tableau kind '" + f.kind + "'");
  std::vector<MultiDiagram> diagrams;
  if (f.diagram.empty()) {
    diagrams = enumerate_r_diagrams(block);
  } else {
    diagrams.push_back(parse_diagram(f.diagram, block));
  }
  Json j = Json::array();
  for (const auto& d : diagrams) {
    const auto tableaux = f.kind == "nst" ? enumerate_NST(d) : enumerate_ST(d);
    if (!json) out << "lambda = " << to_string(d) << " (" << tableaux.size() << ")\n";
    Json list = Json::array();
    for (const auto& t : tableaux) {
      if (json) {
        Json entry{{"tableau", to_json(t)}, {"word", word(t).letters}};
        if (f.show_index) entry["index"] = to_json(index_of(t, f.per_block));
        list.push_back(std::move(entry));
      } else {
        out << "  " << to_string(t);
        if (f.show_index) out << "  i=" << to_string(index_of(t, f.per_block));
        out << '\n';
      }
    }
    if (json) j.push_back({{"diagram", to_json(d)}, {"kind", f.kind}, {"tableaux", list}});
  }
  if (json) write_json(out, j);
  return exit_ok;
}

int cmd_specht(const Flags& f, std::ostream& out) {
  const BlockStructure block = blocks_of(f);
  MultiTableau T;
  if (f.canonical) {
    if (f.diagram.empty()) throw InvalidInput("--canonical needs --diagram");
    T = canonical_tableau(parse_diagram(f.diagram, block));
  } else if (!f.tableau.empty()) {
    T = parse_multi_tableau(f.tableau, block);
  } else {
    throw InvalidInput("specht needs --tableau or --canonical");
  }
  const MultiDiagram shape = T.shape();
  if (!f.diagram.empty() && parse_diagram(f.diagram, block) != shape) {
    throw InvalidInput("tableau " + to_string(T) + " does not have shape " + f.diagram);
  }
  const MultiTableau S = f.index_source.empty() ? canonical_tableau(shape) : parse_multi_tableau(f.index_source, block);
  const Polynomial p = f.classical ? classical_specht(T) : higher_specht(T, S);
  if (json_format(f, false)) {
    Json j{{"diagram", to_json(shape)}, {"T", to_json(T)}};
    if (!f.classical) j["S"] = to_json(S);
    j["kind"] = f.classical ? "classical" : "higher";
    j["text"] = to_string(p);
    j["polynomial"] = to_json(p);
    write_json(out, j);
  } else {
    out << to_string(p) << '\n';
  }
  return exit_ok;
}

int cmd_decompose(const Flags& f, std::ostream& out) {
  const BlockStructure block = blocks_of(f);
  if (f.poly.empty()) throw InvalidInput("--poly is required");
  const Polynomial p = parse_polynomial(f.poly, block.total());
  const int degree = std::max({p.degree(), f.max_degree, 0});
  if (degree > VerifyOptions::max_degree_ceiling) {
    throw BoundExceeded("degree " + std::to_string(degree) + " exceeds the ceiling " +
                        std::to_string(VerifyOptions::max_degree_ceiling));
  }
  const auto result = Decomposer(block, degree).decompose(p);
  if (json_format(f, true)) {
    write_json(out, to_json(result));
  } else {
    for (const auto& t : result.terms) {
      if (t.coefficient.is_zero()) continue;
      out << "(" << to_string(t.coefficient) << ") * F[" << to_string(t.key) << "]\n";
    }
  }
  return exit_ok;
}

int cmd_apply_op(const Flags& f, std::ostream& out) {
  if (f.op.empty() || f.poly.empty()) throw InvalidInput("apply-op needs --op and --poly");
  int n = f.blocks.empty() ? std::max({max_variable_index(f.op), max_variable_index(f.poly), 1})
                           : parse_blocks(f.blocks).total();
  const DifferentialOperator op = parse_operator(f.op, n);
  const Polynomial p = parse_polynomial(f.poly, n);
  const Polynomial image = apply_operator(op, p);
  if (json_format(f, false)) {
    write_json(out, {{"operator", to_json(op)}, {"input", to_json(p)}, {"text", to_string(image)}, {"result", to_json(image)}});
  } else {
    out << to_string(image) << '\n';
  }
  return exit_ok;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const BlockStructure block = blocks_of(f);
  VerifyOptions options = f.verify;
  if (f.max_degree >= 0) options.max_degree = f.max_degree;
  const VerifyReport report = run_suite(block, f.suite, options);
  if (json_format(f, true)) {
    write_json(out, to_json(report));
  } else {
    out << to_text(report);
  }
  return report.ok() ? exit_ok : exit_falsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher Specht polynomials for products of symmetric groups", "hspecht"};
  app.require_subcommand(1);
  Flags f;
  const std::vector<std::string> formats{"text", "json"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_blocks = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--blocks", f.blocks, "Block sizes, e.g. 2,1");
    if (required) opt->required();
  };

  auto* tableaux = app.add_subcommand("tableaux", "Enumerate tableaux, words and index tableaux");
  add_blocks(tableaux, true);
  tableaux->add_option("--diagram", f.diagram, "Diagram, e.g. \"[3,2]|[2,1]\"");
  tableaux->add_option("--tableau", f.tableau, "Single multi-tableau to inspect");
  tableaux->add_option("--kind", f.kind, "nst (natural) or st (all entries)")->check(CLI::IsMember({"nst", "st"}));
  tableaux->add_flag("--show-index", f.show_index, "Print index tableaux");
  tableaux->add_flag("--per-block", f.per_block, "Index each component separately");
  add_common(tableaux);

  auto* specht = app.add_subcommand("specht", "Construct F_T^S or the classical F_T");
  add_blocks(specht, true);
  specht->add_option("--diagram", f.diagram, "Diagram");
  specht->add_option("--tableau", f.tableau, "Natural standard tableau T");
  specht->add_option("--index-source,--index-tableau", f.index_source, "Tableau S whose index gives the exponents");
  specht->add_flag("--canonical", f.canonical, "Use the canonical tableau for T and S");
  specht->add_flag("--classical", f.classical, "Classical Specht polynomial of T");
  add_common(specht);

  auto* decompose = app.add_subcommand("decompose", "Write a polynomial over the invariant ring");
  add_blocks(decompose, true);
  decompose->add_option("--poly", f.poly, "Polynomial, e.g. \"x1*x3\"")->required();
  decompose->add_option("--max-degree", f.max_degree, "Degree bound of the prepared systems");
  add_common(decompose);

  auto* apply = app.add_subcommand("apply-op", "Apply a differential operator to a polynomial");
  add_blocks(apply, false);
  apply->add_option("--op", f.op, "Operator, e.g. \"x1^2*d1 + x2^2*d2\"")->required();
  apply->add_option("--poly", f.poly, "Polynomial")->required();
  add_common(apply);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_blocks(verify, true);
  std::vector<std::string> suites = suite_names();
  verify->add_option("--suite", f.suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--max-degree", f.max_degree, "Degree bound (ceiling 8)");
  verify->add_option("--max-n", f.verify.max_n, "Largest n accepted (ceiling 7)");
  verify->add_option("--max-group-order", f.verify.max_group_order, "Largest group order (ceiling 5040)");
  verify->add_option("--samples", f.verify.samples, "Random polynomials per round trip");
  verify->add_option("--random-operators", f.verify.random_operators, "Random invariant derivations");
  verify->add_option("--seed", f.verify.seed, "Random seed");
  add_common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (tableaux->parsed()) return cmd_tableaux(f, out);
    if (specht->parsed()) return cmd_specht(f, out);
    if (decompose->parsed()) return cmd_decompose(f, out);
    if (apply->parsed()) return cmd_apply_op(f, out);
    return cmd_verify(f, out);
  } catch (const Falsification& e) {
    Json j{{"check", e.check()}, {"instance", e.instance()}, {"status", "fail"}, {"witness", e.witness()}};
    out << j.dump(2) << '\n';
    err << "falsified: " << e.what() << '\n';
    return exit_falsified;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace hspecht::cli
