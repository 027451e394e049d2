#include "hspecht/serialize.hpp"

namespace hspecht {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must hold integers, got " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

Rational coeff_of(const Json& term) {
  const auto& c = term.at("coeff");
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw InvalidInput("coeff must be a string \"p/q\" or an integer, got " + c.dump());
}

}  // namespace

Json to_json(const BlockStructure& b) { return b.sizes(); }

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const MultiDiagram& d) {
  Json out = Json::array();
  for (const auto& p : d.components) out.push_back(to_json(p));
  return out;
}

Json to_json(const MultiTableau& t) {
  Json components = Json::array();
  for (const auto& c : t.components) components.push_back(c.rows());
  return {{"block", to_json(t.block)}, {"components", components}};
}

Json to_json(const IndexTableau& t) { return t.components; }

Json to_json(const Permutation& p) { return p.images(); }

Json to_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"exponents", m.exponents()}, {"coeff", to_string(c)}});
  return out;
}

Json to_json(const DifferentialOperator& op) {
  Json out = Json::array();
  for (const auto& [m, c] : op.terms()) {
    out.push_back({{"x", m.x.exponents()}, {"d", m.d.exponents()}, {"coeff", to_string(c)}});
  }
  return out;
}

Json to_json(const GroupAlgebraElement& a) {
  Json out = Json::array();
  for (const auto& [p, c] : a.support()) out.push_back({{"perm", to_json(p)}, {"coeff", to_string(c)}});
  return out;
}

Json to_json(const HigherSpechtKey& key) {
  return {{"diagram", to_json(key.diagram)}, {"T", to_json(key.T)}, {"S", to_json(key.S)}};
}

Json to_json(const DecompositionResult& r) {
  Json generators = Json::array();
  Json coefficients = Json::array();
  for (const auto& t : r.terms) {
    Json g = to_json(t.key);
    g["polynomial"] = to_string(t.generator);
    generators.push_back(std::move(g));
    coefficients.push_back(to_string(t.coefficient));
  }
  return {{"input", to_string(r.input)}, {"generators", generators}, {"coefficients", coefficients}};
}

Json to_json(const GradedSeries& s) { return s.coefficients; }

MultiTableau multi_tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("block") || !j.contains("components")) {
    throw InvalidInput("multi-tableau JSON needs \"block\" and \"components\"");
  }
  BlockStructure block(int_array(j.at("block"), "block"));
  std::vector<Tableau> components;
  for (const auto& grid : j.at("components")) {
    Grid rows;
    for (const auto& row : grid) rows.push_back(int_array(row, "tableau row"));
    components.emplace_back(std::move(rows));
  }
  return MultiTableau(std::move(block), std::move(components));
}

Polynomial polynomial_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of terms");
  Polynomial f(n);
  for (const auto& term : j) {
    auto e = int_array(term.at("exponents"), "exponents");
    if (static_cast<int>(e.size()) != n) throw InvalidInput("exponent vector has the wrong length: " + term.dump());
    f.add_term(Monomial(std::move(e)), coeff_of(term));
  }
  return f;
}

DifferentialOperator operator_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InvalidInput("operator JSON must be an array of terms");
  DifferentialOperator op(n);
  for (const auto& term : j) {
    auto x = int_array(term.at("x"), "x");
    auto d = int_array(term.at("d"), "d");
    if (static_cast<int>(x.size()) != n || static_cast<int>(d.size()) != n) {
      throw InvalidInput("operator term has the wrong length: " + term.dump());
    }
    op.add_term(Monomial(std::move(x)), Monomial(std::move(d)), coeff_of(term));
  }
  return op;
}

}  // namespace hspecht
