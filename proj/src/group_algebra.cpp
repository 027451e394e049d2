#include "hspecht/group_algebra.hpp"

namespace hspecht {

GroupAlgebraElement GroupAlgebraElement::identity(const BlockStructure& block) {
  GroupAlgebraElement e(block);
  e.add(Permutation::identity(block.total()), 1);
  return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = support_.find(p);
  return it == support_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c) {
  if (!p.preserves(block_)) throw InvalidInput("permutation " + to_string(p) + " does not preserve the blocks");
  if (c == 0) return;
  auto [it, inserted] = support_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) support_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (block_ != other.block_) throw InvalidInput("group algebra block mismatch");
  for (const auto& [p, c] : other.support_) add(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    support_.clear();
    return *this;
  }
  for (auto& [p, coeff] : support_) coeff *= c;
  return *this;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
  if (a.block_ != b.block_) throw InvalidInput("group algebra block mismatch");
  for (const auto& [p, c] : b.support_) a.add(p, -c);
  return a;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.block_ != b.block_) throw InvalidInput("group algebra block mismatch");
  GroupAlgebraElement out(a.block_);
  for (const auto& [g, ca] : a.support_) {
    for (const auto& [h, cb] : b.support_) {
      auto [it, inserted] = out.support_.try_emplace(g * h, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.support_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GroupAlgebraElement young_symmetrizer(const Tableau& t, const BlockStructure& block) {
  if (!t.is_standard()) throw InvalidInput("young symmetrizer needs a standard tableau, got " + to_string(t));
  const auto entries = t.entries();
  const int home = block.block_of(entries.front());
  for (int v : entries) {
    if (block.block_of(v) != home) throw InvalidInput("tableau " + to_string(t) + " crosses block boundaries");
  }
  const int n = block.total();
  const auto rows = row_stabilizer(t, n);
  const auto cols = column_stabilizer(t, n);
  Integer factorial = 1;
  for (int k = 2; k <= t.size(); ++k) factorial *= k;
  const Rational scale = fraction(Integer(static_cast<long>(count_standard(t.shape()))), factorial);

  GroupAlgebraElement e(block);
  for (const auto& tau : cols) {
    const Rational signed_scale = scale * tau.sign();
    for (const auto& sigma : rows) e.add(tau * sigma, signed_scale);
  }
  return e;
}

GroupAlgebraElement product_symmetrizer(const MultiTableau& t) {
  if (!t.is_natural()) throw InvalidInput("product symmetrizer needs a natural standard tableau, got " + to_string(t));
  GroupAlgebraElement e = GroupAlgebraElement::identity(t.block);
  for (const auto& comp : t.components) e = e * young_symmetrizer(comp, t.block);
  return e;
}

Polynomial apply_element(const GroupAlgebraElement& a, const Polynomial& f) {
  if (a.block().total() != f.ambient()) throw InvalidInput("group algebra element and polynomial differ in n");
  Polynomial out(f.ambient());
  for (const auto& [p, c] : a.support()) {
    for (const auto& [m, coeff] : f.terms()) out.add_term(m.permuted(p), c * coeff);
  }
  return out;
}

IdempotentReport idempotent_report(const BlockStructure& block, long long max_group_order) {
  if (block_group_order(block) > max_group_order) {
    throw BoundExceeded("group order " + std::to_string(block_group_order(block)) + " exceeds bound " +
                        std::to_string(max_group_order));
  }
  IdempotentReport report;
  report.block = block;
  std::vector<GroupAlgebraElement> elements;
  for (const auto& diagram : enumerate_r_diagrams(block)) {
    for (auto& t : enumerate_NST(diagram)) {
      elements.push_back(product_symmetrizer(t));
      report.tableaux.push_back(std::move(t));
    }
  }
  report.sum = GroupAlgebraElement(block);
  for (const auto& e : elements) {
    report.idempotent.push_back(e * e == e);
    report.sum += e;
  }
  report.sums_to_identity = report.sum == GroupAlgebraElement::identity(block);
  for (const auto& a : elements) {
    std::vector<bool> row;
    for (const auto& b : elements) row.push_back(!(a * b).is_zero());
    report.product_nonzero.push_back(std::move(row));
  }
  return report;
}

std::string to_string(const GroupAlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : a.support()) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str() + "*" + to_string(p);
  }
  return out;
}

}  // namespace hspecht
