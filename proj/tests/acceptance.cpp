// Acceptance run: every criterion prints one PASS/FAIL line with its runtime
// and limit. Exit status is non-zero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>

#include "hspecht/verify.hpp"

using namespace hspecht;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ok = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
};

std::vector<BlockStructure> block_structures_up_to(int max_n) {
  std::vector<BlockStructure> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int s = 1; s <= remaining; ++s) {
      current.push_back(s);
      rec(remaining - s);
      current.pop_back();
    }
  };
  for (int n = 1; n <= max_n; ++n) rec(n);
  return out;
}

// Runs one suite over every block structure concurrently and folds the
// records into an outcome; skipped records count as failures unless allowed.
Outcome over_blocks(const std::vector<BlockStructure>& blocks,
                    std::vector<CheckRecord> (*suite)(const BlockStructure&, const VerifyOptions&),
                    const VerifyOptions& options, bool allow_skipped, const std::string& label) {
  std::vector<std::future<std::vector<CheckRecord>>> pending;
  for (const auto& b : blocks) pending.push_back(std::async(std::launch::async, suite, b, options));
  Outcome outcome;
  std::size_t passed = 0, skipped = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (const auto& r : pending[k].get()) {
      if (r.status == "pass") ++passed;
      if (r.status == "skipped") ++skipped;
      if (r.status == "fail" || (r.status == "skipped" && !allow_skipped)) {
        outcome.fail("blocks=" + to_string(blocks[k]) + " " + r.check + " " + r.instance + " : " + r.witness);
      }
    }
  }
  outcome.detail = std::to_string(blocks.size()) + " block structures, " + std::to_string(passed) + " " + label +
                   " checks passed" + (skipped ? ", " + std::to_string(skipped) + " skipped" : "");
  return outcome;
}

Outcome golden_index() {
  Outcome o;
  const BlockStructure block({5, 3});
  const auto t = parse_multi_tableau("[[1,4,6],[2,7]]|[[3,8],[5]]", block);
  const IndexTableau expected{{{{0, 2, 3}, {1, 4}}, {{1, 4}, {2}}}};
  const auto got = index_tableau(t);
  if (got != expected) o.fail("i(T) = " + to_string(got));
  o.detail = "i(T) = " + to_string(got);
  return o;
}

Outcome idempotency() {
  Outcome o;
  std::size_t count = 0;
  for (int m = 1; m <= 4; ++m) {
    const BlockStructure block({m});
    std::vector<int> entries;
    for (int k = 1; k <= m; ++k) entries.push_back(k);
    std::vector<std::pair<Partition, GroupAlgebraElement>> all;
    for (const auto& p : enumerate_partitions(m)) {
      for (const auto& t : enumerate_standard_tableaux(p, entries)) {
        const auto e = young_symmetrizer(t, block);
        if (!(e * e == e)) o.fail("e_T^2 != e_T for T=" + to_string(t));
        all.emplace_back(p, e);
        ++count;
      }
    }
    for (const auto& [p, e] : all)
      for (const auto& [q, g] : all)
        if (p != q && !(e * g).is_zero()) o.fail("cross-shape product nonzero for shapes " + to_string(p) + ", " + to_string(q));
  }
  std::size_t products = 0;
  for (const auto& block : block_structures_up_to(5)) {
    if (std::any_of(block.sizes().begin(), block.sizes().end(), [](int s) { return s > 4; })) continue;
    const auto report = idempotent_report(block);
    for (std::size_t a = 0; a < report.tableaux.size(); ++a) {
      ++products;
      if (!report.idempotent[a]) o.fail("e_T^2 != e_T for T=" + to_string(report.tableaux[a]));
      for (std::size_t b = 0; b < report.tableaux.size(); ++b) {
        if (report.tableaux[a].shape() != report.tableaux[b].shape() && report.product_nonzero[a][b]) {
          o.fail("cross-shape product nonzero: " + to_string(report.tableaux[a]) + ", " + to_string(report.tableaux[b]));
        }
      }
    }
  }
  o.detail = std::to_string(count) + " single-block and " + std::to_string(products) +
             " product symmetrizers idempotent, cross-shape products zero";
  return o;
}

Outcome counting() {
  Outcome o;
  const std::vector<std::pair<std::vector<int>, long long>> cases{{{2, 1}, 2}, {{2, 2}, 4}, {{3, 2}, 12}, {{2, 2, 1}, 4}};
  for (const auto& [sizes, expected] : cases) {
    const BlockStructure block(sizes);
    try {
      const auto table = multiplicity_table(block);
      if (table.sum_of_squares != expected) {
        o.fail("blocks=" + to_string(block) + " sum " + std::to_string(table.sum_of_squares));
      }
      o.detail += (o.detail.empty() ? "" : ", ") + to_string(block) + "->" + std::to_string(table.sum_of_squares);
    } catch (const Falsification& f) {
      o.fail(f.what());
    }
  }
  for (const auto& block : block_structures_up_to(6)) {
    for (const auto& r : verify_counting(block, VerifyOptions{})) {
      if (r.status != "pass") o.fail("blocks=" + to_string(block) + " " + r.check + " : " + r.witness);
    }
  }
  o.detail += "; key counts = group order for all n <= 6";
  return o;
}

Outcome idempotent_resolution() {
  Outcome o;
  for (const auto& sizes : std::vector<std::vector<int>>{{2}, {3}, {2, 1}, {2, 2}}) {
    const BlockStructure block(sizes);
    const auto report = idempotent_report(block);
    if (!report.sums_to_identity) o.fail("blocks=" + to_string(block) + ": sum of e_T != 1");
    std::size_t nonzero = 0, pairs = 0;
    for (std::size_t a = 0; a < report.tableaux.size(); ++a)
      for (std::size_t b = 0; b < report.tableaux.size(); ++b)
        if (a != b && report.tableaux[a].shape() == report.tableaux[b].shape()) {
          ++pairs;
          if (report.product_nonzero[a][b]) ++nonzero;
        }
    o.detail += (o.detail.empty() ? "" : ", ") + to_string(block) + ": sum=1, same-shape nonzero " +
                std::to_string(nonzero) + "/" + std::to_string(pairs);
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const auto blocks = block_structures_up_to(5);
  const VerifyOptions options;
  const std::vector<Criterion> criteria{
      {1, "index tableau golden, blocks (5,3)", 1, golden_index},
      {2, "symmetrizer idempotency, n_i <= 4", 30, idempotency},
      {3, "higher Specht modules irreducible, n <= 5", 300,
       [&] { return over_blocks(blocks, verify_modules, options, false, "module"); }},
      {4, "divisibility by F_T with C(T)-invariant quotient, n <= 5", 300,
       [&] { return over_blocks(blocks, verify_divisibility, options, false, "operator"); }},
      {5, "image modules independent and intertwining, n <= 5", 300,
       [&] { return over_blocks(blocks, verify_images, options, true, "operator"); }},
      {6, "graded rank series and exact decomposition round trip, n <= 5", 600,
       [&] { return over_blocks(blocks, verify_decomposition, options, false, "decomposition"); }},
      {7, "multiplicity counting", 10, counting},
      {8, "one-dimensional symmetrizer images, n <= 5", 60,
       [&] { return over_blocks(blocks, verify_one_dimensionality, options, false, "rank"); }},
      {9, "idempotent resolution of 1", 60, idempotent_resolution},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = outcome.ok && in_time;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << "  (" << std::fixed
              << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds << " s)"
              << (in_time ? "" : " TOO SLOW") << "\n      " << outcome.detail << '\n';
    for (const auto& f : outcome.failures) std::cout << "      failure: " << f << '\n';
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
