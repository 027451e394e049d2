#ifndef HSPECHT_VERIFY_HPP
#define HSPECHT_VERIFY_HPP

#include <string>
#include <vector>

#include "hspecht/serialize.hpp"

namespace hspecht {

/// One line of a verification report. `status` is "pass", "fail",
/// "skipped" or "info" (recorded outcome that is not asserted).
struct CheckRecord {
  std::string check;
  std::string instance;
  std::string status;
  std::string witness;
};

struct VerifyOptions {
  int max_n = 5;
  int max_degree = 4;
  long long max_group_order = 720;
  int samples = 100;           // random polynomials for round trips
  int random_operators = 20;   // random combinations of invariant derivations
  unsigned seed = 20240101;

  static constexpr int max_n_ceiling = 7;
  static constexpr int max_degree_ceiling = 8;
  static constexpr long long max_group_order_ceiling = 5040;

  /// Throws InvalidInput when a bound is negative or above its ceiling.
  void validate() const;
};

struct VerifyReport {
  BlockStructure block;
  std::string suite;
  std::vector<CheckRecord> records;

  bool ok() const;
  std::size_t count(const std::string& status) const;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") for the block structure. Throws InvalidInput for
/// an unknown suite and BoundExceeded when the blocks exceed the options.
VerifyReport run_suite(const BlockStructure& block, const std::string& suite, const VerifyOptions& options = {});

std::vector<CheckRecord> verify_combinatorics(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_idempotents(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_modules(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_divisibility(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_images(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_decomposition(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_counting(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_one_dimensionality(const BlockStructure& block, const VerifyOptions& options);
std::vector<CheckRecord> verify_isotypic(const BlockStructure& block, const VerifyOptions& options);

/// The operator family used by the divisibility and image suites: the
/// identity, sum_j x_j^k d_j (k <= 3) for every block, then
/// `options.random_operators` random rational combinations of those.
std::vector<DifferentialOperator> derivation_family(const BlockStructure& block, const VerifyOptions& options);

Json to_json(const CheckRecord& r);
/// {"blocks": [..], "suite": "...", "ok": bool, "summary": {...}, "records": [...]}
Json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace hspecht

#endif
