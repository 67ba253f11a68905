// Registry of printed case computations, replayed as exact expectations, and
// the node-numbering resolution that the F4 and G2 tables pin down.

#ifndef FLAGSPACE_REGISTRY_HPP
#define FLAGSPACE_REGISTRY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagspace/root_system.hpp"

namespace flagspace {

struct Mismatch {
  std::string case_id;
  std::string location;  // human-readable case name
  std::string detail;
};

/// Accumulates expectations for one case.
class Checker {
 public:
  Checker(std::string case_id, std::string location) : id_(std::move(case_id)), location_(std::move(location)) {}

  void expect(bool ok, const std::string& what);
  void expect_eq(long long expected, long long actual, const std::string& what);
  void expect_text(const std::string& expected, const std::string& actual, const std::string& what);
  /// Compares as sorted lists.
  void expect_set(std::vector<std::string> expected, std::vector<std::string> actual, const std::string& what);
  void fail(const std::string& what) { expect(false, what); }

  std::size_t checked() const { return checked_; }
  const std::vector<Mismatch>& mismatches() const { return mismatches_; }

 private:
  std::string id_;
  std::string location_;
  std::size_t checked_ = 0;
  std::vector<Mismatch> mismatches_;
};

struct PaperCase {
  std::string id;
  std::string location;
  std::string summary;
  std::function<void(Numbering, Checker&)> run;
};

const std::vector<PaperCase>& paper_cases();

struct ReplayResult {
  std::vector<std::string> ran;
  std::size_t expectations = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Runs every case, or only `only`. Exceptions inside a case are recorded as
/// mismatches. Throws InputError for an unknown id.
ReplayResult replay(const std::optional<std::string>& only = std::nullopt, Numbering numbering = Numbering::paper);

/// One of the three printed F4 tables (marked nodes are one-based).
struct F4Table {
  std::string name;
  std::vector<int> marking;
  std::vector<int> depths;
  std::vector<std::vector<int>> antichain;
  std::vector<int> eta1_degree, eta2_degree;
  std::string eta1, eta2;
  std::vector<std::string> root_set, first_difference, second_difference;
  int rank1 = 0, rank2 = 0;
};

const std::vector<F4Table>& f4_tables();
void check_f4_table(const F4Table& t, const RootSystem& rs, Checker& c);

/// Long/short claims about simple roots made alongside the case analysis.
void check_root_lengths(const RootSystem& rs, Checker& c);

/// Node permutations (perm[active] = Bourbaki node) under which every printed
/// table for the type holds. Only F4 and G2 carry such data; other types
/// throw InputError.
std::vector<std::vector<int>> consistent_permutations(const LieType& type);

}  // namespace flagspace

#endif  // FLAGSPACE_REGISTRY_HPP
