// Exhaustive verification over (type, marking) cells. Cells are independent
// and evaluated with OpenMP; the serial path is kept as the reference.

#ifndef FLAGSPACE_SWEEP_HPP
#define FLAGSPACE_SWEEP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagspace/distribution.hpp"

namespace flagspace {

enum class Check {
  chern_identity,
  ideal_oracle,
  properness,
  cauchy,
  connectivity,
  chains,
  degrees,
  strings,
  classification,
};

std::string to_string(Check c);
std::vector<Check> all_checks();
/// Comma-separated check names or "all". Throws InputError.
std::vector<Check> parse_checks(std::string_view text);

enum class Execution { parallel, serial };

/// Ranks up to this bound use every distribution; above it a bounded family
/// (column distributions, their sum, D^1 and D^{m-1}).
inline constexpr int kExhaustiveRank = 4;

struct SweepCell {
  LieType type;
  Marking marking;
  bool first_of_type = false;  // type-level checks run once, here
};

std::vector<SweepCell> sweep_cells(int max_rank);

/// Distributions checked in a cell, see kExhaustiveRank.
std::vector<Distribution> sweep_distributions(const GradedSystem& gs);

struct CheckStats {
  Check check{};
  std::size_t cells = 0;
  std::size_t items = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first failures, in cell order
};

struct SweepSummary {
  int max_rank = 0;
  std::size_t cells = 0;
  std::vector<CheckStats> stats;
  bool ok() const;
  const CheckStats& at(Check c) const;
};

/// Throws InputError when max_rank is outside 1..8.
SweepSummary sweep(int max_rank, std::span<const Check> checks, Execution exec = Execution::parallel,
                   std::size_t max_samples = 20);

/// Every nonempty order ideal of the realized-degree poset by filtering all
/// subsets, as sorted bitmasks. Throws InputError above 40 realized degrees.
std::vector<std::uint64_t> brute_force_ideals(const GradedSystem& gs, Execution exec = Execution::parallel);
/// Bitmask of each distribution's ideal, sorted.
std::vector<std::uint64_t> ideal_masks(std::span<const Distribution> ds);

}  // namespace flagspace

#endif  // FLAGSPACE_SWEEP_HPP
