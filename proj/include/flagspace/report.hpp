// Full per-case report: grading data, one distribution under test, rank
// profiles and verdicts. Plain data with a versioned JSON form.

#ifndef FLAGSPACE_REPORT_HPP
#define FLAGSPACE_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagspace/distribution.hpp"

namespace flagspace {

inline constexpr const char* kReportSchema = "flagspace.case-report/1";

struct DistributionSummary {
  std::string spec;
  std::vector<std::vector<int>> antichain;
  std::vector<std::string> root_set;  // sorted digit strings
  bool proper = false;
  bool integrable = false;
  std::optional<std::vector<std::vector<int>>> cauchy_characteristic;  // antichain, nullopt when empty
  friend bool operator==(const DistributionSummary&, const DistributionSummary&) = default;
};

struct ProfileSummary {
  std::vector<int> degree;
  std::string root;
  std::array<int, 3> ranks{};
  int chern_direct = 0;
  int chern_via_ranks = 0;
  bool identity_holds = true;
  friend bool operator==(const ProfileSummary&, const ProfileSummary&) = default;
};

struct Verdicts {
  std::string rank_inequality;  // "holds", "fails" or "not-applicable"
  bool properness_criterion = true;
  bool chern_identity = true;
  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct CaseReport {
  std::string schema = kReportSchema;
  std::string type;
  std::vector<int> marking;  // one-based
  std::string numbering;
  std::vector<int> depths;
  std::vector<int> max_coefficients;
  int total_depth = 0;
  Classification classification;
  std::size_t positive_roots = 0;
  std::size_t levi_positive_roots = 0;
  std::size_t distribution_count = 0;
  DistributionSummary distribution;
  std::vector<ProfileSummary> profiles;
  Verdicts verdicts;
  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

/// Distribution spec: "columns" (sum of column distributions), "tangent",
/// "D<k>" for k >= 1, "Dm-1", or generators such as "(2,0),(0,1)".
/// Throws InputError for anything else.
Distribution parse_distribution_spec(const GradedSystem& gs, std::string_view spec);

/// Throws InputError, prefixed with the case, for invalid input.
CaseReport run_case(const LieType& type, const Marking& marking, Numbering numbering,
                    std::string_view dist_spec = "columns");

std::string report_to_json(const CaseReport& r);
/// Throws InputError on malformed JSON or a foreign schema tag.
CaseReport report_from_json(std::string_view text);
std::string report_to_text(const CaseReport& r);

}  // namespace flagspace

#endif  // FLAGSPACE_REPORT_HPP
