// Frobenius-bracket ranks, shifted closures and first Chern numbers on the
// curves of highest-weight vectors. Everything is root counting.

#ifndef FLAGSPACE_FROBENIUS_HPP
#define FLAGSPACE_FROBENIUS_HPP

#include <array>
#include <vector>

#include "flagspace/distribution.hpp"

namespace flagspace {

struct HighestWeightVector {
  std::size_t root = 0;  // index into positive_roots()
  MultiDegree degree;
};

/// Throws InputError when lam is not a realized positive degree.
HighestWeightVector highest_weight_vector(const GradedSystem& gs, const MultiDegree& lam);

/// |{beta in Phi_D : alpha + beta a positive root outside Phi_D}|.
/// Throws InputError when the root of hwv is not in d.
int frobenius_rank(const Distribution& d, const HighestWeightVector& hwv);
/// Same count with gamma + k alpha, 1 <= k <= 3. Throws InputError otherwise.
int iterated_rank(const Distribution& d, const HighestWeightVector& hwv, int k);

/// Realized degrees lambda with lambda <= xi + k deg(alpha) for some xi in
/// the antichain of d, in realized order. k = 0 gives the ideal of d.
std::vector<MultiDegree> shifted_closure(const Distribution& d, const HighestWeightVector& hwv, int k);

/// Positive-root indices lying in the given degrees, sorted.
std::vector<std::size_t> roots_of_degrees(const GradedSystem& gs, std::span<const MultiDegree> degrees);

/// Sum of beta(H_alpha) over positive-degree roots beta outside d.
int chern_direct(const Distribution& d, const HighestWeightVector& hwv);
/// Sum of iterated_rank(k) for k = 1..3.
int chern_via_ranks(const Distribution& d, const HighestWeightVector& hwv);
/// Common value of the two formulas; throws InvariantViolation if they differ.
int chern_number(const Distribution& d, const HighestWeightVector& hwv);

struct RankProfile {
  MultiDegree degree;
  std::size_t root = 0;
  std::array<int, 3> ranks{};
  int chern_direct = 0;
  int chern_via_ranks = 0;
  bool identity_holds = true;
};

/// Both Chern values are recorded; a mismatch is reported through
/// identity_holds rather than thrown. Throws InputError when lam is not in d.
RankProfile rank_profile(const Distribution& d, const MultiDegree& lam);
/// One profile per degree of d, in realized order.
std::vector<RankProfile> rank_profiles(const Distribution& d);

}  // namespace flagspace

#endif  // FLAGSPACE_FROBENIUS_HPP
