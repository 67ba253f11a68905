#include "flagspace/frobenius.hpp"

#include <algorithm>

#include "flagspace/errors.hpp"

namespace flagspace {

namespace {

void require_inside(const Distribution& d, const HighestWeightVector& hwv) {
  if (hwv.root >= d.graded().roots().num_positive() || !d.contains_root(hwv.root))
    throw InputError("highest-weight vector of degree " + to_string(hwv.degree) + " is not in the distribution");
}

}  // namespace

HighestWeightVector highest_weight_vector(const GradedSystem& gs, const MultiDegree& lam) {
  const Root& r = highest_weight_root(gs, lam);
  return {gs.roots().index_of(r), lam};
}

int iterated_rank(const Distribution& d, const HighestWeightVector& hwv, int k) {
  if (k < 1 || k > 3) throw InputError("iterated_rank: k must be in 1..3, got " + std::to_string(k));
  require_inside(d, hwv);
  const RootSystem& rs = d.graded().roots();
  int count = 0;
  for (auto g = d.root_set().find_first(); g != IndexSet::npos; g = d.root_set().find_next(g)) {
    // Strings are unbroken, so gamma + k alpha is a root only if every
    // intermediate step is.
    std::size_t cur = g;
    for (int step = 0; step < k && cur != RootSystem::npos; ++step) cur = rs.sum_index(cur, hwv.root);
    if (cur != RootSystem::npos && !d.contains_root(cur)) ++count;
  }
  return count;
}

int frobenius_rank(const Distribution& d, const HighestWeightVector& hwv) { return iterated_rank(d, hwv, 1); }

std::vector<MultiDegree> shifted_closure(const Distribution& d, const HighestWeightVector& hwv, int k) {
  if (k < 0) throw InputError("shifted_closure: k must be >= 0");
  const GradedSystem& gs = d.graded();
  std::vector<MultiDegree> tops;
  for (const auto& xi : d.antichain()) tops.push_back(xi + hwv.degree.scaled(k));
  std::vector<MultiDegree> out;
  for (const auto& lam : gs.realized())
    if (std::any_of(tops.begin(), tops.end(), [&](const MultiDegree& t) { return lam.leq(t); })) out.push_back(lam);
  return out;
}

std::vector<std::size_t> roots_of_degrees(const GradedSystem& gs, std::span<const MultiDegree> degrees) {
  std::vector<std::size_t> out;
  for (const auto& lam : degrees) {
    std::size_t b = gs.realized_index(lam);
    if (b == GradedSystem::npos) continue;
    out.insert(out.end(), gs.bucket(b).begin(), gs.bucket(b).end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int chern_direct(const Distribution& d, const HighestWeightVector& hwv) {
  require_inside(d, hwv);
  const GradedSystem& gs = d.graded();
  const RootSystem& rs = gs.roots();
  int sum = 0;
  for (std::size_t b = 0; b < rs.num_positive(); ++b)
    if (!gs.in_levi(b) && !d.contains_root(b)) sum += rs.pairing(b, hwv.root);
  return sum;
}

int chern_via_ranks(const Distribution& d, const HighestWeightVector& hwv) {
  int sum = 0;
  for (int k = 1; k <= 3; ++k) sum += iterated_rank(d, hwv, k);
  return sum;
}

int chern_number(const Distribution& d, const HighestWeightVector& hwv) {
  int direct = chern_direct(d, hwv);
  int counted = chern_via_ranks(d, hwv);
  if (direct != counted)
    throw InvariantViolation("Chern number on the curve of " + to_string(d.graded().roots().positive(hwv.root)) +
                             ": coroot sum " + std::to_string(direct) + " but iterated ranks sum to " +
                             std::to_string(counted));
  return direct;
}

RankProfile rank_profile(const Distribution& d, const MultiDegree& lam) {
  if (!d.contains_degree(lam)) throw InputError("rank_profile: degree " + to_string(lam) + " is not in the distribution");
  HighestWeightVector hwv = highest_weight_vector(d.graded(), lam);
  RankProfile p;
  p.degree = lam;
  p.root = hwv.root;
  for (int k = 1; k <= 3; ++k) p.ranks[k - 1] = iterated_rank(d, hwv, k);
  p.chern_direct = chern_direct(d, hwv);
  p.chern_via_ranks = p.ranks[0] + p.ranks[1] + p.ranks[2];
  p.identity_holds = p.chern_direct == p.chern_via_ranks;
  return p;
}

std::vector<RankProfile> rank_profiles(const Distribution& d) {
  std::vector<RankProfile> out;
  for (const auto& lam : d.degrees()) out.push_back(rank_profile(d, lam));
  return out;
}

}  // namespace flagspace
