#include <algorithm>
#include <numeric>

#include "flagspace/errors.hpp"
#include "flagspace/registry.hpp"

namespace flagspace {

std::vector<std::vector<int>> consistent_permutations(const LieType& type) {
  type.validate();
  if (type.family != Family::F && type.family != Family::G)
    throw InputError("no printed tables constrain the numbering of " + type.name());
  std::vector<int> perm(type.rank);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> survivors;
  do {
    Checker c("numbering", type.name());
    try {
      const RootSystem rs = RootSystem::build_permuted(type, perm);
      check_root_lengths(rs, c);
      if (type.family == Family::F)
        for (const auto& t : f4_tables()) check_f4_table(t, rs, c);
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    if (c.mismatches().empty()) survivors.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return survivors;
}

}  // namespace flagspace
