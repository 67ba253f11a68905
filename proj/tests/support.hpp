#ifndef FLAGSPACE_TESTS_SUPPORT_HPP
#define FLAGSPACE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "flagspace/grading.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Vec vec(const flagspace::Root& r) { return {r.coeffs().begin(), r.coeffs().end()}; }

inline flagspace::Root root(const oracle::Vec& v) { return flagspace::Root::from_span(v); }

/// Oracle data in the given numbering. The `paper` tag reverses F4 and
/// leaves every other family alone.
inline oracle::RootData oracle_for(const flagspace::LieType& t,
                                   flagspace::Numbering n = flagspace::Numbering::bourbaki) {
  auto c = oracle::cartan(static_cast<char>(t.family), t.rank);
  if (n == flagspace::Numbering::paper && t.family == flagspace::Family::F) {
    const int reversed[] = {3, 2, 1, 0};
    c = oracle::permuted(c, reversed);
  }
  return oracle::generate(c);
}

inline flagspace::GradedSystem graded(const std::string& type, const std::string& marking,
                                      flagspace::Numbering n = flagspace::Numbering::paper) {
  const auto t = flagspace::LieType::parse(type);
  return flagspace::grade(flagspace::RootSystem::build(t, n), flagspace::Marking::parse(marking, t.rank));
}

inline std::vector<std::string> sorted_strings(const flagspace::RootSystem& rs, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(flagspace::to_string(rs.positive(i)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace testing

#endif  // FLAGSPACE_TESTS_SUPPORT_HPP
