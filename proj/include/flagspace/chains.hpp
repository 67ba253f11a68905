// Constructive root chains: simple-root ascents between comparable positive
// roots, and signed unmarked steps inside one degree bucket.

#ifndef FLAGSPACE_CHAINS_HPP
#define FLAGSPACE_CHAINS_HPP

#include <string>
#include <vector>

#include "flagspace/grading.hpp"

namespace flagspace {

struct ChainStep {
  int node = 0;  // 0-based, active numbering
  int sign = 1;  // +1 or -1
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct RootChain {
  Root start;
  Root end;
  std::vector<ChainStep> steps;
};

/// alpha <= beta, both positive roots. Every partial sum is a root and the
/// chain has |beta - alpha|_1 steps, all +1. Among all such chains returns
/// the lexicographically smallest by node. Throws InputError otherwise.
RootChain ascend_chain(const RootSystem& rs, const Root& alpha, const Root& beta);

/// Shortest chain from alpha to beta by unmarked +-simple steps with every
/// partial sum in the common bucket. Ties break lexicographically on
/// (node, sign) with -1 before +1. Throws InputError when the degrees differ
/// or are not positive, InvariantViolation when no chain exists.
RootChain isodegree_chain(const GradedSystem& gs, const Root& alpha, const Root& beta);

/// Every partial sum is a root and the last one equals chain.end.
bool validate_chain(const RootSystem& rs, const RootChain& chain);
/// validate_chain plus: unmarked steps only, every partial sum of the same degree.
bool validate_isodegree_chain(const GradedSystem& gs, const RootChain& chain);

/// True when the unmarked-step graph on bucket idx is connected.
bool bucket_connected(const GradedSystem& gs, std::size_t idx);

/// "+α2", "−α3" (U+2212), one-based nodes.
std::vector<std::string> step_labels(const RootChain& chain);

}  // namespace flagspace

#endif  // FLAGSPACE_CHAINS_HPP
