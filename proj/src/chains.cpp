#include "flagspace/chains.hpp"

#include <algorithm>
#include <deque>

#include "flagspace/errors.hpp"

namespace flagspace {

RootChain ascend_chain(const RootSystem& rs, const Root& alpha, const Root& beta) {
  if (!rs.is_positive_root(alpha) || !rs.is_positive_root(beta))
    throw InputError("ascend_chain: both ends must be positive roots");
  if (!alpha.leq(beta)) throw InputError("ascend_chain: " + to_string(alpha) + " is not below " + to_string(beta));
  // Any positive root below beta ascends to beta, so taking the smallest
  // admissible node at each step never dead-ends.
  RootChain chain{alpha, beta, {}};
  Root cur = alpha;
  while (cur != beta) {
    bool moved = false;
    for (int j = 0; j < rs.rank() && !moved; ++j) {
      Root next = cur + Root::simple(rs.rank(), j);
      if (next.leq(beta) && rs.is_root(next)) {
        chain.steps.push_back({j, +1});
        cur = next;
        moved = true;
      }
    }
    if (!moved) throw InvariantViolation("no simple ascent from " + to_string(cur) + " toward " + to_string(beta));
  }
  return chain;
}

namespace {

std::vector<int> unmarked_nodes(const GradedSystem& gs) {
  std::vector<int> out;
  auto marked = gs.marking().nodes();
  for (int j = 0; j < gs.roots().rank(); ++j)
    if (std::find(marked.begin(), marked.end(), j) == marked.end()) out.push_back(j);
  return out;
}

// Neighbours of a root inside its bucket, in (node, sign) order.
std::vector<std::pair<ChainStep, std::size_t>> bucket_neighbours(const GradedSystem& gs, const std::vector<int>& free,
                                                                 std::size_t root) {
  const RootSystem& rs = gs.roots();
  std::vector<std::pair<ChainStep, std::size_t>> out;
  for (int j : free) {
    for (int sign : {-1, +1}) {
      Root next = rs.positive(root) + sign * Root::simple(rs.rank(), j);
      std::size_t idx = rs.index_of(next);
      if (idx != RootSystem::npos && gs.bucket_of_root(idx) == gs.bucket_of_root(root)) out.push_back({{j, sign}, idx});
    }
  }
  return out;
}

}  // namespace

RootChain isodegree_chain(const GradedSystem& gs, const Root& alpha, const Root& beta) {
  const RootSystem& rs = gs.roots();
  std::size_t a = rs.index_of(alpha), b = rs.index_of(beta);
  if (a == RootSystem::npos || b == RootSystem::npos) throw InputError("isodegree_chain: both ends must be positive roots");
  if (gs.in_levi(a) || gs.bucket_of_root(a) != gs.bucket_of_root(b))
    throw InputError("isodegree_chain: " + to_string(alpha) + " and " + to_string(beta) +
                     " do not share a positive degree");

  const auto free = unmarked_nodes(gs);
  std::vector<int> dist(rs.num_positive(), -1);
  std::deque<std::size_t> queue{b};
  dist[b] = 0;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& [step, next] : bucket_neighbours(gs, free, cur)) {
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  if (dist[a] < 0)
    throw InvariantViolation("bucket " + to_string(gs.degree_of_root(a)) + " is disconnected between " +
                             to_string(alpha) + " and " + to_string(beta));

  RootChain chain{alpha, beta, {}};
  std::size_t cur = a;
  while (cur != b) {
    for (const auto& [step, next] : bucket_neighbours(gs, free, cur)) {
      if (dist[next] == dist[cur] - 1) {
        chain.steps.push_back(step);
        cur = next;
        break;
      }
    }
  }
  return chain;
}

bool validate_chain(const RootSystem& rs, const RootChain& chain) {
  if (!rs.is_root(chain.start)) return false;
  Root cur = chain.start;
  for (const auto& s : chain.steps) {
    if (s.node < 0 || s.node >= rs.rank() || (s.sign != 1 && s.sign != -1)) return false;
    cur += s.sign * Root::simple(rs.rank(), s.node);
    if (!rs.is_root(cur)) return false;
  }
  return cur == chain.end;
}

bool validate_isodegree_chain(const GradedSystem& gs, const RootChain& chain) {
  if (!validate_chain(gs.roots(), chain)) return false;
  auto marked = gs.marking().nodes();
  const MultiDegree deg = gs.degree_of(chain.start);
  Root cur = chain.start;
  for (const auto& s : chain.steps) {
    if (std::find(marked.begin(), marked.end(), s.node) != marked.end()) return false;
    cur += s.sign * Root::simple(gs.roots().rank(), s.node);
    if (gs.degree_of(cur) != deg) return false;
  }
  return true;
}

bool bucket_connected(const GradedSystem& gs, std::size_t idx) {
  const auto members = gs.bucket(idx);
  const auto free = unmarked_nodes(gs);
  IndexSet seen(gs.roots().num_positive());
  std::deque<std::size_t> queue{members.front()};
  seen.set(members.front());
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& [step, next] : bucket_neighbours(gs, free, cur)) {
      if (!seen.test(next)) {
        seen.set(next);
        ++reached;
        queue.push_back(next);
      }
    }
  }
  return reached == members.size();
}

std::vector<std::string> step_labels(const RootChain& chain) {
  std::vector<std::string> out;
  for (const auto& s : chain.steps)
    out.push_back((s.sign > 0 ? std::string("+") : std::string("−")) + "α" + std::to_string(s.node + 1));
  return out;
}

}  // namespace flagspace
