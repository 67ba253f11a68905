#include <doctest.h>

#include <deque>
#include <map>

#include "flagspace/chains.hpp"
#include "flagspace/errors.hpp"
#include "support.hpp"

using namespace flagspace;
using testing::graded;
using testing::vec;

namespace {

// Shortest unmarked-step distance inside the bucket of alpha, by plain BFS
// over coefficient vectors checked against the oracle root set.
int bucket_distance(const GradedSystem& gs, const oracle::RootData& ref, const Root& alpha, const Root& beta) {
  const int n = alpha.rank();
  std::vector<bool> marked(n, false);
  for (int node : gs.marking().nodes()) marked[node] = true;
  std::map<oracle::Vec, int> dist{{vec(alpha), 0}};
  std::deque<oracle::Vec> queue{vec(alpha)};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (cur == vec(beta)) return dist[cur];
    for (int i = 0; i < n; ++i) {
      if (marked[i]) continue;
      for (int s : {-1, 1}) {
        auto next = cur;
        next[i] += s;
        if (ref.roots.count(next) && !dist.count(next)) {
          dist[next] = dist[cur] + 1;
          queue.push_back(next);
        }
      }
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("ascending chains") {
  const auto a2 = RootSystem::build({Family::A, 2});
  CHECK(ascend_chain(a2, Root{1, 0}, Root{1, 0}).steps.empty());
  const auto c = ascend_chain(a2, Root{1, 0}, Root{1, 1});
  CHECK(c.steps == std::vector<ChainStep>{{1, 1}});
  CHECK(step_labels(c) == std::vector<std::string>{"+α2"});

  CHECK_THROWS_AS(ascend_chain(a2, Root{1, 1}, Root{1, 0}), InputError);
  CHECK_THROWS_AS(ascend_chain(a2, Root{1, 0}, Root{0, 1}), InputError);
  CHECK_THROWS_AS(ascend_chain(a2, Root{-1, 0}, Root{1, 1}), InputError);
  CHECK_THROWS_AS(ascend_chain(a2, Root{1, 0}, Root{2, 1}), InputError);
}

TEST_CASE("every comparable pair ascends") {
  for (const auto& t : all_types(kMaxRank)) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    const auto ref = testing::oracle_for(t);
    for (const auto& a : rs.positive_roots()) {
      for (const auto& b : rs.positive_roots()) {
        if (!a.leq(b)) continue;
        REQUIRE(oracle::ascends(ref, vec(a), vec(b)));
        const auto chain = ascend_chain(rs, a, b);
        REQUIRE(static_cast<int>(chain.steps.size()) == b.height() - a.height());
        Root cur = a;
        for (const auto& s : chain.steps) {
          REQUIRE(s.sign == 1);
          cur = cur + Root::simple(t.rank, s.node);
          REQUIRE(ref.roots.count(vec(cur)));
        }
        REQUIRE(cur == b);
        REQUIRE(validate_chain(rs, chain));
      }
    }
  }
}

TEST_CASE("isodegree chains") {
  SUBCASE("F4 Case I bucket (1,0)") {
    const auto g = graded("F4", "1,4");
    const Root a = parse_root("1110", 4), b = parse_root("1210", 4);
    const auto c = isodegree_chain(g, a, b);
    CHECK(step_labels(c) == std::vector<std::string>{"+α2"});
    CHECK(validate_isodegree_chain(g, c));
    const auto back = isodegree_chain(g, b, a);
    CHECK(step_labels(back) == std::vector<std::string>{"−α2"});
    CHECK(isodegree_chain(g, a, a).steps.empty());
    CHECK_THROWS_AS(isodegree_chain(g, a, parse_root("1111", 4)), InputError);
    CHECK_THROWS_AS(isodegree_chain(g, parse_root("0110", 4), parse_root("0100", 4)), InputError);
  }
  SUBCASE("full marking leaves singleton buckets") {
    for (const auto& t : all_types(6)) {
      std::vector<int> all(t.rank);
      for (int i = 0; i < t.rank; ++i) all[i] = i;
      const auto g = grade(RootSystem::build(t), Marking::from_nodes(all, t.rank));
      for (std::size_t b = 0; b < g.num_realized(); ++b) {
        REQUIRE(g.bucket(b).size() == 1);
        const Root& r = g.roots().positive(g.bucket(b)[0]);
        REQUIRE(isodegree_chain(g, r, r).steps.empty());
      }
    }
  }
  SUBCASE("a forged chain is rejected") {
    const auto g = graded("F4", "1,4");
    RootChain bad{parse_root("1110", 4), parse_root("1210", 4), {{0, 1}}};
    CHECK_FALSE(validate_chain(g.roots(), bad));
    RootChain marked{parse_root("1210", 4), parse_root("1211", 4), {{3, 1}}};
    CHECK(validate_chain(g.roots(), marked));
    CHECK_FALSE(validate_isodegree_chain(g, marked));
  }
}

TEST_CASE("buckets are connected and chains are shortest") {
  for (const auto& t : all_types(6)) {
    CAPTURE(t.name());
    const auto rs = RootSystem::build(t);
    const auto ref = testing::oracle_for(t);
    for (const auto& m : all_markings(t.rank)) {
      const auto g = grade(rs, m);
      for (std::size_t b = 0; b < g.num_realized(); ++b) {
        REQUIRE(bucket_connected(g, b));
        for (std::size_t i : g.bucket(b)) {
          for (std::size_t j : g.bucket(b)) {
            const Root &x = rs.positive(i), &y = rs.positive(j);
            const auto c = isodegree_chain(g, x, y);
            REQUIRE(validate_isodegree_chain(g, c));
            REQUIRE(static_cast<int>(c.steps.size()) == bucket_distance(g, ref, x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("step labels") {
  RootChain c{Root{0, 1, 0}, Root{0, 1, 0}, {{1, 1}, {2, -1}, {0, 1}}};
  CHECK(step_labels(c) == std::vector<std::string>{"+α2", "−α3", "+α1"});
}
