#include <doctest.h>

#include <algorithm>
#include <iterator>

#include "flagspace/errors.hpp"
#include "flagspace/frobenius.hpp"
#include "support.hpp"

using namespace flagspace;
using testing::graded;
using testing::sorted;
using testing::sorted_strings;
using testing::vec;

namespace {

std::vector<std::size_t> minus(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// gamma + k alpha counted with plain vector arithmetic and oracle membership.
int oracle_iterated(const Distribution& d, const oracle::RootData& ref, std::size_t alpha, int k) {
  const auto& rs = d.graded().roots();
  int count = 0;
  for (std::size_t g : d.root_indices()) {
    const auto v = oracle::add(vec(rs.positive(g)), vec(rs.positive(alpha)), k);
    if (!ref.roots.count(v)) continue;
    if (!d.contains_root(rs.index_of(testing::root(v)))) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("F4 case tables") {
  struct Row {
    const char* marking;
    MultiDegree eta1, eta2;
    int rank1, rank2;
  };
  for (const Row& row : {Row{"1,4", {1, 0}, {2, 0}, 3, 5}, Row{"2,4", {1, 0}, {2, 0}, 1, 2},
                         Row{"1,2,4", {0, 1, 0}, {0, 2, 0}, 2, 3}}) {
    CAPTURE(row.marking);
    const auto gs = graded("F4", row.marking);
    const auto d = column_sum(gs);
    CHECK(frobenius_rank(d, highest_weight_vector(gs, row.eta1)) == row.rank1);
    CHECK(frobenius_rank(d, highest_weight_vector(gs, row.eta2)) == row.rank2);
  }
}

TEST_CASE("shifted closures of F4 Case I") {
  const auto gs = graded("F4", "1,4");
  const auto& rs = gs.roots();
  const auto d = make_distribution(gs, {MultiDegree{2, 0}, MultiDegree{0, 1}});
  const auto h1 = highest_weight_vector(gs, {1, 0});
  const auto h2 = highest_weight_vector(gs, {2, 0});
  CHECK(shifted_closure(d, h1, 0) == d.degrees());
  const auto r1 = roots_of_degrees(gs, shifted_closure(d, h1, 1));
  const auto r2 = roots_of_degrees(gs, shifted_closure(d, h2, 1));
  CHECK(sorted_strings(rs, minus(r1, d.root_indices())) == sorted({"1111", "1211", "1221", "1321"}));
  CHECK(sorted_strings(rs, minus(r2, r1)) == sorted({"2211", "2221", "2321", "2421", "2431"}));
  CHECK_THROWS_AS(shifted_closure(d, h1, -1), InputError);
}

TEST_CASE("iterated ranks") {
  const auto gs = graded("F4", "1,4");
  const auto d = column_sum(gs);
  const auto h = highest_weight_vector(gs, {1, 0});
  CHECK(iterated_rank(d, h, 1) == frobenius_rank(d, h));
  CHECK_THROWS_AS(iterated_rank(d, h, 0), InputError);
  CHECK_THROWS_AS(iterated_rank(d, h, 4), InputError);

  const auto outside = highest_weight_vector(gs, {1, 1});
  CHECK_THROWS_AS(frobenius_rank(d, outside), InputError);
  CHECK_THROWS_AS(chern_direct(d, outside), InputError);
  CHECK_THROWS_AS(rank_profile(d, {1, 1}), InputError);
  CHECK_THROWS_AS(highest_weight_vector(gs, {0, 2}), InputError);

  // Against vector arithmetic, and vanishing in simply-laced types.
  for (const auto& t : all_types(4)) {
    const auto rs = RootSystem::build(t);
    const auto ref = testing::oracle_for(t);
    int max_third = 0;
    for (const auto& m : all_markings(t.rank)) {
      const auto g = grade(rs, m);
      for (const auto& dist : enumerate_distributions(g)) {
        for (const auto& lam : dist.degrees()) {
          const auto hw = highest_weight_vector(g, lam);
          for (int k = 1; k <= 3; ++k) {
            const int r = iterated_rank(dist, hw, k);
            REQUIRE(r == oracle_iterated(dist, ref, hw.root, k));
            if (k >= 2 && rs.simply_laced()) REQUIRE(r == 0);
          }
          max_third = std::max(max_third, iterated_rank(dist, hw, 3));
        }
      }
    }
    if (t.family == Family::G) CHECK(max_third > 0);
    else CHECK(max_third == 0);
  }
}

TEST_CASE("Chern numbers") {
  const auto gs = graded("F4", "1,4");
  const auto& rs = gs.roots();
  const auto t = tangent_distribution(gs);
  for (const auto& lam : t.degrees()) CHECK(chern_number(t, highest_weight_vector(gs, lam)) == 0);

  // eta2 of Case I: p - q over the complement, by walking strings.
  const auto d = column_sum(gs);
  const auto h2 = highest_weight_vector(gs, {2, 0});
  const Root alpha = rs.positive(h2.root);
  int walked = 0, complement = 0;
  for (std::size_t b = 0; b < rs.num_positive(); ++b) {
    if (gs.in_levi(b) || d.contains_root(b)) continue;
    ++complement;
    const Root beta = rs.positive(b);
    int p = 0, q = 0;
    while (rs.is_root(beta - (p + 1) * alpha)) ++p;
    while (rs.is_root(beta + (q + 1) * alpha)) ++q;
    walked += p - q;
  }
  CHECK(complement == 10);
  CHECK(chern_direct(d, h2) == walked);
  CHECK(chern_number(d, h2) == 5);

  const auto p = rank_profile(d, {1, 0});
  CHECK(p.ranks == std::array<int, 3>{3, 2, 0});
  CHECK(p.chern_direct == 5);
  CHECK(p.identity_holds);
  CHECK(to_string(rs.positive(p.root)) == "1210");
}

TEST_CASE("Chern identity mismatch on a short highest-weight root") {
  // B2 with the short node marked, D = D^1: the coroot sum is 2 but the
  // iterated ranks only see 1.
  const auto gs = graded("B2", "2");
  const auto d = level_distribution(gs, 1);
  const auto h = highest_weight_vector(gs, {1});
  CHECK(chern_direct(d, h) == 2);
  CHECK(chern_via_ranks(d, h) == 1);
  CHECK_THROWS_AS(chern_number(d, h), InvariantViolation);
  const auto p = rank_profile(d, {1});
  CHECK_FALSE(p.identity_holds);
}

TEST_CASE("Chern identity holds for simply-laced types") {
  for (const auto& t : all_types(5)) {
    const auto rs = RootSystem::build(t);
    if (!rs.simply_laced()) continue;
    for (const auto& m : all_markings(t.rank)) {
      const auto g = grade(rs, m);
      for (const auto& dist : enumerate_distributions(g))
        for (const auto& p : rank_profiles(dist)) REQUIRE(p.identity_holds);
    }
  }
}

TEST_CASE("doubling along a single node") {
  // Simply-laced, both lambda and 2 lambda in D.
  for (const auto& t : all_types(5)) {
    const auto rs = RootSystem::build(t);
    if (!rs.simply_laced()) continue;
    for (const auto& m : all_markings(t.rank)) {
      const auto g = grade(rs, m);
      for (int i = 0; i < m.size(); ++i) {
        const auto unit = MultiDegree::unit(m.size(), i);
        if (g.realized_index(unit.scaled(2)) == GradedSystem::npos) continue;
        const auto d = column_sum(g);
        const auto one = rank_profile(d, unit), two = rank_profile(d, unit.scaled(2));
        CAPTURE(t.name());
        CAPTURE(m.to_string());
        REQUIRE(two.chern_direct == 2 * one.chern_direct);
        REQUIRE(two.ranks[0] == 2 * one.ranks[0]);
      }
    }
  }
}

TEST_CASE("rank vanishes exactly on the Cauchy characteristic") {
  for (const auto& t : all_types(4)) {
    const auto rs = RootSystem::build(t);
    for (const auto& m : all_markings(t.rank)) {
      const auto g = grade(rs, m);
      for (const auto& d : enumerate_distributions(g)) {
        const auto ch = cauchy_characteristic(d);
        for (const auto& lam : d.degrees()) {
          const auto h = highest_weight_vector(g, lam);
          REQUIRE((frobenius_rank(d, h) == 0) == (ch && ch->contains_root(h.root)));
        }
      }
    }
  }
}

TEST_CASE("enlarging a distribution can raise the rank") {
  // A2 fully marked: adding (0,1) gives alpha_1 + alpha_2 a new source outside D.
  const auto g = graded("A2", "1,2");
  const auto small = make_distribution(g, {MultiDegree{1, 0}});
  const auto big = make_distribution(g, {MultiDegree{1, 0}, MultiDegree{0, 1}});
  const auto h = highest_weight_vector(g, {1, 0});
  CHECK(small.is_subset_of(big));
  CHECK(frobenius_rank(small, h) == 0);
  CHECK(frobenius_rank(big, h) == 1);
}

TEST_CASE("rank formulas for the printed families") {
  SUBCASE("B_k with alpha_k marked") {
    struct Spot {
      const char* type;
      const char* marking;
      int expected;
    };
    for (const Spot& s : {Spot{"B3", "1,3", 1}, Spot{"B4", "1,4", 1}, Spot{"B4", "2,4", 2}, Spot{"B4", "1,2,4", 1}}) {
      CAPTURE(s.type);
      CAPTURE(s.marking);
      const auto g = graded(s.type, s.marking);
      const int l = g.picard_number();
      const auto d = column_sum(g);
      const auto unit = MultiDegree::unit(l, l - 1);
      CHECK(rank_profile(d, unit).ranks[0] == s.expected);
      CHECK(rank_profile(d, unit.scaled(2)).ranks[0] == 2 * s.expected);
    }
  }
  SUBCASE("A_k, first and i-th node, D^1") {
    for (int k = 2; k <= 6; ++k)
      for (int i = 2; i <= k; ++i) {
        const auto g = graded("A" + std::to_string(k), "1," + std::to_string(i));
        const auto d = level_distribution(g, 1);
        CHECK(rank_profile(d, {1, 0}).ranks[0] == k - i + 1);
        CHECK(rank_profile(d, {0, 1}).ranks[0] == 1);
      }
  }
  SUBCASE("C_k, first and last node, E = D^{1,1}") {
    for (int k = 2; k <= 5; ++k) {
      const auto g = graded("C" + std::to_string(k), "1," + std::to_string(k));
      const auto e = make_distribution(g, {MultiDegree{1, 1}});
      CHECK(rank_profile(e, {1, 0}).ranks[0] == 1);
      CHECK(rank_profile(e, {0, 1}).ranks[0] == 0);
    }
  }
  SUBCASE("F4, first two nodes") {
    const auto g = graded("F4", "1,2");
    const auto d = make_distribution(g, {MultiDegree{1, 0}, MultiDegree{0, 2}});
    CHECK(rank_profile(d, {1, 0}).ranks[0] == 6);
    CHECK(rank_profile(d, {0, 1}).ranks[0] == 1);
  }
}
