#include <doctest.h>

#include <algorithm>

#include "flagspace/errors.hpp"
#include "flagspace/frobenius.hpp"
#include "flagspace/registry.hpp"
#include "flagspace/report.hpp"
#include "flagspace/sweep.hpp"
#include "support.hpp"

using namespace flagspace;

namespace {

CaseReport report(const std::string& type, const std::string& marking, std::string_view spec = "columns",
                  Numbering n = Numbering::paper) {
  const auto t = LieType::parse(type);
  return run_case(t, Marking::parse(marking, t.rank), n, spec);
}

const ProfileSummary& profile(const CaseReport& r, const std::vector<int>& degree) {
  const auto it = std::find_if(r.profiles.begin(), r.profiles.end(), [&](const auto& p) { return p.degree == degree; });
  if (it == r.profiles.end()) throw std::runtime_error("no profile");
  return *it;
}

}  // namespace

TEST_CASE("run_case") {
  SUBCASE("A1 tangent") {
    const auto r = report("A1", "1", "tangent");
    CHECK(r.total_depth == 1);
    CHECK(r.classification.hermitian_symmetric);
    CHECK(r.distribution_count == 1);
    CHECK(r.distribution.root_set == std::vector<std::string>{"1"});
    CHECK_FALSE(r.distribution.proper);
    CHECK(r.verdicts.rank_inequality == "not-applicable");
  }
  SUBCASE("F4 cases") {
    const auto one = report("F4", "1,4", "(2,0),(0,1)");
    REQUIRE(one.profiles.size() == 3);
    CHECK(one.profiles[0].degree == std::vector<int>{0, 1});
    CHECK(profile(one, {1, 0}).ranks[0] == 3);
    CHECK(profile(one, {1, 0}).root == "1210");
    CHECK(profile(one, {2, 0}).ranks[0] == 5);
    CHECK(one.distribution.root_set.size() == 10);
    CHECK(one.verdicts.rank_inequality == "holds");
    CHECK(one.verdicts.properness_criterion);
    CHECK(one.depths == std::vector<int>{2, 1});
    CHECK(one.total_depth == 4);

    const auto two = report("F4", "2,4");
    CHECK(profile(two, {1, 0}).ranks[0] == 1);
    CHECK(profile(two, {2, 0}).ranks[0] == 2);
    CHECK(report("F4", "1,4").distribution.root_set == one.distribution.root_set);
  }
  SUBCASE("distribution specs") {
    const auto g = testing::graded("F4", "1,4");
    CHECK(parse_distribution_spec(g, "columns") == column_sum(g));
    CHECK(parse_distribution_spec(g, "tangent") == tangent_distribution(g));
    CHECK(parse_distribution_spec(g, "D2") == level_distribution(g, 2));
    CHECK(parse_distribution_spec(g, "Dm-1") == level_distribution(g, 3));
    CHECK(parse_distribution_spec(g, " (2,0), (0,1) ") == make_distribution(g, {MultiDegree{2, 0}, MultiDegree{0, 1}}));
    for (const char* bad : {"", "D0", "Dx", "(3,0)", "(1,0,0)", "(0,0)", "columns,", "(1,0)(0,1)"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_distribution_spec(g, bad), InputError);
    }
  }
  SUBCASE("errors carry the case") {
    try {
      report("F4", "1,4", "(5,0)");
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("F4") != std::string::npos);
    }
  }
}

TEST_CASE("reports serialize") {
  const auto r = report("F4", "1,4");
  const auto json = report_to_json(r);
  CHECK(report_from_json(json) == r);
  CHECK(report_to_json(report("F4", "1,4")) == json);
  CHECK(report_to_json(report_from_json(json)) == json);
  CHECK(json.find("\"schema\": \"flagspace.case-report/1\"") != std::string::npos);
  CHECK_FALSE(report_to_text(r).empty());

  CHECK_THROWS_AS(report_from_json("{"), InputError);
  CHECK_THROWS_AS(report_from_json("[]"), InputError);
  std::string foreign = json;
  foreign.replace(foreign.find("case-report/1"), 13, "case-report/9");
  CHECK_THROWS_AS(report_from_json(foreign), InputError);

  // Every root string in a report parses in its own numbering.
  for (const auto& t : all_types(4)) {
    const auto rs = RootSystem::build(t, Numbering::paper);
    for (const auto& m : all_markings(t.rank)) {
      const auto rep = run_case(t, m, Numbering::paper);
      for (const auto& s : rep.distribution.root_set) REQUIRE(rs.is_positive_root(parse_root(s, t.rank)));
      for (const auto& p : rep.profiles) REQUIRE(rs.is_positive_root(parse_root(p.root, t.rank)));
      REQUIRE(report_from_json(report_to_json(rep)) == rep);
    }
  }
}

TEST_CASE("replay") {
  const auto all = replay();
  CHECK(all.ok());
  CHECK(all.ran.size() == paper_cases().size());
  CHECK(all.expectations > 200);

  const auto three = replay(std::string("F4-caseIII"));
  CHECK(three.ok());
  CHECK(three.ran == std::vector<std::string>{"F4-caseIII"});

  CHECK_THROWS_AS(replay(std::string("F4-caseIV")), InputError);

  // Bourbaki labels break the F4 lists and nothing else.
  const auto wrong = replay(std::nullopt, Numbering::bourbaki);
  CHECK_FALSE(wrong.ok());
  for (const auto& m : wrong.mismatches) CHECK((m.case_id.rfind("F4-case", 0) == 0 || m.case_id == "root-lengths"));
  bool root_list = std::any_of(wrong.mismatches.begin(), wrong.mismatches.end(),
                               [](const Mismatch& m) { return m.case_id == "F4-caseI"; });
  CHECK(root_list);
}

TEST_CASE("numbering resolution") {
  for (Family f : {Family::F, Family::G}) {
    const LieType t{f, f == Family::F ? 4 : 2};
    const auto perms = consistent_permutations(t);
    REQUIRE(perms.size() == 1);
    CHECK(perms[0] == node_permutation(t, Numbering::paper));
  }
  CHECK_THROWS_AS(consistent_permutations({Family::B, 3}), InputError);
}

TEST_CASE("small sweep") {
  const auto checks = all_checks();
  const auto s = sweep(2, checks);
  CHECK(s.cells > 0);
  for (const auto& st : s.stats) {
    CAPTURE(to_string(st.check));
    CHECK(st.items > 0);
    if (st.check != Check::chern_identity) CHECK(st.failures == 0);
  }
  // Every Chern mismatch at rank <= 2 sits on a short highest-weight root.
  const auto& chern = s.at(Check::chern_identity);
  CHECK(chern.failures > 0);
  for (const auto& t : all_types(2)) {
    const auto rs = RootSystem::build(t, Numbering::paper);
    for (const auto& m : all_markings(t.rank)) {
      const auto g = grade(rs, m);
      for (const auto& d : sweep_distributions(g))
        for (const auto& p : rank_profiles(d))
          if (!p.identity_holds) CHECK_FALSE(rs.is_long(p.root));
    }
  }
}

TEST_CASE("serial and parallel paths agree") {
  const auto checks = all_checks();
  const auto par = sweep(3, checks, Execution::parallel);
  const auto ser = sweep(3, checks, Execution::serial);
  REQUIRE(par.stats.size() == ser.stats.size());
  for (std::size_t i = 0; i < par.stats.size(); ++i) {
    CHECK(par.stats[i].items == ser.stats[i].items);
    CHECK(par.stats[i].failures == ser.stats[i].failures);
    CHECK(par.stats[i].samples == ser.stats[i].samples);
  }
  for (const auto& [type, marking] : {std::pair{"E6", "1,3,4"}, std::pair{"F4", "1,2,3,4"}, std::pair{"B4", "2,4"}}) {
    const auto g = testing::graded(type, marking);
    CHECK(brute_force_ideals(g, Execution::parallel) == brute_force_ideals(g, Execution::serial));
  }
}

TEST_CASE("ideal oracle sweep and check names") {
  const std::vector<Check> one{Check::ideal_oracle};
  const auto s = sweep(4, one);
  CHECK(s.ok());
  CHECK(s.at(Check::ideal_oracle).failures == 0);
  CHECK(parse_checks("all") == all_checks());
  CHECK(parse_checks("chern-identity,strings") == std::vector<Check>{Check::chern_identity, Check::strings});
  CHECK_THROWS_AS(parse_checks("bogus"), InputError);
  CHECK_THROWS_AS(sweep(9, one), InputError);
  CHECK_THROWS_AS(sweep(0, one), InputError);
  CHECK(brute_force_ideals(testing::graded("A3", "1,2,3")).size() == 13);
}
