#include "flagspace/registry.hpp"

#include <algorithm>

#include "flagspace/distribution.hpp"
#include "flagspace/errors.hpp"
#include "flagspace/frobenius.hpp"

namespace flagspace {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

std::vector<std::string> root_strings(const RootSystem& rs, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(to_string(rs.positive(i)));
  return out;
}

std::vector<std::size_t> difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Marking one_based(std::vector<int> nodes, int rank) {
  for (int& n : nodes) --n;
  return Marking::from_nodes(std::move(nodes), rank);
}

std::string type_marking(const LieType& t, const Marking& m) { return t.name() + " {" + m.to_string() + "}"; }

}  // namespace

// ---------------------------------------------------------------- Checker

void Checker::expect(bool ok, const std::string& what) {
  ++checked_;
  if (!ok) mismatches_.push_back({id_, location_, what});
}

void Checker::expect_eq(long long expected, long long actual, const std::string& what) {
  expect(expected == actual, what + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual));
}

void Checker::expect_text(const std::string& expected, const std::string& actual, const std::string& what) {
  expect(expected == actual, what + ": expected " + expected + ", got " + actual);
}

void Checker::expect_set(std::vector<std::string> expected, std::vector<std::string> actual, const std::string& what) {
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  expect(expected == actual, what + ": expected " + join(expected) + ", got " + join(actual));
}

// ------------------------------------------------------------- F4 tables

const std::vector<F4Table>& f4_tables() {
  static const std::vector<F4Table> tables = {
      {"F4 Case I, Δ1={α1,α4}",
       {1, 4},
       {2, 1},
       {{2, 0}, {0, 1}},
       {1, 0},
       {2, 0},
       "1210",
       "2210",
       {"0001", "1000", "0011", "1100", "0111", "1110", "0211", "1210", "0221", "2210"},
       {"1111", "1211", "1221", "1321"},
       {"2211", "2221", "2321", "2421", "2431"},
       3,
       5},
      {"F4 Case II, Δ1={α2,α4}",
       {2, 4},
       {2, 1},
       {{2, 0}, {0, 1}},
       {1, 0},
       {2, 0},
       "1110",
       "2210",
       {"0001", "0100", "0011", "0110", "1100", "0210", "1110", "1210", "2210"},
       {"0111", "1111"},
       {"0211", "0221", "1211", "1221", "2211", "2221"},
       1,
       2},
      {"F4 Case III, Δ1={α1,α2,α4}",
       {1, 2, 4},
       {1, 2, 1},
       {{0, 2, 0}, {1, 0, 0}, {0, 0, 1}},
       {0, 1, 0},
       {0, 2, 0},
       "0110",
       "0210",
       {"0001", "0100", "1000", "0011", "0110", "0210"},
       {"1100", "0111", "1110"},
       {"0211", "1210", "0221"},
       2,
       3},
  };
  return tables;
}

void check_f4_table(const F4Table& t, const RootSystem& rs, Checker& c) {
  const GradedSystem gs = grade(rs, one_based(t.marking, rs.rank()));
  for (std::size_t i = 0; i < t.depths.size(); ++i)
    c.expect_eq(t.depths[i], gs.node_depths()[i], "depth m" + std::to_string(i + 1));

  std::vector<MultiDegree> gens;
  for (const auto& g : t.antichain) gens.emplace_back(g);
  const Distribution d = make_distribution(gs, gens);
  c.expect(d == column_sum(gs), "distribution is the sum of the column distributions");
  c.expect_set(t.root_set, root_strings(rs, d.root_indices()), "Φ_Λ̄");

  const auto h1 = highest_weight_vector(gs, MultiDegree(t.eta1_degree));
  const auto h2 = highest_weight_vector(gs, MultiDegree(t.eta2_degree));
  c.expect_text(t.eta1, to_string(rs.positive(h1.root)), "η1");
  c.expect_text(t.eta2, to_string(rs.positive(h2.root)), "η2");

  const auto base = d.root_indices();
  const auto s1 = shifted_closure(d, h1, 1);
  const auto s2 = shifted_closure(d, h2, 1);
  const auto r1 = roots_of_degrees(gs, s1);
  const auto r2 = roots_of_degrees(gs, s2);
  c.expect_set(t.first_difference, root_strings(rs, difference(r1, base)), "shifted closure of η1 minus Φ_Λ̄");
  c.expect_set(t.second_difference, root_strings(rs, difference(r2, r1)), "shifted closure of η2 minus that of η1");

  const int k1 = frobenius_rank(d, h1), k2 = frobenius_rank(d, h2);
  c.expect_eq(t.rank1, k1, "rank F_η1");
  c.expect_eq(t.rank2, k2, "rank F_η2");
  c.expect(k1 < k2, "rank F_η1 < rank F_η2");
}

void check_root_lengths(const RootSystem& rs, Checker& c) {
  const int n = rs.rank();
  const auto len = rs.simple_lengths();
  auto is_long = [&](int node) { return len[node] > *std::min_element(len.begin(), len.end()); };
  const std::string name = rs.type().name();
  for (int j = 0; j < n; ++j) {
    bool want_long = false;
    switch (rs.type().family) {
      case Family::B: want_long = j < n - 1; break;
      case Family::C: want_long = j == n - 1; break;
      case Family::F: want_long = j >= 2; break;
      case Family::G: want_long = j == 1; break;
      default: want_long = false; break;
    }
    c.expect(is_long(j) == want_long,
             name + " α" + std::to_string(j + 1) + " should be " + (want_long ? "long" : "short"));
  }
}

// ----------------------------------------------------------------- cases

namespace {

void case_f4_a1a2(Numbering numbering, Checker& c) {
  const RootSystem rs = RootSystem::build({Family::F, 4}, numbering);
  const GradedSystem gs = grade(rs, one_based({1, 2}, 4));
  const Distribution d = make_distribution(gs, {MultiDegree{1, 0}, MultiDegree{0, 2}});
  c.expect(d == column_sum(gs), "D^{1,0}+D^{0,2} is the sum of the column distributions");
  c.expect_eq(6, frobenius_rank(d, highest_weight_vector(gs, {1, 0})), "rank F_η10");
  c.expect_eq(1, frobenius_rank(d, highest_weight_vector(gs, {0, 1})), "rank F_η01");
}

void case_b_formula(Numbering numbering, Checker& c) {
  const std::vector<std::pair<int, std::vector<int>>> spots = {{3, {1, 3}}, {4, {1, 4}}, {4, {2, 4}}, {4, {1, 2, 4}}};
  for (const auto& [k, nodes] : spots) {
    const RootSystem rs = RootSystem::build({Family::B, k}, numbering);
    const Marking mk = one_based(nodes, k);
    const GradedSystem gs = grade(rs, mk);
    const std::string where = type_marking(rs.type(), mk);
    const int l = mk.size();
    for (int i = 0; i < l; ++i) c.expect_eq(i + 1 == l ? 2 : 1, gs.node_depths()[i], where + " depth m" + std::to_string(i + 1));
    const int r1 = nodes[l - 2];
    const int r2 = l >= 3 ? nodes[l - 3] : 0;
    const Distribution d = column_sum(gs);
    const auto unit = MultiDegree::unit(l, l - 1);
    c.expect_eq(r1 - r2, frobenius_rank(d, highest_weight_vector(gs, unit)), where + " rank F_η(0,..,0,1)");
    c.expect_eq(2 * (r1 - r2), frobenius_rank(d, highest_weight_vector(gs, unit.scaled(2))),
                where + " rank F_η(0,..,0,2)");
  }
}

void case_a_family(Numbering numbering, Checker& c) {
  for (int k = 2; k <= 6; ++k) {
    const RootSystem rs = RootSystem::build({Family::A, k}, numbering);
    for (int i = 2; i <= k; ++i) {
      const Marking mk = one_based({1, i}, k);
      const GradedSystem gs = grade(rs, mk);
      const Distribution d1 = level_distribution(gs, 1);
      const std::string where = type_marking(rs.type(), mk);
      c.expect_eq(k - i + 1, frobenius_rank(d1, highest_weight_vector(gs, {1, 0})), where + " rank F^{D1}_η10");
      c.expect_eq(1, frobenius_rank(d1, highest_weight_vector(gs, {0, 1})), where + " rank F^{D1}_η01");
    }
  }
}

void case_c_family(Numbering numbering, Checker& c) {
  for (int k = 2; k <= 5; ++k) {
    const RootSystem rs = RootSystem::build({Family::C, k}, numbering);
    const Marking mk = one_based({1, k}, k);
    const GradedSystem gs = grade(rs, mk);
    const std::string where = type_marking(rs.type(), mk);
    const Distribution d1 = level_distribution(gs, 1);
    const Distribution e = bracket_step(d1, d1);
    c.expect(e == make_distribution(gs, {MultiDegree{1, 1}}), where + " [D1,D1] = D^{1,1}");
    c.expect_eq(1, frobenius_rank(e, highest_weight_vector(gs, {1, 0})), where + " rank F^E_η10");
    c.expect_eq(0, frobenius_rank(e, highest_weight_vector(gs, {0, 1})), where + " rank F^E_η01");
  }
}

void case_c_ladder(int k, Numbering numbering, Checker& c) {
  const RootSystem rs = RootSystem::build({Family::C, k}, numbering);
  for (int a = 1; a <= k - 1; ++a) {
    for (int b = a + 1; b <= k - 1; ++b) {
      const Marking mk = one_based({a, b}, k);
      const GradedSystem gs = grade(rs, mk);
      const std::string where = type_marking(rs.type(), mk);
      c.expect_eq(1, gs.node_depths()[0], where + " depth m1");
      c.expect_eq(2, gs.node_depths()[1], where + " depth m2");
      const Distribution e1 = column_sum(gs);
      Distribution el = e1;
      for (int j = 2; j <= mk.size(); ++j) el = bracket_step(e1, el);
      std::vector<std::string> antichain;
      for (const auto& x : el.antichain()) antichain.push_back(to_string(x));
      c.expect_set({"(1,2)"}, antichain, where + " antichain of E^2");
      c.expect_eq(0, frobenius_rank(el, highest_weight_vector(gs, {0, 1})), where + " rank F^{E^2}_η2");
      const int r1 = frobenius_rank(el, highest_weight_vector(gs, {1, 0}));
      c.expect(r1 > 0, where + " rank F^{E^2}_η1 is nonzero, got " + std::to_string(r1));
    }
  }
}

void case_root_lengths(Numbering numbering, Checker& c) {
  for (int k = 2; k <= kMaxRank; ++k) {
    check_root_lengths(RootSystem::build({Family::B, k}, numbering), c);
    check_root_lengths(RootSystem::build({Family::C, k}, numbering), c);
  }
  check_root_lengths(RootSystem::build({Family::F, 4}, numbering), c);
  check_root_lengths(RootSystem::build({Family::G, 2}, numbering), c);
}

std::function<void(Numbering, Checker&)> f4_case(std::size_t i) {
  return [i](Numbering numbering, Checker& c) {
    check_f4_table(f4_tables()[i], RootSystem::build({Family::F, 4}, numbering), c);
  };
}

}  // namespace

const std::vector<PaperCase>& paper_cases() {
  static const std::vector<PaperCase> cases = {
      {"F4-caseI", f4_tables()[0].name, "root list, shifted closures, ranks (3,5)", f4_case(0)},
      {"F4-caseII", f4_tables()[1].name, "root list, shifted closures, ranks (1,2)", f4_case(1)},
      {"F4-caseIII", f4_tables()[2].name, "root list, shifted closures, ranks (2,3)", f4_case(2)},
      {"F4-a1a2", "F4, Δ1={α1,α2}, D=D^{1,0}+D^{0,2}", "ranks (6,1)", case_f4_a1a2},
      {"Bk-formula", "B_k with α_k marked", "rank η(0,..,1) = r_{l-1}-r_{l-2}, doubled at (0,..,2); B3, B4", case_b_formula},
      {"Ak-a1ai", "(A_k, {α1,αi}), D=D^1", "ranks (k-i+1, 1) for 2 <= i <= k <= 6", case_a_family},
      {"Ck-a1ak", "(C_k, {α1,αk}), E=[D^1,D^1]", "ranks (1, 0) for k <= 5", case_c_family},
      {"C4-ladder", "C4 bracket ladder, Δ1 of size 2 avoiding α4", "E^2 = D^{1,2}, kernel at η2",
       [](Numbering n, Checker& c) { case_c_ladder(4, n, c); }},
      {"C5-ladder", "C5 bracket ladder, Δ1 of size 2 avoiding α5", "E^2 = D^{1,2}, kernel at η2",
       [](Numbering n, Checker& c) { case_c_ladder(5, n, c); }},
      {"root-lengths", "long and short simple roots of B, C, F4, G2", "maximal-root case split", case_root_lengths},
  };
  return cases;
}

ReplayResult replay(const std::optional<std::string>& only, Numbering numbering) {
  const auto& cases = paper_cases();
  if (only && std::none_of(cases.begin(), cases.end(), [&](const PaperCase& pc) { return pc.id == *only; }))
    throw InputError("unknown case id '" + *only + "'");
  ReplayResult result;
  for (const auto& pc : cases) {
    if (only && pc.id != *only) continue;
    Checker c(pc.id, pc.location);
    try {
      pc.run(numbering, c);
    } catch (const std::exception& e) {
      c.fail(std::string("raised: ") + e.what());
    }
    result.ran.push_back(pc.id);
    result.expectations += c.checked();
    result.mismatches.insert(result.mismatches.end(), c.mismatches().begin(), c.mismatches().end());
  }
  return result;
}

}  // namespace flagspace
