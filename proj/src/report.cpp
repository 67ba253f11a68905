#include "flagspace/report.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "flagspace/errors.hpp"
#include "flagspace/frobenius.hpp"

namespace flagspace {

using nlohmann::json;

namespace {

std::vector<int> values(const MultiDegree& d) { return {d.values().begin(), d.values().end()}; }

std::vector<std::vector<int>> degree_lists(const std::vector<MultiDegree>& ds) {
  std::vector<std::vector<int>> out;
  for (const auto& d : ds) out.push_back(values(d));
  return out;
}

std::string rank_inequality(const Distribution& d, const std::vector<RankProfile>& profiles) {
  // rank F_{eta(e_i)} < rank F_{eta(2 e_i)} wherever both degrees lie in d.
  const int l = d.graded().picard_number();
  bool applicable = false, holds = true;
  for (int i = 0; i < l; ++i) {
    const auto unit = MultiDegree::unit(l, i);
    const auto twice = unit.scaled(2);
    auto one = std::find_if(profiles.begin(), profiles.end(), [&](const RankProfile& p) { return p.degree == unit; });
    auto two = std::find_if(profiles.begin(), profiles.end(), [&](const RankProfile& p) { return p.degree == twice; });
    if (one == profiles.end() || two == profiles.end()) continue;
    applicable = true;
    holds = holds && one->ranks[0] < two->ranks[0];
  }
  return !applicable ? "not-applicable" : holds ? "holds" : "fails";
}

}  // namespace

Distribution parse_distribution_spec(const GradedSystem& gs, std::string_view spec) {
  if (spec == "columns") return column_sum(gs);
  if (spec == "tangent") return tangent_distribution(gs);
  if (spec == "Dm-1") {
    if (gs.total_depth() < 2) throw InputError("Dm-1 needs total depth >= 2");
    return level_distribution(gs, gs.total_depth() - 1);
  }
  const std::string s(spec);
  std::smatch m;
  if (std::regex_match(s, m, std::regex(R"(D([0-9]+))"))) return level_distribution(gs, std::stoi(m[1]));
  if (std::regex_match(s, std::regex(R"(\s*\([0-9,\s]+\)(\s*,\s*\([0-9,\s]+\))*\s*)"))) {
    std::vector<MultiDegree> gens;
    const std::regex group(R"(\(([^)]*)\))");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), group); it != std::sregex_iterator(); ++it)
      gens.push_back(parse_multidegree((*it)[1].str()));
    return make_distribution(gs, gens);
  }
  throw InputError("unknown distribution spec '" + s + "'");
}

CaseReport run_case(const LieType& type, const Marking& marking, Numbering numbering, std::string_view dist_spec) {
  const std::string context = type.name() + " {" + marking.to_string() + "}: ";
  try {
    const RootSystem rs = RootSystem::build(type, numbering);
    const GradedSystem gs = grade(rs, marking);
    const Distribution d = parse_distribution_spec(gs, dist_spec);

    CaseReport r;
    r.type = type.name();
    for (int node : marking.nodes()) r.marking.push_back(node + 1);
    r.numbering = to_string(numbering);
    r.depths.assign(gs.node_depths().begin(), gs.node_depths().end());
    r.max_coefficients.assign(gs.max_marked_coefficients().begin(), gs.max_marked_coefficients().end());
    r.total_depth = gs.total_depth();
    r.classification = classify_space(gs);
    r.positive_roots = rs.num_positive();
    r.levi_positive_roots = gs.levi_positive_count();

    const auto all = enumerate_distributions(gs);
    r.distribution_count = all.size();
    try {
      for (const auto& e : all) is_proper(e);
    } catch (const InvariantViolation&) {
      r.verdicts.properness_criterion = false;
    }

    auto& ds = r.distribution;
    ds.spec = std::string(dist_spec);
    ds.antichain = degree_lists(d.antichain());
    for (std::size_t idx : d.root_indices()) ds.root_set.push_back(to_string(rs.positive(idx)));
    std::sort(ds.root_set.begin(), ds.root_set.end());
    ds.proper = d.ideal().count() != gs.num_realized();
    ds.integrable = is_integrable(d);
    if (auto ch = cauchy_characteristic(d)) ds.cauchy_characteristic = degree_lists(ch->antichain());

    const auto profiles = rank_profiles(d);
    for (const auto& p : profiles) {
      r.profiles.push_back({values(p.degree), to_string(rs.positive(p.root)), p.ranks, p.chern_direct,
                            p.chern_via_ranks, p.identity_holds});
      r.verdicts.chern_identity = r.verdicts.chern_identity && p.identity_holds;
    }
    r.verdicts.rank_inequality = rank_inequality(d, profiles);
    return r;
  } catch (const InputError& e) {
    throw InputError(context + e.what());
  }
}

// ------------------------------------------------------------------ JSON

std::string report_to_json(const CaseReport& r) {
  json j;
  j["schema"] = r.schema;
  j["type"] = r.type;
  j["marking"] = r.marking;
  j["numbering"] = r.numbering;
  j["depths"] = r.depths;
  j["max_coefficients"] = r.max_coefficients;
  j["total_depth"] = r.total_depth;
  j["classification"] = {{"hermitian_symmetric", r.classification.hermitian_symmetric},
                         {"contact_candidate", r.classification.contact_candidate},
                         {"picard_number", r.classification.picard_number},
                         {"total_depth", r.classification.total_depth},
                         {"dim_g2", r.classification.dim_g2}};
  j["positive_roots"] = r.positive_roots;
  j["levi_positive_roots"] = r.levi_positive_roots;
  j["distribution_count"] = r.distribution_count;
  const auto& ds = r.distribution;
  j["distribution"] = {{"spec", ds.spec},
                       {"antichain", ds.antichain},
                       {"root_set", ds.root_set},
                       {"proper", ds.proper},
                       {"integrable", ds.integrable},
                       {"cauchy_characteristic", ds.cauchy_characteristic ? json(*ds.cauchy_characteristic) : json()}};
  j["profiles"] = json::array();
  for (const auto& p : r.profiles)
    j["profiles"].push_back({{"degree", p.degree},
                             {"root", p.root},
                             {"ranks", p.ranks},
                             {"chern", p.chern_direct},
                             {"chern_via_ranks", p.chern_via_ranks},
                             {"identity_holds", p.identity_holds}});
  j["verdicts"] = {{"rank_inequality", r.verdicts.rank_inequality},
                   {"properness_criterion", r.verdicts.properness_criterion},
                   {"chern_identity", r.verdicts.chern_identity}};
  return j.dump(2) + "\n";
}

CaseReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema)
      throw InputError("unsupported report schema '" + j.at("schema").get<std::string>() + "'");
    CaseReport r;
    r.schema = j.at("schema").get<std::string>();
    r.type = j.at("type").get<std::string>();
    r.marking = j.at("marking").get<std::vector<int>>();
    r.numbering = j.at("numbering").get<std::string>();
    r.depths = j.at("depths").get<std::vector<int>>();
    r.max_coefficients = j.at("max_coefficients").get<std::vector<int>>();
    r.total_depth = j.at("total_depth").get<int>();
    const auto& c = j.at("classification");
    r.classification.hermitian_symmetric = c.at("hermitian_symmetric").get<bool>();
    r.classification.contact_candidate = c.at("contact_candidate").get<bool>();
    r.classification.picard_number = c.at("picard_number").get<int>();
    r.classification.total_depth = c.at("total_depth").get<int>();
    r.classification.dim_g2 = c.at("dim_g2").get<int>();
    r.positive_roots = j.at("positive_roots").get<std::size_t>();
    r.levi_positive_roots = j.at("levi_positive_roots").get<std::size_t>();
    r.distribution_count = j.at("distribution_count").get<std::size_t>();
    const auto& d = j.at("distribution");
    r.distribution.spec = d.at("spec").get<std::string>();
    r.distribution.antichain = d.at("antichain").get<std::vector<std::vector<int>>>();
    r.distribution.root_set = d.at("root_set").get<std::vector<std::string>>();
    r.distribution.proper = d.at("proper").get<bool>();
    r.distribution.integrable = d.at("integrable").get<bool>();
    if (!d.at("cauchy_characteristic").is_null())
      r.distribution.cauchy_characteristic = d.at("cauchy_characteristic").get<std::vector<std::vector<int>>>();
    for (const auto& p : j.at("profiles")) {
      ProfileSummary s;
      s.degree = p.at("degree").get<std::vector<int>>();
      s.root = p.at("root").get<std::string>();
      s.ranks = p.at("ranks").get<std::array<int, 3>>();
      s.chern_direct = p.at("chern").get<int>();
      s.chern_via_ranks = p.at("chern_via_ranks").get<int>();
      s.identity_holds = p.at("identity_holds").get<bool>();
      r.profiles.push_back(std::move(s));
    }
    const auto& v = j.at("verdicts");
    r.verdicts.rank_inequality = v.at("rank_inequality").get<std::string>();
    r.verdicts.properness_criterion = v.at("properness_criterion").get<bool>();
    r.verdicts.chern_identity = v.at("chern_identity").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

// ------------------------------------------------------------------ text

namespace {

std::string list(const std::vector<int>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

}  // namespace

std::string report_to_text(const CaseReport& r) {
  std::ostringstream os;
  std::string marking;
  for (std::size_t i = 0; i < r.marking.size(); ++i) marking += (i ? "," : "") + std::to_string(r.marking[i]);
  os << r.type << " marking {" << marking << "} (" << r.numbering << " numbering)\n";
  os << "  positive roots " << r.positive_roots << ", of degree 0: " << r.levi_positive_roots << "\n";
  os << "  depths " << list(r.depths) << ", max coefficients " << list(r.max_coefficients) << ", total depth "
     << r.total_depth << "\n";
  os << "  picard number " << r.classification.picard_number << ", dim g2 " << r.classification.dim_g2
     << (r.classification.hermitian_symmetric ? ", hermitian symmetric" : "")
     << (r.classification.contact_candidate ? ", contact candidate" : "") << "\n";
  os << "  equivariant distributions: " << r.distribution_count << "\n";
  const auto& d = r.distribution;
  os << "distribution " << d.spec << "\n  antichain";
  for (const auto& a : d.antichain) os << ' ' << list(a);
  os << "\n  roots";
  for (const auto& s : d.root_set) os << ' ' << s;
  os << "\n  " << (d.proper ? "proper" : "not proper") << ", " << (d.integrable ? "integrable" : "not integrable")
     << "\n  cauchy characteristic";
  if (!d.cauchy_characteristic) os << " empty";
  else
    for (const auto& a : *d.cauchy_characteristic) os << ' ' << list(a);
  os << "\nprofiles\n";
  for (const auto& p : r.profiles) {
    os << "  " << list(p.degree) << ' ' << p.root << "  ranks " << p.ranks[0] << ' ' << p.ranks[1] << ' '
       << p.ranks[2] << "  chern " << p.chern_direct;
    if (!p.identity_holds) os << " (iterated ranks give " << p.chern_via_ranks << ")";
    os << '\n';
  }
  os << "verdicts\n  rank inequality: " << r.verdicts.rank_inequality
     << "\n  properness criterion: " << (r.verdicts.properness_criterion ? "holds" : "fails")
     << "\n  chern identity: " << (r.verdicts.chern_identity ? "holds" : "fails") << '\n';
  return os.str();
}

}  // namespace flagspace
