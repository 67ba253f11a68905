#include "flagspace/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagspace/errors.hpp"
#include "flagspace/registry.hpp"
#include "flagspace/report.hpp"
#include "flagspace/sweep.hpp"

namespace flagspace {

namespace {

using nlohmann::json;

int cmd_report(const std::string& type_text, const std::string& marking_text, const std::string& numbering_text,
               const std::string& format, const std::string& dist, std::ostream& out) {
  const LieType type = LieType::parse(type_text);
  const Marking marking = Marking::parse(marking_text, type.rank);
  const CaseReport r = run_case(type, marking, parse_numbering(numbering_text), dist);
  out << (format == "json" ? report_to_json(r) : report_to_text(r));
  return kExitOk;
}

int cmd_replay(const std::string& only, const std::string& numbering_text, const std::string& format,
               std::ostream& out) {
  const auto result = replay(only.empty() ? std::nullopt : std::optional<std::string>(only),
                             parse_numbering(numbering_text));
  if (format == "json") {
    json j = {{"cases", result.ran}, {"expectations", result.expectations}, {"mismatches", json::array()}};
    for (const auto& m : result.mismatches)
      j["mismatches"].push_back({{"case", m.case_id}, {"location", m.location}, {"detail", m.detail}});
    out << j.dump(2) << '\n';
  } else {
    for (const auto& id : result.ran) {
      const bool bad = std::any_of(result.mismatches.begin(), result.mismatches.end(),
                                   [&](const Mismatch& m) { return m.case_id == id; });
      out << (bad ? "FAIL " : "ok   ") << id << '\n';
    }
    for (const auto& m : result.mismatches) out << "  " << m.case_id << " [" << m.location << "] " << m.detail << '\n';
    out << result.ran.size() << " cases, " << result.expectations << " expectations, " << result.mismatches.size()
        << " mismatches\n";
  }
  return result.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(int max_rank, const std::string& checks_text, bool serial, const std::string& format,
              std::size_t samples, std::ostream& out) {
  const auto checks = parse_checks(checks_text);
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = sweep(max_rank, checks, serial ? Execution::serial : Execution::parallel, samples);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (format == "json") {
    json j = {{"max_rank", s.max_rank}, {"cells", s.cells}, {"ok", s.ok()}, {"checks", json::array()}};
    for (const auto& st : s.stats)
      j["checks"].push_back({{"check", to_string(st.check)},
                             {"cells", st.cells},
                             {"items", st.items},
                             {"failures", st.failures},
                             {"samples", st.samples}});
    out << j.dump(2) << '\n';
  } else {
    out << "sweep up to rank " << s.max_rank << ": " << s.cells << " cells in " << secs << " s\n";
    for (const auto& st : s.stats) {
      out << (st.failures ? "FAIL " : "ok   ") << to_string(st.check) << ": " << st.items << " items over "
          << st.cells << " cells, " << st.failures << " failures\n";
      for (const auto& m : st.samples) out << "    " << m << '\n';
    }
  }
  return s.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_list_cases(std::ostream& out) {
  for (const auto& pc : paper_cases()) out << pc.id << "  " << pc.location << "  " << pc.summary << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-graded root combinatorics of rational homogeneous spaces", "flagspace"};
  app.require_subcommand(1);

  std::string type, marking, numbering = "paper", format = "text", dist = "columns";
  auto* report = app.add_subcommand("report", "Full report for one (type, marking)");
  report->add_option("--type", type, "Lie type, e.g. F4")->required();
  report->add_option("--marking", marking, "Marked nodes, one-based, e.g. 1,4")->required();
  report->add_option("--numbering", numbering, "paper, bourbaki")->check(CLI::IsMember({"paper", "bourbaki"}));
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--dist", dist, "columns, tangent, D<k>, Dm-1 or generators like (2,0),(0,1)");

  std::string only;
  auto* rep = app.add_subcommand("replay", "Replay the registered case computations");
  rep->add_option("--only", only, "Case id, see list-cases");
  rep->add_option("--numbering", numbering, "paper, bourbaki")->check(CLI::IsMember({"paper", "bourbaki"}));
  rep->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  int max_rank = 0;
  std::string checks = "all";
  bool serial = false;
  std::size_t samples = 20;
  auto* sw = app.add_subcommand("sweep", "Exhaustive checks over all types and markings");
  sw->add_option("--max-rank", max_rank, "1..8")->required();
  sw->add_option("--check", checks, "Comma list or all");
  sw->add_flag("--serial", serial, "Use the serial reference path");
  sw->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sw->add_option("--samples", samples, "Failures listed per check");

  auto* list = app.add_subcommand("list-cases", "List registered case ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*report) return cmd_report(type, marking, numbering, format, dist, out);
    if (*rep) return cmd_replay(only, numbering, format, out);
    if (*sw) return cmd_sweep(max_rank, checks, serial, format, samples, out);
    if (*list) return cmd_list_cases(out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitBadInput;
}

}  // namespace flagspace
