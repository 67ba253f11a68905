#include "flagspace/sweep.hpp"

#include <algorithm>
#include <map>

#include "flagspace/chains.hpp"
#include "flagspace/errors.hpp"
#include "flagspace/frobenius.hpp"

namespace flagspace {

namespace {

const std::vector<std::pair<Check, std::string>>& check_names() {
  static const std::vector<std::pair<Check, std::string>> names = {
      {Check::chern_identity, "chern-identity"}, {Check::ideal_oracle, "ideal-oracle"},
      {Check::properness, "properness"},         {Check::cauchy, "cauchy"},
      {Check::connectivity, "connectivity"},     {Check::chains, "chains"},
      {Check::degrees, "degrees"},               {Check::strings, "strings"},
      {Check::classification, "classification"},
  };
  return names;
}

}  // namespace

std::string to_string(Check c) {
  for (const auto& [k, name] : check_names())
    if (k == c) return name;
  return "?";
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& [k, _] : check_names()) out.push_back(k);
  return out;
}

std::vector<Check> parse_checks(std::string_view text) {
  if (text == "all") return all_checks();
  std::vector<Check> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    const auto tok = text.substr(pos, next - pos);
    auto it = std::find_if(check_names().begin(), check_names().end(), [&](const auto& kv) { return kv.second == tok; });
    if (it == check_names().end()) throw InputError("unknown check '" + std::string(tok) + "'");
    if (std::find(out.begin(), out.end(), it->first) == out.end()) out.push_back(it->first);
    pos = next + 1;
  }
  return out;
}

std::vector<SweepCell> sweep_cells(int max_rank) {
  std::vector<SweepCell> out;
  for (const auto& t : all_types(max_rank)) {
    bool first = true;
    for (auto& m : all_markings(t.rank)) {
      out.push_back({t, std::move(m), first});
      first = false;
    }
  }
  return out;
}

std::vector<Distribution> sweep_distributions(const GradedSystem& gs) {
  if (gs.roots().rank() <= kExhaustiveRank) return enumerate_distributions(gs);
  std::vector<Distribution> out;
  auto add = [&](Distribution d) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  };
  for (int i = 0; i < gs.picard_number(); ++i) add(column_distribution(gs, i));
  add(column_sum(gs));
  add(level_distribution(gs, 1));
  if (gs.total_depth() >= 2) add(level_distribution(gs, gs.total_depth() - 1));
  return out;
}

bool SweepSummary::ok() const {
  return std::all_of(stats.begin(), stats.end(), [](const CheckStats& s) { return s.failures == 0; });
}

const CheckStats& SweepSummary::at(Check c) const {
  for (const auto& s : stats)
    if (s.check == c) return s;
  throw InputError("check " + to_string(c) + " was not run");
}

// ------------------------------------------------------- brute-force ideals

namespace {

std::vector<std::uint64_t> down_masks(const GradedSystem& gs) {
  std::vector<std::uint64_t> out;
  for (std::size_t b = 0; b < gs.num_realized(); ++b) {
    std::uint64_t m = 0;
    const auto& down = gs.down_set(b);
    for (auto c = down.find_first(); c != IndexSet::npos; c = down.find_next(c)) m |= std::uint64_t{1} << c;
    out.push_back(m);
  }
  return out;
}

bool is_down_closed(std::uint64_t mask, const std::vector<std::uint64_t>& down) {
  for (std::uint64_t rest = mask; rest; rest &= rest - 1)
    if ((down[__builtin_ctzll(rest)] & ~mask) != 0) return false;
  return true;
}

}  // namespace

std::vector<std::uint64_t> brute_force_ideals(const GradedSystem& gs, Execution exec) {
  const std::size_t n = gs.num_realized();
  if (n > 40) throw InputError("brute_force_ideals: " + std::to_string(n) + " realized degrees is too many");
  const auto down = down_masks(gs);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> out;
  if (exec == Execution::serial) {
    for (std::uint64_t mask = 1; mask < total; ++mask)
      if (is_down_closed(mask, down)) out.push_back(mask);
    return out;
  }
  const auto chunks = static_cast<std::int64_t>(std::max<std::uint64_t>(1, total >> 12));
  const std::uint64_t width = (total + chunks - 1) / chunks;
  std::vector<std::vector<std::uint64_t>> found(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, c * width);
    const std::uint64_t hi = std::min(total, (c + 1) * width);
    for (std::uint64_t mask = lo; mask < hi; ++mask)
      if (is_down_closed(mask, down)) found[c].push_back(mask);
  }
  for (const auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<std::uint64_t> ideal_masks(std::span<const Distribution> ds) {
  std::vector<std::uint64_t> out;
  for (const auto& d : ds) {
    std::uint64_t m = 0;
    for (auto b = d.ideal().find_first(); b != IndexSet::npos; b = d.ideal().find_next(b)) m |= std::uint64_t{1} << b;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------- cell checks

namespace {

struct Tally {
  std::size_t items = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
  std::size_t max_messages = 0;

  template <class Message>
  void item(bool ok, Message&& message) {
    ++items;
    if (ok) return;
    ++failures;
    if (messages.size() < max_messages) messages.push_back(message());
  }
};

struct Cell {
  const SweepCell& cell;
  const RootSystem& rs;
  GradedSystem gs;
  std::vector<Distribution> dists;
  std::string name;
};

std::string antichain_label(const Distribution& d) {
  std::string out = "[";
  bool first = true;
  for (const auto& a : d.antichain()) {
    out += (first ? "" : " ") + to_string(a);
    first = false;
  }
  return out + "]";
}

void check_chern(const Cell& c, Tally& t) {
  for (const auto& d : c.dists) {
    for (const auto& lam : d.degrees()) {
      const auto p = rank_profile(d, lam);
      t.item(p.identity_holds, [&] {
        return c.name + " D=" + antichain_label(d) + " η" + to_string(lam) + "=" + to_string(c.rs.positive(p.root)) +
               ": coroot sum " + std::to_string(p.chern_direct) + ", iterated ranks " +
               std::to_string(p.chern_via_ranks);
      });
    }
  }
}

void check_ideal_oracle(const Cell& c, Tally& t, Execution exec) {
  if (c.rs.rank() > kExhaustiveRank) return;
  const auto brute = brute_force_ideals(c.gs, exec);
  const auto mine = ideal_masks(c.dists);
  t.item(brute == mine, [&] {
    return c.name + ": enumeration gives " + std::to_string(mine.size()) + " ideals, brute force " +
           std::to_string(brute.size());
  });
  for (const auto& d : c.dists) {
    const auto gens = d.antichain();
    t.item(make_distribution(c.gs, gens) == d,
           [&] { return c.name + " D=" + antichain_label(d) + ": antichain does not regenerate the ideal"; });
  }
}

void check_properness(const Cell& c, Tally& t) {
  std::vector<const Distribution*> proper;
  for (const auto& d : c.dists) {
    bool ok = true;
    try {
      if (is_proper(d)) proper.push_back(&d);
    } catch (const InvariantViolation&) {
      ok = false;
    }
    t.item(ok, [&] { return c.name + " D=" + antichain_label(d) + ": proper disagrees with D ⊂ D^{m-1}"; });
  }
  for (std::size_t i = 0; i < proper.size(); ++i) {
    for (std::size_t j = i + 1; j < proper.size(); ++j) {
      const Distribution sum = *proper[i] + *proper[j];
      t.item(sum.max_norm() <= c.gs.total_depth() - 1, [&] {
        return c.name + ": " + antichain_label(*proper[i]) + " + " + antichain_label(*proper[j]) + " is not proper";
      });
    }
  }
}

void check_cauchy(const Cell& c, Tally& t) {
  const bool exhaustive = c.rs.rank() <= kExhaustiveRank;
  for (const auto& d : c.dists) {
    std::optional<Distribution> ch;
    bool ok = true;
    std::string why;
    try {
      ch = cauchy_characteristic(d);
    } catch (const InvariantViolation& e) {
      ok = false;
      why = e.what();
    }
    t.item(ok, [&] { return c.name + " D=" + antichain_label(d) + ": " + why; });
    if (!ok) continue;
    t.item(!ch || ch->is_subset_of(d), [&] { return c.name + " D=" + antichain_label(d) + ": Ch(D) not inside D"; });
    for (const auto& lam : d.degrees()) {
      const auto hwv = highest_weight_vector(c.gs, lam);
      const bool in_ch = ch && ch->contains_root(hwv.root);
      t.item((frobenius_rank(d, hwv) == 0) == in_ch, [&] {
        return c.name + " D=" + antichain_label(d) + " η" + to_string(lam) + ": rank zero disagrees with Ch(D)";
      });
    }
    if (!exhaustive) continue;
    // Every sub-distribution strictly larger than Ch(D) has a root whose
    // bracket with D escapes D.
    for (const auto& e : c.dists) {
      if (!e.is_subset_of(d) || (ch && (!ch->is_subset_of(e) || e == *ch))) continue;
      const auto roots = e.root_indices();
      const auto droots = d.root_indices();
      const bool escapes = std::any_of(roots.begin(), roots.end(), [&](std::size_t a) {
        return std::any_of(droots.begin(), droots.end(), [&](std::size_t b) {
          std::size_t s = c.rs.sum_index(a, b);
          return s != RootSystem::npos && !d.contains_root(s);
        });
      });
      t.item(escapes, [&] {
        return c.name + " D=" + antichain_label(d) + ": " + antichain_label(e) + " also commutes with D mod D";
      });
    }
  }
}

void check_connectivity(const Cell& c, Tally& t) {
  for (std::size_t b = 0; b < c.gs.num_realized(); ++b) {
    const auto label = [&] { return c.name + " bucket " + to_string(c.gs.realized()[b]); };
    t.item(bucket_connected(c.gs, b), [&] { return label() + " is disconnected"; });
    const Root& top = c.rs.positive(c.gs.highest_weight(b));
    for (std::size_t r : c.gs.bucket(b)) {
      bool ok = false;
      try {
        ok = validate_isodegree_chain(c.gs, isodegree_chain(c.gs, c.rs.positive(r), top));
      } catch (const std::exception&) {
      }
      t.item(ok, [&] { return label() + ": no valid chain from " + to_string(c.rs.positive(r)); });
    }
  }
}

void check_chains(const Cell& c, Tally& t) {
  if (!c.cell.first_of_type) return;
  const auto roots = c.rs.positive_roots();
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      if (!a.leq(b)) continue;
      bool ok = false;
      try {
        const auto chain = ascend_chain(c.rs, a, b);
        ok = validate_chain(c.rs, chain) && static_cast<int>(chain.steps.size()) == b.height() - a.height();
      } catch (const std::exception&) {
      }
      t.item(ok, [&] { return c.name + ": no ascent " + to_string(a) + " -> " + to_string(b); });
    }
  }
}

void check_degrees(const Cell& c, Tally& t) {
  const int l = c.gs.picard_number();
  std::size_t bucketed = 0;
  for (std::size_t b = 0; b < c.gs.num_realized(); ++b) {
    bucketed += c.gs.bucket(b).size();
    const Root& alpha = c.rs.positive(c.gs.highest_weight(b));
    for (int i = 0; i < l; ++i) {
      bool ok = false;
      try {
        const Rational deg = curve_degree(c.gs, alpha, i);
        ok = deg.denominator() == 1 && deg.numerator() >= 0;
      } catch (const InvariantViolation&) {
      }
      t.item(ok, [&] { return c.name + ": curve degree of " + to_string(alpha) + " at marked node " + std::to_string(i + 1); });
    }
  }
  for (int j = 0; j < l; ++j) {
    const Root simple = Root::simple(c.rs.rank(), c.gs.marking().node(j));
    for (int i = 0; i < l; ++i)
      t.item(curve_degree(c.gs, simple, i) == Rational(i == j ? 1 : 0),
             [&] { return c.name + ": L" + std::to_string(i + 1) + "·C" + std::to_string(j + 1) + " is not δ"; });
  }
  t.item(bucketed + c.gs.levi_positive_count() == c.rs.num_positive(),
         [&] { return c.name + ": buckets do not partition the positive roots"; });
  t.item(c.gs.total_depth() == c.gs.degree_of(c.rs.highest_root()).norm1(),
         [&] { return c.name + ": total depth differs from the degree of the highest root"; });
}

void check_strings(const Cell& c, Tally& t) {
  if (!c.cell.first_of_type) return;
  const RootSystem& rs = c.rs;
  const bool g2 = rs.type().family == Family::G;
  for (const auto& alpha : rs.positive_roots()) {
    for (const auto& pos : rs.positive_roots()) {
      for (const Root& beta : {pos, -pos}) {
        if (beta == alpha || beta == -alpha) continue;
        bool ok = false;
        try {
          const auto s = root_string(rs, beta, alpha);
          ok = s.p - s.q == cartan_pairing(rs, beta, alpha) && s.p + s.q <= 3 && (g2 || s.p + s.q <= 2);
        } catch (const std::exception&) {
        }
        t.item(ok, [&] { return c.name + ": string of " + to_string(alpha) + " through " + to_string(beta); });
      }
    }
    for (const auto& x : coroot_expansion(rs, alpha))
      t.item(x.denominator() == 1, [&] { return c.name + ": non-integral coroot of " + to_string(alpha); });
    if (alpha.height() > 1) {
      bool descends = false;
      for (int j = 0; j < rs.rank() && !descends; ++j)
        descends = rs.is_positive_root(alpha - Root::simple(rs.rank(), j));
      t.item(descends, [&] { return c.name + ": " + to_string(alpha) + " has no simple descent"; });
    }
  }
}

void check_classification(const Cell& c, Tally& t) {
  t.item(c.gs.total_depth() != 1 || c.gs.picard_number() == 1, [&] { return c.name + ": m = 1 with l > 1"; });
  t.item(generated_integrable(level_distribution(c.gs, 1)) == tangent_distribution(c.gs),
         [&] { return c.name + ": D^1 does not generate T(S)"; });
}

bool needs_distributions(std::span<const Check> checks) {
  return std::any_of(checks.begin(), checks.end(), [](Check k) {
    return k == Check::chern_identity || k == Check::ideal_oracle || k == Check::properness || k == Check::cauchy;
  });
}

std::vector<Tally> run_cell(const SweepCell& sc, const RootSystem& rs, std::span<const Check> checks,
                            std::size_t max_samples, Execution exec) {
  std::vector<Tally> out(checks.size());
  for (auto& t : out) t.max_messages = max_samples;
  Cell c{sc, rs, grade(rs, sc.marking), {}, sc.type.name() + " {" + sc.marking.to_string() + "}"};
  if (needs_distributions(checks)) c.dists = sweep_distributions(c.gs);
  for (std::size_t k = 0; k < checks.size(); ++k) {
    Tally& t = out[k];
    try {
      switch (checks[k]) {
        case Check::chern_identity: check_chern(c, t); break;
        case Check::ideal_oracle: check_ideal_oracle(c, t, exec); break;
        case Check::properness: check_properness(c, t); break;
        case Check::cauchy: check_cauchy(c, t); break;
        case Check::connectivity: check_connectivity(c, t); break;
        case Check::chains: check_chains(c, t); break;
        case Check::degrees: check_degrees(c, t); break;
        case Check::strings: check_strings(c, t); break;
        case Check::classification: check_classification(c, t); break;
      }
    } catch (const std::exception& e) {
      t.item(false, [&] { return c.name + ": " + to_string(checks[k]) + " raised: " + e.what(); });
    }
  }
  return out;
}

}  // namespace

SweepSummary sweep(int max_rank, std::span<const Check> checks, Execution exec, std::size_t max_samples) {
  if (max_rank < 1 || max_rank > kMaxRank) throw InputError("max rank must be in 1..8");
  const auto cells = sweep_cells(max_rank);
  std::map<std::string, RootSystem> systems;
  for (const auto& t : all_types(max_rank)) systems.emplace(t.name(), RootSystem::build(t, Numbering::paper));

  std::vector<std::vector<Tally>> results(cells.size());
  const auto n = static_cast<std::int64_t>(cells.size());
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i)
      results[i] = run_cell(cells[i], systems.at(cells[i].type.name()), checks, max_samples, Execution::serial);
  } else {
    // Nested brute-force loops stay serial inside a parallel cell.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i)
      results[i] = run_cell(cells[i], systems.at(cells[i].type.name()), checks, max_samples, Execution::serial);
  }

  SweepSummary s;
  s.max_rank = max_rank;
  s.cells = cells.size();
  for (std::size_t k = 0; k < checks.size(); ++k) {
    CheckStats st;
    st.check = checks[k];
    for (const auto& r : results) {
      if (r[k].items) ++st.cells;
      st.items += r[k].items;
      st.failures += r[k].failures;
      for (const auto& m : r[k].messages)
        if (st.samples.size() < max_samples) st.samples.push_back(m);
    }
    s.stats.push_back(std::move(st));
  }
  return s;
}

}  // namespace flagspace
