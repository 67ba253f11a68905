#include "flagspace/distribution.hpp"

#include <algorithm>

#include "flagspace/errors.hpp"

namespace flagspace {

namespace {

void require_same(const Distribution& a, const Distribution& b, const char* op) {
  if (!a.graded().same_as(b.graded()))
    throw InputError(std::string(op) + ": distributions live on different graded systems");
}

}  // namespace

Distribution::Distribution(GradedSystem gs, IndexSet ideal)
    : gs_(std::move(gs)), ideal_(std::move(ideal)), roots_(gs_.roots().num_positive()) {
  for (auto b = ideal_.find_first(); b != IndexSet::npos; b = ideal_.find_next(b))
    for (std::size_t r : gs_.bucket(b)) roots_.set(r);
}

Distribution Distribution::from_ideal(const GradedSystem& gs, IndexSet ideal) {
  if (ideal.size() != gs.num_realized()) throw InputError("ideal has the wrong universe size");
  if (ideal.none()) throw InputError("the zero distribution is not admitted");
  for (auto b = ideal.find_first(); b != IndexSet::npos; b = ideal.find_next(b))
    if (!gs.down_set(b).is_subset_of(ideal))
      throw InputError("degree set is not downward closed at " + to_string(gs.realized()[b]));
  return Distribution(gs, std::move(ideal));
}

std::vector<MultiDegree> Distribution::degrees() const {
  std::vector<MultiDegree> out;
  for (auto b = ideal_.find_first(); b != IndexSet::npos; b = ideal_.find_next(b)) out.push_back(gs_.realized()[b]);
  return out;
}

std::vector<MultiDegree> Distribution::antichain() const {
  std::vector<MultiDegree> out;
  for (auto b = ideal_.find_first(); b != IndexSet::npos; b = ideal_.find_next(b)) {
    bool maximal = true;
    for (auto c = ideal_.find_next(b); c != IndexSet::npos && maximal; c = ideal_.find_next(c))
      if (gs_.down_set(c).test(b)) maximal = false;
    if (maximal) out.push_back(gs_.realized()[b]);
  }
  return out;
}

std::vector<std::size_t> Distribution::root_indices() const {
  std::vector<std::size_t> out;
  for (auto r = roots_.find_first(); r != IndexSet::npos; r = roots_.find_next(r)) out.push_back(r);
  return out;
}

bool Distribution::contains_degree(const MultiDegree& d) const {
  std::size_t b = gs_.realized_index(d);
  return b != GradedSystem::npos && ideal_.test(b);
}

int Distribution::max_norm() const {
  int m = 0;
  for (auto b = ideal_.find_first(); b != IndexSet::npos; b = ideal_.find_next(b))
    m = std::max(m, gs_.realized()[b].norm1());
  return m;
}

Distribution operator+(const Distribution& a, const Distribution& b) {
  require_same(a, b, "sum");
  return Distribution(a.gs_, a.ideal_ | b.ideal_);
}

Distribution close_downward(const GradedSystem& gs, const IndexSet& degrees) {
  IndexSet ideal(gs.num_realized());
  for (auto b = degrees.find_first(); b != IndexSet::npos; b = degrees.find_next(b)) ideal |= gs.down_set(b);
  return Distribution::from_ideal(gs, std::move(ideal));
}

Distribution make_distribution(const GradedSystem& gs, std::span<const MultiDegree> generators) {
  if (generators.empty()) throw InputError("make_distribution: no generators");
  const auto realized = gs.realized();
  IndexSet ideal(gs.num_realized());
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(gs.picard_number()))
      throw InputError("generator " + to_string(g) + " has the wrong length");
    if (!g.is_positive()) throw InputError("generator " + to_string(g) + " is not > 0");
    bool below_realized = std::any_of(realized.begin(), realized.end(), [&](const MultiDegree& r) { return g.leq(r); });
    if (!below_realized) throw InputError("generator " + to_string(g) + " exceeds every realized degree");
    for (std::size_t b = 0; b < realized.size(); ++b)
      if (realized[b].leq(g)) ideal.set(b);
  }
  return Distribution::from_ideal(gs, std::move(ideal));
}

Distribution make_distribution(const GradedSystem& gs, std::initializer_list<MultiDegree> generators) {
  return make_distribution(gs, std::span<const MultiDegree>(generators.begin(), generators.size()));
}

Distribution tangent_distribution(const GradedSystem& gs) {
  IndexSet all(gs.num_realized());
  all.set();
  return Distribution::from_ideal(gs, std::move(all));
}

Distribution level_distribution(const GradedSystem& gs, int k) {
  if (k < 1) throw InputError("level_distribution: k must be >= 1");
  IndexSet ideal(gs.num_realized());
  for (std::size_t b = 0; b < gs.num_realized(); ++b)
    if (gs.realized()[b].norm1() <= k) ideal.set(b);
  return Distribution::from_ideal(gs, std::move(ideal));
}

Distribution column_distribution(const GradedSystem& gs, int i) {
  if (i < 0 || i >= gs.picard_number()) throw InputError("column_distribution: marked index out of range");
  IndexSet ideal(gs.num_realized());
  for (std::size_t b = 0; b < gs.num_realized(); ++b) {
    const auto& deg = gs.realized()[b];
    bool pure = true;
    for (int j = 0; j < gs.picard_number(); ++j)
      if (j != i && deg[j] != 0) pure = false;
    if (pure) ideal.set(b);
  }
  return Distribution::from_ideal(gs, std::move(ideal));
}

Distribution column_sum(const GradedSystem& gs) {
  Distribution d = column_distribution(gs, 0);
  for (int i = 1; i < gs.picard_number(); ++i) d = d + column_distribution(gs, i);
  return d;
}

std::vector<Distribution> enumerate_distributions(const GradedSystem& gs) {
  // Realized degrees are sorted by |k|_1, a linear extension of the order, so
  // an ideal is built by deciding each degree in turn: it may join only when
  // everything strictly below it already has.
  const std::size_t n = gs.num_realized();
  std::vector<IndexSet> strict_down;
  for (std::size_t b = 0; b < n; ++b) {
    IndexSet s = gs.down_set(b);
    s.reset(b);
    strict_down.push_back(std::move(s));
  }
  std::vector<Distribution> out;
  IndexSet current(n);
  auto visit = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (current.any()) out.push_back(Distribution::from_ideal(gs, current));
      return;
    }
    self(self, pos + 1);
    if (strict_down[pos].is_subset_of(current)) {
      current.set(pos);
      self(self, pos + 1);
      current.reset(pos);
    }
  };
  visit(visit, 0);
  return out;
}

bool is_integrable(const Distribution& d) {
  const RootSystem& rs = d.graded().roots();
  const auto roots = d.root_indices();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a; b < roots.size(); ++b) {
      std::size_t s = rs.sum_index(roots[a], roots[b]);
      if (s != RootSystem::npos && !d.contains_root(s)) return false;
    }
  }
  return true;
}

bool is_proper(const Distribution& d) {
  const GradedSystem& gs = d.graded();
  bool proper = d.ideal().count() != gs.num_realized();
  bool below_top_level = d.max_norm() <= gs.total_depth() - 1;
  if (proper != below_top_level)
    throw InvariantViolation("properness criterion fails for a distribution of " + gs.roots().type().name());
  return proper;
}

Distribution bracket_step(const Distribution& d, const Distribution& e) {
  require_same(d, e, "bracket_step");
  const GradedSystem& gs = d.graded();
  const RootSystem& rs = gs.roots();
  IndexSet degrees = e.ideal();
  const auto rd = d.root_indices();
  const auto re = e.root_indices();
  for (std::size_t a : rd) {
    for (std::size_t b : re) {
      std::size_t s = rs.sum_index(a, b);
      if (s != RootSystem::npos) degrees.set(gs.bucket_of_root(s));
    }
  }
  return close_downward(gs, degrees);
}

Distribution generated_integrable(const Distribution& d) {
  Distribution cur = d;
  for (;;) {
    Distribution next = bracket_step(cur, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Distribution complementary(const Distribution& d) {
  const GradedSystem& gs = d.graded();
  std::vector<MultiDegree> missing;
  for (int i = 0; i < gs.picard_number(); ++i) {
    auto unit = MultiDegree::unit(gs.picard_number(), i);
    if (!d.contains_degree(unit)) missing.push_back(std::move(unit));
  }
  if (missing.empty()) throw InputError("complementary: every marked simple root already lies in the distribution");
  return generated_integrable(make_distribution(gs, missing));
}

std::optional<Distribution> cauchy_characteristic(const Distribution& d) {
  const GradedSystem& gs = d.graded();
  const RootSystem& rs = gs.roots();
  const auto roots = d.root_indices();
  IndexSet kept(rs.num_positive());
  for (std::size_t a : roots) {
    bool escapes = std::any_of(roots.begin(), roots.end(), [&](std::size_t b) {
      std::size_t s = rs.sum_index(a, b);
      return s != RootSystem::npos && !d.contains_root(s);
    });
    if (!escapes) kept.set(a);
  }
  IndexSet degrees(gs.num_realized());
  for (auto b = d.ideal().find_first(); b != IndexSet::npos; b = d.ideal().find_next(b)) {
    const auto bucket = gs.bucket(b);
    auto in = std::count_if(bucket.begin(), bucket.end(), [&](std::size_t r) { return kept.test(r); });
    if (in != 0 && static_cast<std::size_t>(in) != bucket.size())
      throw InvariantViolation("Cauchy characteristic splits bucket " + to_string(gs.realized()[b]));
    if (in != 0) degrees.set(b);
  }
  if (degrees.none()) return std::nullopt;
  for (auto b = degrees.find_first(); b != IndexSet::npos; b = degrees.find_next(b))
    if (!gs.down_set(b).is_subset_of(degrees))
      throw InvariantViolation("Cauchy characteristic is not downward closed at " + to_string(gs.realized()[b]));
  Distribution ch = Distribution::from_ideal(gs, degrees);
  if (!is_integrable(ch)) throw InvariantViolation("Cauchy characteristic is not integrable");
  return ch;
}

}  // namespace flagspace
