#include "flagspace/grading.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "flagspace/errors.hpp"

namespace flagspace {

// ------------------------------------------------------------ MultiDegree

MultiDegree MultiDegree::unit(int l, int i) {
  std::vector<int> k(l, 0);
  k[i] = 1;
  return MultiDegree(std::move(k));
}

int MultiDegree::norm1() const {
  int s = 0;
  for (int x : k_) s += x < 0 ? -x : x;
  return s;
}

bool MultiDegree::is_positive() const {
  bool nonzero = false;
  for (int x : k_) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

bool MultiDegree::leq(const MultiDegree& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] > other.k_[i]) return false;
  return true;
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  std::vector<int> k = k_;
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += o.k_[i];
  return MultiDegree(std::move(k));
}

MultiDegree MultiDegree::scaled(int s) const {
  std::vector<int> k = k_;
  for (int& x : k) x *= s;
  return MultiDegree(std::move(k));
}

std::string to_string(const MultiDegree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError(std::string("bad ") + what + " '" + std::string(text) + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

}  // namespace

MultiDegree parse_multidegree(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  return MultiDegree(parse_int_list(text, "multi-degree"));
}

// ---------------------------------------------------------------- Marking

Marking Marking::from_nodes(std::vector<int> nodes, int rank) {
  if (nodes.empty()) throw InputError("marking must be nonempty");
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) throw InputError("marking repeats a node");
  if (nodes.front() < 0 || nodes.back() >= rank)
    throw InputError("marked node out of range 1.." + std::to_string(rank));
  Marking m;
  m.nodes_ = std::move(nodes);
  return m;
}

Marking Marking::parse(std::string_view text, int rank) {
  auto one_based = parse_int_list(text, "marking");
  for (int& x : one_based) --x;
  return from_nodes(std::move(one_based), rank);
}

std::string Marking::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(nodes_[i] + 1);
  }
  return out;
}

std::vector<Marking> all_markings(int rank) {
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1u) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Marking> out;
  for (auto& s : subsets) out.push_back(Marking::from_nodes(std::move(s), rank));
  return out;
}

// ---------------------------------------------------------- GradedSystem

struct GradedSystem::Data {
  RootSystem rs;
  Marking marking;
  std::vector<MultiDegree> root_degree;
  std::vector<std::size_t> root_bucket;
  std::vector<MultiDegree> realized;
  std::map<MultiDegree, std::size_t> realized_index;
  std::vector<std::vector<std::size_t>> buckets;
  std::vector<IndexSet> down;
  std::vector<std::size_t> hw;
  std::vector<int> node_depths;
  std::vector<int> max_coeff;
  int total_depth = 0;
  std::size_t levi_count = 0;
};

const RootSystem& GradedSystem::roots() const { return d_->rs; }
const Marking& GradedSystem::marking() const { return d_->marking; }
int GradedSystem::picard_number() const { return d_->marking.size(); }
const MultiDegree& GradedSystem::degree_of_root(std::size_t root) const { return d_->root_degree[root]; }

MultiDegree GradedSystem::degree_of(const Root& r) const {
  std::vector<int> k;
  for (int node : d_->marking.nodes()) k.push_back(r[node]);
  return MultiDegree(std::move(k));
}

std::size_t GradedSystem::bucket_of_root(std::size_t root) const { return d_->root_bucket[root]; }
std::span<const MultiDegree> GradedSystem::realized() const { return d_->realized; }
std::size_t GradedSystem::num_realized() const { return d_->realized.size(); }

std::size_t GradedSystem::realized_index(const MultiDegree& d) const {
  auto it = d_->realized_index.find(d);
  return it == d_->realized_index.end() ? npos : it->second;
}

std::span<const std::size_t> GradedSystem::bucket(std::size_t idx) const { return d_->buckets[idx]; }
const IndexSet& GradedSystem::down_set(std::size_t idx) const { return d_->down[idx]; }
std::size_t GradedSystem::highest_weight(std::size_t idx) const { return d_->hw[idx]; }
std::span<const int> GradedSystem::node_depths() const { return d_->node_depths; }
std::span<const int> GradedSystem::max_marked_coefficients() const { return d_->max_coeff; }
int GradedSystem::total_depth() const { return d_->total_depth; }
std::size_t GradedSystem::levi_positive_count() const { return d_->levi_count; }

GradedSystem grade(const RootSystem& rs, const Marking& marking) {
  for (int node : marking.nodes())
    if (node < 0 || node >= rs.rank()) throw InputError("marked node out of range for " + rs.type().name());
  if (marking.size() == 0) throw InputError("marking must be nonempty");

  auto d = std::make_shared<GradedSystem::Data>();
  d->rs = rs;
  d->marking = marking;
  const int l = marking.size();
  const std::size_t np = rs.num_positive();

  for (std::size_t r = 0; r < np; ++r) {
    std::vector<int> k;
    for (int node : marking.nodes()) k.push_back(rs.positive(r)[node]);
    d->root_degree.emplace_back(std::move(k));
  }
  for (const auto& deg : d->root_degree)
    if (deg.is_positive()) d->realized_index.emplace(deg, 0);
  for (const auto& [deg, _] : d->realized_index) d->realized.push_back(deg);
  std::sort(d->realized.begin(), d->realized.end(), [](const MultiDegree& a, const MultiDegree& b) {
    return a.norm1() != b.norm1() ? a.norm1() < b.norm1() : a < b;
  });
  const std::size_t nr = d->realized.size();
  for (std::size_t i = 0; i < nr; ++i) d->realized_index[d->realized[i]] = i;

  d->buckets.resize(nr);
  d->root_bucket.assign(np, GradedSystem::npos);
  for (std::size_t r = 0; r < np; ++r) {
    if (!d->root_degree[r].is_positive()) {
      ++d->levi_count;
      continue;
    }
    std::size_t b = d->realized_index.at(d->root_degree[r]);
    d->root_bucket[r] = b;
    d->buckets[b].push_back(r);
  }

  d->down.assign(nr, IndexSet(nr));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      if (d->realized[j].leq(d->realized[i])) d->down[i].set(j);

  std::vector<int> unmarked;
  for (int j = 0; j < rs.rank(); ++j)
    if (std::find(marking.nodes().begin(), marking.nodes().end(), j) == marking.nodes().end()) unmarked.push_back(j);
  d->hw.assign(nr, GradedSystem::npos);
  for (std::size_t b = 0; b < nr; ++b) {
    for (std::size_t r : d->buckets[b]) {
      bool top = std::none_of(unmarked.begin(), unmarked.end(), [&](int j) {
        return rs.is_root(rs.positive(r) + Root::simple(rs.rank(), j));
      });
      if (!top) continue;
      if (d->hw[b] != GradedSystem::npos)
        throw InvariantViolation("bucket " + to_string(d->realized[b]) + " of " + rs.type().name() +
                                 " has two highest-weight roots");
      d->hw[b] = r;
    }
    if (d->hw[b] == GradedSystem::npos)
      throw InvariantViolation("bucket " + to_string(d->realized[b]) + " has no highest-weight root");
  }

  d->node_depths.assign(l, 0);
  d->max_coeff.assign(l, 0);
  for (const auto& deg : d->realized) {
    d->total_depth = std::max(d->total_depth, deg.norm1());
    int nonzero = 0, at = -1;
    for (int i = 0; i < l; ++i) {
      d->max_coeff[i] = std::max(d->max_coeff[i], deg[i]);
      if (deg[i] != 0) ++nonzero, at = i;
    }
    if (nonzero == 1) d->node_depths[at] = std::max(d->node_depths[at], deg[at]);
  }

  GradedSystem gs;
  gs.d_ = std::move(d);
  return gs;
}

Classification classify_space(const GradedSystem& gs) {
  Classification c;
  c.picard_number = gs.picard_number();
  c.total_depth = gs.total_depth();
  for (std::size_t b = 0; b < gs.num_realized(); ++b)
    if (gs.realized()[b].norm1() == 2) c.dim_g2 += static_cast<int>(gs.bucket(b).size());
  c.hermitian_symmetric = c.total_depth == 1;
  c.contact_candidate = c.total_depth == 2 && c.dim_g2 == 1;
  return c;
}

Rational fundamental_pairing(const RootSystem& rs, int node, const Root& alpha) {
  if (node < 0 || node >= rs.rank()) throw InputError("node out of range");
  return coroot_expansion(rs, alpha)[node];
}

Rational curve_degree(const GradedSystem& gs, const Root& alpha, int i) {
  const RootSystem& rs = gs.roots();
  if (!rs.is_positive_root(alpha)) throw InputError("curve_degree: " + to_string(alpha) + " is not a positive root");
  if (i < 0 || i >= gs.picard_number()) throw InputError("curve_degree: marked index out of range");
  const int node = gs.marking().node(i);
  Rational deg(static_cast<long long>(alpha[node]) * rs.simple_lengths()[node], rs.squared_length(alpha));
  if (deg != fundamental_pairing(rs, node, alpha))
    throw InvariantViolation("curve degree of " + to_string(alpha) + " disagrees with its coroot pairing");
  return deg;
}

const Root& highest_weight_root(const GradedSystem& gs, const MultiDegree& lam) {
  if (lam.size() != static_cast<std::size_t>(gs.picard_number()) || !lam.is_positive())
    throw InputError("highest_weight_root: " + to_string(lam) + " is not a positive degree");
  std::size_t b = gs.realized_index(lam);
  if (b == GradedSystem::npos) throw InputError("highest_weight_root: bucket " + to_string(lam) + " is empty");
  return gs.roots().positive(gs.highest_weight(b));
}

}  // namespace flagspace
