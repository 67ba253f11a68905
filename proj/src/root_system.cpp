#include "flagspace/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "flagspace/errors.hpp"

namespace flagspace {

// ---------------------------------------------------------------- LieType

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("invalid Lie type '" + std::string(text) + "'");
  char f = text[0];
  if (f >= 'a' && f <= 'z') f = static_cast<char>(f - 'a' + 'A');
  if (f < 'A' || f > 'G') throw InputError("unknown family in '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InputError("invalid rank in '" + std::string(text) + "'");
  LieType t{static_cast<Family>(f), rank};
  t.validate();
  return t;
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void LieType::validate() const {
  auto bad = [&](const std::string& why) { throw InputError(name() + ": " + why); };
  if (rank < 1 || rank > kMaxRank) bad("rank must be between 1 and 8");
  switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (rank < 2) bad("B and C need rank >= 2");
      break;
    case Family::D:
      if (rank == 3) bad("D3 is isomorphic to A3; use A3 instead");
      if (rank < 4) bad("D needs rank >= 4");
      break;
    case Family::E:
      if (rank < 6) bad("E needs rank 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) bad("F has rank 4 only");
      break;
    case Family::G:
      if (rank != 2) bad("G has rank 2 only");
      break;
  }
}

std::vector<LieType> all_types(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    for (int n = 1; n <= std::min(max_rank, kMaxRank); ++n) {
      LieType t{f, n};
      try {
        t.validate();
      } catch (const InputError&) {
        continue;
      }
      out.push_back(t);
    }
  }
  return out;
}

std::string to_string(Numbering n) {
  switch (n) {
    case Numbering::bourbaki: return "bourbaki";
    case Numbering::paper: return "paper";
    case Numbering::custom: return "custom";
  }
  return "custom";
}

Numbering parse_numbering(std::string_view text) {
  if (text == "bourbaki") return Numbering::bourbaki;
  if (text == "paper") return Numbering::paper;
  throw InputError("unknown numbering '" + std::string(text) + "' (expected bourbaki or paper)");
}

std::vector<int> node_permutation(const LieType& type, Numbering numbering) {
  type.validate();
  std::vector<int> perm(type.rank);
  std::iota(perm.begin(), perm.end(), 0);
  // Reversed F4 runs from the short end: a1, a2 short and a3, a4 long.
  if (numbering == Numbering::paper && type.family == Family::F) std::reverse(perm.begin(), perm.end());
  return perm;
}

// ------------------------------------------------------------------- Root

Root::Root(std::initializer_list<int> coeffs) : rank_(static_cast<std::uint8_t>(coeffs.size())) {
  if (coeffs.size() > kMaxRank) throw InputError("root has more than 8 coefficients");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Root Root::from_span(std::span<const int> coeffs) {
  if (coeffs.size() > kMaxRank) throw InputError("root has more than 8 coefficients");
  Root r(static_cast<int>(coeffs.size()));
  std::copy(coeffs.begin(), coeffs.end(), r.c_.begin());
  return r;
}

Root Root::simple(int rank, int node) {
  Root r(rank);
  r.c_[node] = 1;
  return r;
}

int Root::height() const { return std::accumulate(c_.begin(), c_.begin() + rank_, 0); }

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
}

bool Root::leq(const Root& other) const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

Root Root::operator-() const {
  Root r = *this;
  for (int i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Root& Root::operator+=(const Root& o) {
  for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Root& Root::operator-=(const Root& o) {
  for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Root operator*(int k, Root a) {
  for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
  return a;
}

std::string to_string(const Root& r) {
  auto c = r.coeffs();
  bool digits = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + c[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
  }
  return out;
}

Root parse_root(std::string_view text, int rank) {
  std::vector<int> c;
  if (text.find_first_of(",-") != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto tok = text.substr(pos, next - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError("bad root '" + std::string(text) + "'");
      c.push_back(v);
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InputError("bad root '" + std::string(text) + "'");
      c.push_back(ch - '0');
    }
  }
  if (static_cast<int>(c.size()) != rank)
    throw InputError("root '" + std::string(text) + "' does not have " + std::to_string(rank) + " coefficients");
  return Root::from_span(c);
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = static_cast<std::size_t>(r.rank());
  for (int x : r.coeffs()) h = h * 131 + static_cast<std::size_t>(x + 64);
  return h;
}

// ------------------------------------------------------------- RootSystem

struct RootSystem::Data {
  LieType type;
  Numbering numbering = Numbering::bourbaki;
  std::vector<int> perm;
  std::vector<int> lengths;               // squared lengths of simple roots
  std::vector<std::vector<int>> gram;     // (a_i, a_j)
  std::vector<std::vector<int>> cartan;   // 2 (a_i, a_j) / (a_i, a_i)
  std::vector<Root> positive;
  std::unordered_map<Root, std::size_t, RootHash> index;
  std::vector<std::size_t> simple_idx;
  std::vector<std::size_t> sum;  // n x n
  std::vector<int> pair;         // n x n
  int max_length = 2;
};

namespace {

struct Bourbaki {
  std::vector<int> lengths;
  std::vector<std::pair<int, int>> edges;
};

Bourbaki bourbaki_diagram(const LieType& t) {
  const int n = t.rank;
  Bourbaki b{std::vector<int>(n, 2), {}};
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) b.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A: chain(0, n - 1); break;
    case Family::B:
      chain(0, n - 1);
      std::fill(b.lengths.begin(), b.lengths.end() - 1, 4);
      break;
    case Family::C:
      chain(0, n - 1);
      b.lengths[n - 1] = 4;
      break;
    case Family::D:
      chain(0, n - 2);
      b.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      b.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      chain(4, n - 1);
      break;
    case Family::F:
      chain(0, 3);
      b.lengths = {4, 4, 2, 2};
      break;
    case Family::G:
      chain(0, 1);
      b.lengths = {2, 6};
      break;
  }
  return b;
}

}  // namespace

RootSystem RootSystem::build(const LieType& type, Numbering numbering) {
  if (numbering == Numbering::custom) throw InputError("custom numbering needs an explicit permutation");
  return make(type, node_permutation(type, numbering), numbering);
}

RootSystem RootSystem::build_permuted(const LieType& type, std::span<const int> perm) {
  return make(type, perm, Numbering::custom);
}

RootSystem RootSystem::make(const LieType& type, std::span<const int> perm, Numbering tag) {
  type.validate();
  const int n = type.rank;
  if (static_cast<int>(perm.size()) != n) throw InputError("node permutation has the wrong length");
  {
    std::vector<int> sorted(perm.begin(), perm.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(n);
    std::iota(iota.begin(), iota.end(), 0);
    if (sorted != iota) throw InputError("node permutation is not a permutation of 0.." + std::to_string(n - 1));
  }

  auto d = std::make_shared<Data>();
  d->type = type;
  d->numbering = tag;
  d->perm.assign(perm.begin(), perm.end());

  Bourbaki b = bourbaki_diagram(type);
  std::vector<std::vector<int>> gram_b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) gram_b[i][i] = b.lengths[i];
  for (auto [i, j] : b.edges) gram_b[i][j] = gram_b[j][i] = -std::max(b.lengths[i], b.lengths[j]) / 2;

  d->lengths.resize(n);
  d->gram.assign(n, std::vector<int>(n));
  d->cartan.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    d->lengths[a] = b.lengths[perm[a]];
    d->max_length = std::max(d->max_length, d->lengths[a]);
    for (int c = 0; c < n; ++c) d->gram[a][c] = gram_b[perm[a]][perm[c]];
  }
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) d->cartan[a][c] = 2 * d->gram[a][c] / d->lengths[a];

  // Close the simple roots under simple-root strings, one height level at a time.
  auto ip_simple = [&](const Root& r, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += r[j] * d->gram[j][i];
    return s;
  };
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) level.push_back(Root::simple(n, i));
  for (const Root& r : level) d->index.emplace(r, d->index.size());
  std::vector<Root> all = level;
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& r : level) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (Root t = r - Root::simple(n, i); d->index.count(t); t -= Root::simple(n, i)) ++p;
        int q = p - 2 * ip_simple(r, i) / d->lengths[i];
        if (q <= 0) continue;
        Root up = r + Root::simple(n, i);
        if (d->index.emplace(up, d->index.size()).second) next.push_back(up);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x < y;
  });
  d->positive = std::move(all);
  d->index.clear();
  for (std::size_t k = 0; k < d->positive.size(); ++k) d->index.emplace(d->positive[k], k);
  for (int i = 0; i < n; ++i) d->simple_idx.push_back(d->index.at(Root::simple(n, i)));

  const std::size_t np = d->positive.size();
  d->sum.assign(np * np, npos);
  d->pair.assign(np * np, 0);
  auto ip = [&](const Root& x, const Root& y) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += x[i] * d->gram[i][j] * y[j];
    return s;
  };
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      auto it = d->index.find(d->positive[i] + d->positive[j]);
      if (it != d->index.end()) d->sum[i * np + j] = it->second;
      int num = 2 * ip(d->positive[i], d->positive[j]);
      int den = ip(d->positive[j], d->positive[j]);
      if (num % den != 0) throw InvariantViolation("non-integral Cartan pairing in " + type.name());
      d->pair[i * np + j] = num / den;
    }
  }

  RootSystem rs;
  rs.d_ = std::move(d);
  return rs;
}

const LieType& RootSystem::type() const { return d_->type; }
int RootSystem::rank() const { return d_->type.rank; }
Numbering RootSystem::numbering() const { return d_->numbering; }
std::span<const int> RootSystem::node_map() const { return d_->perm; }
const std::vector<std::vector<int>>& RootSystem::cartan() const { return d_->cartan; }
std::span<const int> RootSystem::simple_lengths() const { return d_->lengths; }
std::span<const Root> RootSystem::positive_roots() const { return d_->positive; }
std::size_t RootSystem::num_positive() const { return d_->positive.size(); }
const Root& RootSystem::positive(std::size_t idx) const { return d_->positive[idx]; }
std::size_t RootSystem::simple_index(int node) const { return d_->simple_idx.at(node); }
const Root& RootSystem::highest_root() const { return d_->positive.back(); }

std::size_t RootSystem::index_of(const Root& r) const {
  if (r.rank() != rank()) return npos;
  auto it = d_->index.find(r);
  return it == d_->index.end() ? npos : it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return index_of(r) != npos || index_of(-r) != npos;
}

bool RootSystem::is_positive_root(const Root& r) const { return index_of(r) != npos; }

int RootSystem::inner(const Root& a, const Root& b) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += a[i] * d_->gram[i][j] * b[j];
  }
  return s;
}

bool RootSystem::is_long(std::size_t idx) const {
  return squared_length(d_->positive[idx]) == d_->max_length;
}

bool RootSystem::simply_laced() const {
  return std::all_of(d_->lengths.begin(), d_->lengths.end(), [](int l) { return l == 2; });
}

std::size_t RootSystem::sum_index(std::size_t i, std::size_t j) const {
  return d_->sum[i * d_->positive.size() + j];
}

int RootSystem::pairing(std::size_t beta, std::size_t alpha) const {
  return d_->pair[beta * d_->positive.size() + alpha];
}

// ------------------------------------------------------------- operations

int cartan_pairing(const RootSystem& rs, const Root& beta, const Root& alpha) {
  if (alpha.rank() != rs.rank() || beta.rank() != rs.rank())
    throw InputError("root rank does not match " + rs.type().name());
  if (alpha.is_zero()) throw InputError("cartan_pairing: alpha must be nonzero");
  if (!rs.is_root(alpha)) throw InputError("cartan_pairing: " + to_string(alpha) + " is not a root");
  int num = 2 * rs.inner(beta, alpha);
  int den = rs.squared_length(alpha);
  if (num % den != 0 && rs.is_root(beta))
    throw InvariantViolation("non-integral pairing " + to_string(beta) + " on " + to_string(alpha));
  return num / den;
}

RootString root_string(const RootSystem& rs, const Root& beta, const Root& alpha) {
  if (!rs.is_root(alpha) || !rs.is_root(beta)) throw InputError("root_string: arguments must be roots");
  if (alpha == beta || alpha == -beta) throw InputError("root_string: alpha = +-beta");
  RootString s;
  for (Root t = beta - alpha; rs.is_root(t); t -= alpha) ++s.p;
  for (Root t = beta + alpha; rs.is_root(t); t += alpha) ++s.q;
  if (s.p - s.q != cartan_pairing(rs, beta, alpha))
    throw InvariantViolation("string through " + to_string(beta) + " disagrees with the Cartan pairing");
  if (s.p + s.q > 3) throw InvariantViolation("root string longer than 4");
  return s;
}

std::vector<Rational> coroot_expansion(const RootSystem& rs, const Root& alpha) {
  if (!rs.is_root(alpha)) throw InputError("coroot_expansion: " + to_string(alpha) + " is not a root");
  const long long len = rs.squared_length(alpha);
  std::vector<Rational> out;
  out.reserve(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) out.emplace_back(static_cast<long long>(alpha[j]) * rs.simple_lengths()[j], len);
  return out;
}

}  // namespace flagspace
