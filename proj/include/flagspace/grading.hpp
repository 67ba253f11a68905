// Multi-grading of a root system by a marking of simple roots.

#ifndef FLAGSPACE_GRADING_HPP
#define FLAGSPACE_GRADING_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "flagspace/root_system.hpp"

namespace flagspace {

/// Subset of indices into a fixed universe (realized degrees or positive roots).
using IndexSet = boost::dynamic_bitset<>;

/// Coefficients at the marked nodes, ordered by node. Ordered componentwise.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> k) : k_(std::move(k)) {}
  MultiDegree(std::initializer_list<int> k) : k_(k) {}
  static MultiDegree unit(int l, int i);

  std::size_t size() const { return k_.size(); }
  int operator[](std::size_t i) const { return k_[i]; }
  std::span<const int> values() const { return k_; }

  int norm1() const;
  /// >= 0 componentwise and nonzero.
  bool is_positive() const;
  /// Componentwise <=.
  bool leq(const MultiDegree& other) const;

  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree scaled(int k) const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<int> k_;
};

/// "(k1,...,kl)"
std::string to_string(const MultiDegree& d);
/// Accepts "(2,0)" or "2,0". Throws InputError.
MultiDegree parse_multidegree(std::string_view text);

/// Nonempty sorted set of marked nodes (0-based internally).
class Marking {
 public:
  static Marking from_nodes(std::vector<int> nodes, int rank);
  /// One-based comma list such as "1,4". Throws InputError.
  static Marking parse(std::string_view text, int rank);

  std::span<const int> nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int node(int i) const { return nodes_[i]; }
  /// One-based comma list.
  std::string to_string() const;

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<int> nodes_;
};

/// Every nonempty marking of a rank-n diagram, by size then lexicographically.
std::vector<Marking> all_markings(int rank);

/// Immutable graded view of a root system; copies share state.
class GradedSystem {
 public:
  static constexpr std::size_t npos = RootSystem::npos;

  const RootSystem& roots() const;
  const Marking& marking() const;
  int picard_number() const;

  const MultiDegree& degree_of_root(std::size_t root) const;
  MultiDegree degree_of(const Root& r) const;
  /// Realized-degree index of a positive root, npos for roots of degree 0.
  std::size_t bucket_of_root(std::size_t root) const;
  bool in_levi(std::size_t root) const { return bucket_of_root(root) == npos; }

  /// Realized positive degrees, sorted by |k|_1 then lexicographically.
  std::span<const MultiDegree> realized() const;
  std::size_t num_realized() const;
  /// Index into realized(), npos when the degree is not realized.
  std::size_t realized_index(const MultiDegree& d) const;
  /// Positive-root indices of a bucket.
  std::span<const std::size_t> bucket(std::size_t idx) const;
  /// Realized degrees <= realized()[idx], including idx.
  const IndexSet& down_set(std::size_t idx) const;
  /// Root index of the unique highest-weight root of the bucket.
  std::size_t highest_weight(std::size_t idx) const;

  /// m_i: largest k with k e_i realized.
  std::span<const int> node_depths() const;
  /// Largest coefficient at each marked node over all roots.
  std::span<const int> max_marked_coefficients() const;
  /// m: largest |k|_1 realized.
  int total_depth() const;
  /// Number of positive roots of degree 0.
  std::size_t levi_positive_count() const;

  bool same_as(const GradedSystem& o) const { return d_ == o.d_; }

 private:
  friend GradedSystem grade(const RootSystem& rs, const Marking& marking);
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Buckets, depths and highest-weight roots. Throws InputError for an empty
/// marking or out-of-range node, InvariantViolation if a bucket has more than
/// one highest-weight root.
GradedSystem grade(const RootSystem& rs, const Marking& marking);

struct Classification {
  bool hermitian_symmetric = false;  // m = 1
  bool contact_candidate = false;    // m = 2 and dim g_2 = 1
  int picard_number = 0;
  int total_depth = 0;
  int dim_g2 = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify_space(const GradedSystem& gs);

/// Degree of the rational curve of alpha against the i-th marked line bundle:
/// k_i <a_{r_i}, a_{r_i}> / <alpha, alpha>. Cross-checked against the coroot
/// expansion; throws InvariantViolation if the two disagree.
Rational curve_degree(const GradedSystem& gs, const Root& alpha, int i);

/// omega_node(H_alpha), read off the coroot expansion.
Rational fundamental_pairing(const RootSystem& rs, int node, const Root& alpha);

/// Unique beta in the bucket with beta + gamma not a root for every unmarked
/// simple gamma. Throws InputError when the bucket is empty or lam is not > 0.
const Root& highest_weight_root(const GradedSystem& gs, const MultiDegree& lam);

}  // namespace flagspace

#endif  // FLAGSPACE_GRADING_HPP
