// Equivariant distributions as order ideals of realized positive degrees.
//
// A distribution is the downward-closed set of degrees it contains; its root
// set is the union of the corresponding buckets. All operations are pure.

#ifndef FLAGSPACE_DISTRIBUTION_HPP
#define FLAGSPACE_DISTRIBUTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "flagspace/grading.hpp"

namespace flagspace {

class Distribution {
 public:
  /// Throws InputError if `ideal` is empty, sized wrongly or not downward closed.
  static Distribution from_ideal(const GradedSystem& gs, IndexSet ideal);

  const GradedSystem& graded() const { return gs_; }
  /// Bitset over gs.realized().
  const IndexSet& ideal() const { return ideal_; }
  /// Bitset over gs.roots().positive_roots(); Levi roots are never set.
  const IndexSet& root_set() const { return roots_; }

  std::vector<MultiDegree> degrees() const;
  /// Maximal elements of the ideal, in realized order.
  std::vector<MultiDegree> antichain() const;
  std::vector<std::size_t> root_indices() const;

  bool contains_degree(const MultiDegree& d) const;
  bool contains_root(std::size_t root) const { return roots_.test(root); }
  bool is_subset_of(const Distribution& o) const { return ideal_.is_subset_of(o.ideal_); }
  /// Largest |k|_1 over the ideal.
  int max_norm() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.gs_.same_as(b.gs_) && a.ideal_ == b.ideal_;
  }
  /// Sum of distributions: union of ideals.
  friend Distribution operator+(const Distribution& a, const Distribution& b);

 private:
  Distribution(GradedSystem gs, IndexSet ideal);
  GradedSystem gs_;
  IndexSet ideal_;
  IndexSet roots_;
};

/// Downward closure of the generators within realized degrees. Each generator
/// must be > 0 and below some realized degree; throws InputError otherwise.
Distribution make_distribution(const GradedSystem& gs, std::span<const MultiDegree> generators);
Distribution make_distribution(const GradedSystem& gs, std::initializer_list<MultiDegree> generators);

/// Closure of an arbitrary set of realized-degree indices.
Distribution close_downward(const GradedSystem& gs, const IndexSet& degrees);

/// T(S): every realized degree.
Distribution tangent_distribution(const GradedSystem& gs);
/// D^k: realized degrees with |lambda|_1 <= k, k >= 1.
Distribution level_distribution(const GradedSystem& gs, int k);
/// D^{0,..,m_i,..,0}: the minimal integrable distribution at marked index i.
Distribution column_distribution(const GradedSystem& gs, int i);
/// Sum of all column distributions.
Distribution column_sum(const GradedSystem& gs);

/// All nonempty order ideals, each once, in a deterministic order.
std::vector<Distribution> enumerate_distributions(const GradedSystem& gs);

bool is_integrable(const Distribution& d);
/// True iff d != T(S). Throws InvariantViolation if this disagrees with
/// max |lambda|_1 <= m - 1.
bool is_proper(const Distribution& d);
/// Smallest distribution containing e and the degrees of every root sum
/// alpha + beta with alpha in d, beta in e.
Distribution bracket_step(const Distribution& d, const Distribution& e);
/// Least integrable distribution containing d.
Distribution generated_integrable(const Distribution& d);
/// Integrable closure of the unit degrees missing from d. Throws InputError
/// when every unit degree is already in d.
Distribution complementary(const Distribution& d);
/// Roots of d whose bracket with d stays in d. Empty result is nullopt.
/// Throws InvariantViolation if the result is not a union of full buckets
/// forming an order ideal, or is not integrable.
std::optional<Distribution> cauchy_characteristic(const Distribution& d);

}  // namespace flagspace

#endif  // FLAGSPACE_DISTRIBUTION_HPP
