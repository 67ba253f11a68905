// Finite root systems of simple types A-G, rank <= 8, with exact arithmetic.
//
// Roots are stored in the simple-root basis. Inner products are integers:
// short roots have squared length 2, so long roots have 4 (B, C, F) or 6 (G).

#ifndef FLAGSPACE_ROOT_SYSTEM_HPP
#define FLAGSPACE_ROOT_SYSTEM_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace flagspace {

inline constexpr int kMaxRank = 8;

using Rational = boost::rational<long long>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "F4", "A10" is rejected (rank > 8). Throws InputError.
  static LieType parse(std::string_view text);
  std::string name() const;
  /// Throws InputError when the rank is not admissible for the family.
  void validate() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Every admissible type with rank in [1, max_rank], in a fixed order.
std::vector<LieType> all_types(int max_rank);

/// Node labelling. `paper` differs from `bourbaki` only for F4 (reversed).
enum class Numbering { bourbaki, paper, custom };

std::string to_string(Numbering n);
Numbering parse_numbering(std::string_view text);

/// perm[active node] = Bourbaki node, 0-based.
std::vector<int> node_permutation(const LieType& type, Numbering numbering);

/// Integer vector in the simple-root basis.
class Root {
 public:
  Root() = default;
  explicit Root(int rank) : rank_(static_cast<std::uint8_t>(rank)) {}
  Root(std::initializer_list<int> coeffs);
  static Root from_span(std::span<const int> coeffs);
  static Root simple(int rank, int node);

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::span<const int> coeffs() const { return {c_.data(), static_cast<std::size_t>(rank_)}; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coefficients >= 0
  /// Componentwise <=.
  bool leq(const Root& other) const;

  Root operator-() const;
  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(int k, Root a);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::array<int, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

/// Digit string in node order ("1210") when every coefficient is in 0..9,
/// otherwise comma-separated integers ("1,-2,0").
std::string to_string(const Root& r);
/// Inverse of to_string for the given rank. Throws InputError.
Root parse_root(std::string_view text, int rank);

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// Immutable after construction; copies share the underlying tables.
class RootSystem {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static RootSystem build(const LieType& type, Numbering numbering = Numbering::bourbaki);
  /// perm[active node] = Bourbaki node. Used by numbering resolution.
  static RootSystem build_permuted(const LieType& type, std::span<const int> perm);

  const LieType& type() const;
  int rank() const;
  Numbering numbering() const;
  std::span<const int> node_map() const;

  /// cartan()[i][j] = 2 (a_i, a_j) / (a_i, a_i)
  const std::vector<std::vector<int>>& cartan() const;
  /// Squared length of each simple root (the symmetrizer times 2).
  std::span<const int> simple_lengths() const;

  /// Sorted by height, then lexicographically.
  std::span<const Root> positive_roots() const;
  std::size_t num_positive() const;
  const Root& positive(std::size_t idx) const;
  /// Index of simple root a_node within positive_roots().
  std::size_t simple_index(int node) const;
  const Root& highest_root() const;

  /// Index within positive_roots(), or npos.
  std::size_t index_of(const Root& r) const;
  bool is_root(const Root& r) const;  // positive or negative
  bool is_positive_root(const Root& r) const;

  int inner(const Root& a, const Root& b) const;
  int squared_length(const Root& a) const { return inner(a, a); }
  bool is_long(std::size_t idx) const;
  bool simply_laced() const;

  /// Index of positive(i) + positive(j), or npos when the sum is not a root.
  std::size_t sum_index(std::size_t i, std::size_t j) const;
  /// positive(beta)(H_{positive(alpha)}), tabulated.
  int pairing(std::size_t beta, std::size_t alpha) const;

 private:
  struct Data;
  static RootSystem make(const LieType& type, std::span<const int> perm, Numbering tag);
  std::shared_ptr<const Data> d_;
};

/// beta(H_alpha) = 2 <beta, alpha> / <alpha, alpha>. beta may be any lattice
/// vector (0 allowed); alpha must be a root. Throws InputError.
int cartan_pairing(const RootSystem& rs, const Root& beta, const Root& alpha);

struct RootString {
  int p = 0;  // steps down: beta - p alpha
  int q = 0;  // steps up:   beta + q alpha
  friend bool operator==(const RootString&, const RootString&) = default;
};

/// Maximal alpha-string through beta. Throws InputError for alpha = +-beta.
RootString root_string(const RootSystem& rs, const Root& beta, const Root& alpha);

/// Coefficients of H_alpha in the basis {H_{a_j}}.
std::vector<Rational> coroot_expansion(const RootSystem& rs, const Root& alpha);

}  // namespace flagspace

#endif  // FLAGSPACE_ROOT_SYSTEM_HPP
