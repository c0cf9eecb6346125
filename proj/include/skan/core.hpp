#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

/// Data model for finite truncations of semisimplicial and
/// multisemisimplicial sets: graded families of simplex identifiers with
/// dense face tables. Complexes are immutable once built; construction goes
/// through the builder types, which check structural well-formedness
/// (declared degrees, face-table totality, face targets in the right level).
/// The face-map commutation identities are checked separately by validate()
/// and validate_multi(), which report every violating instance.
namespace skan {

/// Identifier of a simplex, unique within one complex. The numeric order on
/// ids is the canonical tie-breaking order everywhere (levels are kept
/// sorted by id, horn fillers pick the id-minimal candidate).
struct SimplexId {
  static constexpr std::uint32_t invalid_value = 0xffffffffu;

  std::uint32_t value{invalid_value};

  constexpr SimplexId() = default;
  constexpr explicit SimplexId(std::uint32_t v) : value(v) {}

  [[nodiscard]] constexpr bool valid() const { return value != invalid_value; }
  constexpr auto operator<=>(const SimplexId&) const = default;
};

class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A violating instance of a face-map identity, as found by validate() /
/// validate_multi(). For single complexes the axis fields are 0; for
/// multisemisimplicial complexes `p`/`q` are the 1-based axes of the first
/// and second face map. `cross` distinguishes the two-axis commutation from
/// the same-axis identity.
struct ValidationReport {
  struct Entry {
    SimplexId x;
    int p = 0;
    int i = 0;
    int q = 0;
    int j = 0;
    SimplexId lhs;
    SimplexId rhs;
    bool cross = false;

    [[nodiscard]] std::string line() const;
  };

  std::vector<Entry> entries;

  [[nodiscard]] bool ok() const { return entries.empty(); }
};

// ---------------------------------------------------------------------------
// Semisimplicial sets
// ---------------------------------------------------------------------------

/// A finite truncation of a semisimplicial set: levels 0..truncation_degree,
/// each an id-sorted list of simplices, and a total face table
/// (x of degree n>0, i in 0..n) -> simplex of degree n-1.
class SemiSimplicialSet {
 public:
  [[nodiscard]] int truncation_degree() const { return truncation_; }
  [[nodiscard]] std::size_t size() const { return count_; }

  [[nodiscard]] bool contains(SimplexId x) const {
    return x.value < degree_.size() && degree_[x.value] >= 0;
  }
  [[nodiscard]] int degree(SimplexId x) const;
  [[nodiscard]] std::span<const SimplexId> level(int n) const;
  [[nodiscard]] SimplexId face(SimplexId x, int i) const;

  /// Largest id value in use plus one (ids may have gaps in file-loaded
  /// complexes; nonexistent ids in the range report degree -1).
  [[nodiscard]] std::uint32_t id_bound() const {
    return static_cast<std::uint32_t>(degree_.size());
  }

 private:
  friend class SemiSimplicialSetBuilder;

  int truncation_ = 0;
  std::size_t count_ = 0;
  std::vector<int> degree_;                     // by id value; -1 = absent
  std::vector<std::vector<SimplexId>> levels_;  // by degree, sorted by id
  std::vector<std::vector<SimplexId>> faces_;   // by id value, size degree+1
};

class SemiSimplicialSetBuilder {
 public:
  explicit SemiSimplicialSetBuilder(int truncation_degree);

  /// Adds a simplex with the next free id.
  SimplexId add_simplex(int degree);
  /// Adds a simplex with an explicit id (file ingestion); throws on reuse.
  void add_simplex(SimplexId id, int degree);
  void set_face(SimplexId x, int i, SimplexId target);

  /// Checks totality of the face table and existence/degree of all targets,
  /// then freezes the complex. Levels are sorted by id.
  SemiSimplicialSet build() &&;

 private:
  SemiSimplicialSet out_;
  std::vector<std::vector<SimplexId>> pending_faces_;
};

/// Exhaustively checks d_i d_j x = d_{j-1} d_i x for all x of degree >= 2
/// and all i < j; returns every violating triple.
ValidationReport validate(const SemiSimplicialSet& complex);

// ---------------------------------------------------------------------------
// Multisemisimplicial sets
// ---------------------------------------------------------------------------

/// An l-fold multi-index (n_1, ..., n_l) of nonnegative entries. Axes are
/// 1-based throughout the public API, matching the file formats.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  [[nodiscard]] int axes() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] int entry(int axis) const;
  [[nodiscard]] int total() const;

  /// This index plus/minus the unit index on `axis`. Subtraction requires
  /// entry(axis) >= 1.
  [[nodiscard]] MultiIndex plus(int axis, int amount = 1) const;
  [[nodiscard]] MultiIndex minus(int axis) const;

  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  [[nodiscard]] std::string str() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// All multi-indices with the given number of axes and exact total degree,
/// in lexicographic order.
std::vector<MultiIndex> multi_indices_with_total(int axes, int total);

/// A finite truncation (by total degree) of an l-fold multisemisimplicial
/// set. Every multi-index with total degree <= truncation has a level,
/// possibly empty. Per-axis face tables are total: (x at n, axis p with
/// n_p >= 1, i in 0..n_p) -> simplex at n - e_p.
class MultiSemiSimplicialSet {
 public:
  [[nodiscard]] int axes() const { return axes_; }
  [[nodiscard]] int truncation_total() const { return truncation_; }
  [[nodiscard]] std::size_t size() const { return count_; }

  [[nodiscard]] bool contains(SimplexId x) const {
    return x.value < index_.size() && !index_[x.value].entries().empty();
  }
  [[nodiscard]] const MultiIndex& index_of(SimplexId x) const;
  [[nodiscard]] int total_degree(SimplexId x) const { return index_of(x).total(); }
  [[nodiscard]] std::span<const SimplexId> level(const MultiIndex& n) const;
  /// All simplices of the given total degree, ascending by id.
  [[nodiscard]] std::span<const SimplexId> total_level(int m) const;
  [[nodiscard]] SimplexId face(SimplexId x, int axis, int i) const;

  [[nodiscard]] std::uint32_t id_bound() const {
    return static_cast<std::uint32_t>(index_.size());
  }

 private:
  friend class MultiSemiSimplicialSetBuilder;

  int axes_ = 1;
  int truncation_ = 0;
  std::size_t count_ = 0;
  std::vector<MultiIndex> index_;  // by id value; empty entries = absent
  std::map<MultiIndex, std::vector<SimplexId>> levels_;
  std::vector<std::vector<SimplexId>> by_total_;          // by total degree
  std::vector<std::vector<std::vector<SimplexId>>> faces_;  // [id][axis-1][i]
};

class MultiSemiSimplicialSetBuilder {
 public:
  MultiSemiSimplicialSetBuilder(int axes, int truncation_total);

  SimplexId add_simplex(const MultiIndex& n);
  void add_simplex(SimplexId id, const MultiIndex& n);
  void set_face(SimplexId x, int axis, int i, SimplexId target);

  MultiSemiSimplicialSet build() &&;

 private:
  MultiSemiSimplicialSet out_;
  std::vector<std::vector<std::vector<SimplexId>>> pending_faces_;
};

/// Checks the same-axis identity d_i^p d_j^p = d_{j-1}^p d_i^p (i < j) and
/// the cross-axis identity d_i^p d_j^q = d_j^q d_i^p (p != q) exhaustively.
ValidationReport validate_multi(const MultiSemiSimplicialSet& complex);

[[nodiscard]] inline int total_degree(SimplexId x, const MultiSemiSimplicialSet& complex) {
  return complex.total_degree(x);
}

// ---------------------------------------------------------------------------
// Degeneracy tables and simplicial sets
// ---------------------------------------------------------------------------

/// Partial map (x, j) -> s_j x. Values have degree deg(x) + 1.
using DegeneracyTable = std::map<std::pair<SimplexId, int>, SimplexId>;
/// Partial map (x, j) -> T_j x where T_j x has degree deg(x) + 2.
using TTable = std::map<std::pair<SimplexId, int>, SimplexId>;

/// Partial map (x, axis q, j) -> s_j^q x at index n + e_q.
using MultiDegeneracyTable = std::map<std::tuple<SimplexId, int, int>, SimplexId>;
using MultiTTable = std::map<std::tuple<SimplexId, int, int>, SimplexId>;

/// A semisimplicial set together with a degeneracy table.
struct SimplicialSet {
  SemiSimplicialSet base;
  DegeneracyTable degeneracies;
};

struct MultiSimplicialSet {
  MultiSemiSimplicialSet base;
  MultiDegeneracyTable degeneracies;
};

// ---------------------------------------------------------------------------
// l=1 conversions
// ---------------------------------------------------------------------------

/// Lossless embedding of a semisimplicial set as a 1-fold
/// multisemisimplicial set. Ids, level order, and faces carry over verbatim.
MultiSemiSimplicialSet as_multi(const SemiSimplicialSet& complex);

/// Inverse of as_multi; requires axes() == 1.
SemiSimplicialSet as_single(const MultiSemiSimplicialSet& complex);

}  // namespace skan
