#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "skan/core.hpp"

/// Generators of genuinely Kan inputs (nerves of finite groups and their
/// external products) and the free simplicial set on a semisimplicial set.
/// All generators assign ids level by level in a fixed enumeration order, so
/// outputs are reproducible byte for byte.
namespace skan {

/// A finite group as an explicit multiplication table. Element 0 is the
/// identity. The group laws are checked exhaustively on construction.
class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(std::vector<std::vector<int>> mul);

  [[nodiscard]] int order() const { return static_cast<int>(mul_.size()); }
  [[nodiscard]] int mul(int a, int b) const;

  /// `group <order>` header, then exhaustive `mul <i> <j> <k>` lines.
  static FiniteGroupTable load(std::istream& in);
  static FiniteGroupTable load_file(const std::string& path);

 private:
  std::vector<std::vector<int>> mul_;
};

FiniteGroupTable cyclic_group(int order);

/// Nerve of a group, truncated: level n holds all n-tuples of elements in
/// lexicographic order (the all-identity tuple first), ids assigned
/// sequentially level by level. d_0 drops the first entry, d_n the last,
/// and d_i (0 < i < n) multiplies the adjacent pair at position i.
/// `reference` carries the canonical degeneracies (s_j inserts the identity
/// after position j) for observational comparison; `tuples` maps each id to
/// its tuple of element indices.
struct NerveResult {
  SemiSimplicialSet complex;
  SimplicialSet reference;
  std::vector<std::vector<int>> tuples;
};

NerveResult nerve(const FiniteGroupTable& group, int truncation);

/// Drops the degeneracy table.
SemiSimplicialSet forget_degeneracies(const SimplicialSet& s);

/// Two-fold external product: level (n1, n2) holds the pairs (a, b) with
/// a in X_{n1}, b in Y_{n2}, enumerated a-major; levels are filled in
/// ascending total degree, then lexicographic multi-index order. Faces act
/// per axis on the corresponding factor. max_total < 0 means the sum of the
/// input truncations. `factors` maps each id to its (a, b) pair.
struct ExternalProduct {
  MultiSemiSimplicialSet complex;
  std::vector<std::pair<SimplexId, SimplexId>> factors;
};

ExternalProduct external_product(const SemiSimplicialSet& x, const SemiSimplicialSet& y,
                                 int max_total = -1);

/// Free simplicial set on a semisimplicial set Y: level n holds the pairs
/// (m, y) where y is a p-cell of Y and m encodes a monotone surjection
/// {0..n} -> {0..p} as its value vector (identity included, p = n). Faces
/// compose with the coface map and, when a value drops out of the image,
/// renormalize and push the missing value into a face of y; degeneracies
/// duplicate a value. Enumeration per level: ascending p, then value vector
/// lexicographically, then y. `cells` maps each id to its pair.
struct FreeSimplicial {
  SimplicialSet simplicial;
  std::vector<std::pair<std::vector<int>, SimplexId>> cells;
};

FreeSimplicial free_simplicial(const SemiSimplicialSet& y, int truncation);

}  // namespace skan
