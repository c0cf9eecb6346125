#include "skan/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "skan/io.hpp"

namespace skan {

// ---------------------------------------------------------------------------
// groups
// ---------------------------------------------------------------------------

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
  const int g = order();
  if (g < 1) throw StructuralError("group must have at least one element");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != g) throw StructuralError("multiplication table not square");
    for (int v : row)
      if (v < 0 || v >= g) throw StructuralError("multiplication table entry out of range");
  }
  for (int a = 0; a < g; ++a)
    if (mul_[0][static_cast<std::size_t>(a)] != a || mul_[static_cast<std::size_t>(a)][0] != a)
      throw StructuralError("element 0 is not an identity");
  for (int a = 0; a < g; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < g; ++b) has_inverse = has_inverse || mul(a, b) == 0;
    if (!has_inverse) throw StructuralError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < g; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw StructuralError("associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
}

int FiniteGroupTable::mul(int a, int b) const {
  if (a < 0 || a >= order() || b < 0 || b >= order())
    throw StructuralError("group element out of range");
  return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

FiniteGroupTable FiniteGroupTable::load(std::istream& in) {
  std::string raw;
  int number = 0;
  int order = -1;
  std::vector<std::vector<int>> mul;
  std::vector<std::vector<bool>> seen;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword) || keyword[0] == '#') continue;
    if (keyword == "group") {
      if (order >= 0) throw ParseError(number, "duplicate group header");
      if (!(ls >> order) || order < 1) throw ParseError(number, "bad group order");
      mul.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order), 0));
      seen.assign(static_cast<std::size_t>(order), std::vector<bool>(static_cast<std::size_t>(order), false));
    } else if (keyword == "mul") {
      if (order < 0) throw ParseError(number, "'mul' before 'group' header");
      int a = -1, b = -1, c = -1;
      if (!(ls >> a >> b >> c) || a < 0 || a >= order || b < 0 || b >= order || c < 0 || c >= order)
        throw ParseError(number, "bad 'mul' line");
      if (seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        throw ParseError(number, "duplicate product (" + std::to_string(a) + "," + std::to_string(b) + ")");
      seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    } else {
      throw ParseError(number, "unknown keyword '" + keyword + "'");
    }
  }
  if (order < 0) throw ParseError(number ? number : 1, "missing 'group' header");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (!seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        throw ParseError(number, "product (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") never defined");
  return FiniteGroupTable(std::move(mul));
}

FiniteGroupTable FiniteGroupTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  return load(in);
}

FiniteGroupTable cyclic_group(int order) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(order),
                                    std::vector<int>(static_cast<std::size_t>(order), 0));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % order;
  return FiniteGroupTable(std::move(mul));
}

// ---------------------------------------------------------------------------
// nerve
// ---------------------------------------------------------------------------

namespace {

// tuples of a level in lexicographic order; the all-zero tuple comes first
std::vector<std::vector<int>> tuples_of(int order, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == order - 1) {
      cur[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  if (n == 0) out.resize(1);  // the single empty tuple
  return out;
}

}  // namespace

NerveResult nerve(const FiniteGroupTable& group, int truncation) {
  if (truncation < 0) throw StructuralError("negative truncation");
  const int g = group.order();

  // id of a tuple: level offset plus its rank in the lexicographic order
  std::vector<std::uint64_t> offset(static_cast<std::size_t>(truncation) + 2, 0);
  std::uint64_t power = 1;
  for (int n = 0; n <= truncation; ++n) {
    offset[static_cast<std::size_t>(n) + 1] = offset[static_cast<std::size_t>(n)] + power;
    power *= static_cast<std::uint64_t>(g);
  }
  if (offset[static_cast<std::size_t>(truncation) + 1] >= SimplexId::invalid_value)
    throw StructuralError("nerve too large for the id space");
  const auto id_of = [&](const std::vector<int>& tuple) {
    std::uint64_t rank = 0;
    for (int v : tuple) rank = rank * static_cast<std::uint64_t>(g) + static_cast<std::uint64_t>(v);
    return SimplexId{static_cast<std::uint32_t>(offset[tuple.size()] + rank)};
  };

  NerveResult out;
  SemiSimplicialSetBuilder builder(truncation);
  for (int n = 0; n <= truncation; ++n)
    for (const auto& tuple : tuples_of(g, n)) {
      builder.add_simplex(id_of(tuple), n);
      out.tuples.push_back(tuple);
    }
  for (int n = 1; n <= truncation; ++n) {
    for (const auto& tuple : tuples_of(g, n)) {
      const SimplexId x = id_of(tuple);
      for (int i = 0; i <= n; ++i) {
        std::vector<int> face;
        if (i == 0)
          face.assign(tuple.begin() + 1, tuple.end());
        else if (i == n)
          face.assign(tuple.begin(), tuple.end() - 1);
        else {
          face = tuple;
          face[static_cast<std::size_t>(i - 1)] =
              group.mul(tuple[static_cast<std::size_t>(i - 1)], tuple[static_cast<std::size_t>(i)]);
          face.erase(face.begin() + i);
        }
        builder.set_face(x, i, id_of(face));
      }
    }
  }
  out.complex = std::move(builder).build();

  DegeneracyTable reference;
  for (int n = 0; n < truncation; ++n) {
    for (const auto& tuple : tuples_of(g, n)) {
      const SimplexId x = id_of(tuple);
      for (int j = 0; j <= n; ++j) {
        std::vector<int> image = tuple;  // insert the identity after position j
        image.insert(image.begin() + j, 0);
        reference[{x, j}] = id_of(image);
      }
    }
  }
  out.reference.base = out.complex;
  out.reference.degeneracies = std::move(reference);
  return out;
}

SemiSimplicialSet forget_degeneracies(const SimplicialSet& s) { return s.base; }

// ---------------------------------------------------------------------------
// external product
// ---------------------------------------------------------------------------

ExternalProduct external_product(const SemiSimplicialSet& x, const SemiSimplicialSet& y,
                                 int max_total) {
  const int natural = x.truncation_degree() + y.truncation_degree();
  const int truncation = max_total < 0 ? natural : std::min(max_total, natural);
  ExternalProduct out;
  MultiSemiSimplicialSetBuilder builder(2, truncation);
  std::map<std::pair<SimplexId, SimplexId>, SimplexId> id_of;
  for (int m = 0; m <= truncation; ++m) {
    for (const MultiIndex& n : multi_indices_with_total(2, m)) {
      if (n.entry(1) > x.truncation_degree() || n.entry(2) > y.truncation_degree()) continue;
      for (SimplexId a : x.level(n.entry(1))) {
        for (SimplexId b : y.level(n.entry(2))) {
          const SimplexId id = builder.add_simplex(n);
          id_of[{a, b}] = id;
          out.factors.emplace_back(a, b);
        }
      }
    }
  }
  for (std::uint32_t v = 0; v < out.factors.size(); ++v) {
    const auto& [a, b] = out.factors[v];
    const SimplexId id{v};
    const int da = x.degree(a);
    const int db = y.degree(b);
    for (int i = 0; da > 0 && i <= da; ++i) builder.set_face(id, 1, i, id_of.at({x.face(a, i), b}));
    for (int i = 0; db > 0 && i <= db; ++i) builder.set_face(id, 2, i, id_of.at({a, y.face(b, i)}));
  }
  out.complex = std::move(builder).build();
  return out;
}

// ---------------------------------------------------------------------------
// free simplicial set
// ---------------------------------------------------------------------------

namespace {

// monotone surjections {0..n} -> {0..p} as value vectors, lexicographic
std::vector<std::vector<int>> surjections(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int pos, int last) -> void {
    if (pos == n + 1) {
      if (last == p) out.push_back(cur);
      return;
    }
    // monotone with steps of 0 or 1 exactly characterizes surjective
    // onto an initial segment; still need to end at p
    for (int step = 0; step <= 1; ++step) {
      const int value = pos == 0 ? 0 : last + step;
      if (pos == 0 && step == 1) break;
      if (value > p) continue;
      cur.push_back(value);
      self(self, pos + 1, value);
      cur.pop_back();
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace

FreeSimplicial free_simplicial(const SemiSimplicialSet& y, int truncation) {
  if (truncation < 0) throw StructuralError("negative truncation");
  FreeSimplicial out;
  SemiSimplicialSetBuilder builder(truncation);
  std::map<std::pair<std::vector<int>, SimplexId>, SimplexId> id_of;
  for (int n = 0; n <= truncation; ++n) {
    for (int p = 0; p <= std::min(n, y.truncation_degree()); ++p) {
      for (const auto& map : surjections(n, p)) {
        for (SimplexId cell : y.level(p)) {
          const SimplexId id = builder.add_simplex(n);
          id_of[{map, cell}] = id;
          out.cells.emplace_back(map, cell);
        }
      }
    }
  }
  // d_i drops position i from the value vector; if the dropped value loses
  // its last occurrence, close the gap and take the matching face of the cell
  for (std::uint32_t v = 0; v < out.cells.size(); ++v) {
    const auto& [map, cell] = out.cells[v];
    const int n = static_cast<int>(map.size()) - 1;
    if (n == 0) continue;
    for (int i = 0; i <= n; ++i) {
      std::vector<int> reduced = map;
      const int dropped = reduced[static_cast<std::size_t>(i)];
      reduced.erase(reduced.begin() + i);
      const bool still_hit =
          std::find(reduced.begin(), reduced.end(), dropped) != reduced.end();
      SimplexId target_cell = cell;
      if (!still_hit) {
        for (int& value : reduced)
          if (value > dropped) --value;
        target_cell = y.face(cell, dropped);
      }
      builder.set_face(SimplexId{v}, i, id_of.at({reduced, target_cell}));
    }
  }
  out.simplicial.base = std::move(builder).build();
  // s_j duplicates the value at position j
  for (std::uint32_t v = 0; v < out.cells.size(); ++v) {
    const auto& [map, cell] = out.cells[v];
    const int n = static_cast<int>(map.size()) - 1;
    if (n + 1 > truncation) continue;
    for (int j = 0; j <= n; ++j) {
      std::vector<int> widened = map;
      widened.insert(widened.begin() + j, map[static_cast<std::size_t>(j)]);
      out.simplicial.degeneracies[{SimplexId{v}, j}] = id_of.at({widened, cell});
    }
  }
  return out;
}

}  // namespace skan
