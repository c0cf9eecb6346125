#include <doctest.h>

#include <skan/construct.hpp>
#include <skan/corpus.hpp>
#include <skan/io.hpp>
#include <skan/multi.hpp>

#include <fstream>
#include <sstream>
#include <vector>

using namespace skan;

namespace {

std::string data_file(const char* name) {
  return std::string(SKAN_TESTS_DATA_DIR) + "/" + name;
}

// Pascal's triangle, independent of any library counting.
long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<long long>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 2, 0);
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

SemiSimplicialSet circle() {
  SemiSimplicialSetBuilder b(1);
  const SimplexId p = b.add_simplex(0);
  const SimplexId e = b.add_simplex(1);
  b.set_face(e, 0, p);
  b.set_face(e, 1, p);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("group table construction checks the laws") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(5).mul(3, 4) == 2);

  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {1, 1}}), StructuralError);  // no inverse for 1
  CHECK_THROWS_AS(FiniteGroupTable({{1, 0}, {0, 1}}), StructuralError);  // 0 not identity
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {1, 0}, {0, 0}}), StructuralError);  // not square
  // Identity and inverses hold but (1*1)*2 != 1*(1*2) fails associativity.
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}), StructuralError);
}

TEST_CASE("group files parse with line diagnostics") {
  std::ifstream in(data_file("z3.grp"));
  REQUIRE(in.good());
  const FiniteGroupTable z3 = FiniteGroupTable::load(in);
  CHECK(z3.order() == 3);
  CHECK(z3.mul(2, 2) == 1);

  auto fails_at = [](const std::string& text) {
    std::istringstream s(text);
    try {
      FiniteGroupTable::load(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(fails_at("mul 0 0 0\n") == 1);                       // before header
  CHECK(fails_at("group 2\nmul 0 0 0\nmul 0 0 1\n") == 3);   // duplicate product
  CHECK(fails_at("group 2\nmul 0 0 0\n") > 0);               // incomplete table
  CHECK(fails_at("group 2\nmul 0 2 0\n") == 2);              // element out of range
}

TEST_CASE("nerve levels, ids, and tuples") {
  const NerveResult n = nerve(cyclic_group(2), 2);
  CHECK(n.complex.truncation_degree() == 2);
  CHECK(n.complex.level(0).size() == 1);
  CHECK(n.complex.level(1).size() == 2);
  CHECK(n.complex.level(2).size() == 4);
  REQUIRE(n.tuples.size() == 7);
  CHECK(n.tuples[0].empty());
  CHECK(n.tuples[1] == std::vector<int>{0});
  CHECK(n.tuples[2] == std::vector<int>{1});
  CHECK(n.tuples[3] == std::vector<int>{0, 0});
  CHECK(n.tuples[4] == std::vector<int>{0, 1});
  CHECK(n.tuples[5] == std::vector<int>{1, 0});
  CHECK(n.tuples[6] == std::vector<int>{1, 1});
  // d_1 multiplies the adjacent pair: (g,g) -> gg = e.
  CHECK(n.complex.face(SimplexId{6}, 1) == SimplexId{1});
}

TEST_CASE("nerve faces agree with independent tuple arithmetic") {
  const FiniteGroupTable g = cyclic_group(3);
  const NerveResult n = nerve(g, 4);

  // Invert the tuple table to find ids without the generator's id scheme.
  std::map<std::vector<int>, SimplexId> id_of;
  for (std::uint32_t v = 0; v < n.complex.id_bound(); ++v)
    id_of[n.tuples[v]] = SimplexId{v};

  for (std::uint32_t v = 0; v < n.complex.id_bound(); ++v) {
    const std::vector<int>& tuple = n.tuples[v];
    const int deg = static_cast<int>(tuple.size());
    for (int i = 0; i <= deg && deg >= 1; ++i) {
      std::vector<int> expect;
      if (i == 0) {
        expect.assign(tuple.begin() + 1, tuple.end());
      } else if (i == deg) {
        expect.assign(tuple.begin(), tuple.end() - 1);
      } else {
        expect = tuple;
        expect[i - 1] = g.mul(tuple[i - 1], tuple[i]);
        expect.erase(expect.begin() + i);
      }
      CHECK(n.complex.face(SimplexId{v}, i) == id_of.at(expect));
    }
  }
  CHECK(validate(n.complex).ok());
}

TEST_CASE("nerve sizes for small groups") {
  CHECK(nerve(cyclic_group(1), 3).complex.size() == 4);    // one simplex per level
  CHECK(nerve(cyclic_group(2), 6).complex.size() == 127);
  CHECK(nerve(cyclic_group(3), 5).complex.size() == 364);
  CHECK(validate(nerve(cyclic_group(3), 3).complex).ok());
}

TEST_CASE("nerve reference degeneracies satisfy every identity") {
  const NerveResult n = nerve(cyclic_group(3), 3);
  // The canonical insert-the-identity degeneracies have no T table; the
  // verifier must accept the partial data and still exercise the s-only tags.
  const VerificationReport report = verify_identities(n.complex, n.reference.degeneracies, {});
  CHECK(report.ok());
  CHECK(report.checked.at("ds-cancel") > 0);
  CHECK(report.checked.at("ss-swap") > 0);
  CHECK(report.checked.at("s-injective") > 0);
  CHECK(report.checked.at("ss-factor") > 0);

  std::ostringstream a, b;
  save_complex(a, forget_degeneracies(n.reference));
  save_complex(b, n.complex);
  CHECK(a.str() == b.str());
}

TEST_CASE("external product levels and factor bookkeeping") {
  const SemiSimplicialSet n2 = nerve(cyclic_group(2), 2).complex;
  const ExternalProduct p = external_product(n2, n2);
  CHECK(p.complex.axes() == 2);
  CHECK(p.complex.truncation_total() == 4);
  CHECK(p.complex.level(MultiIndex({0, 0})).size() == 1);
  CHECK(p.complex.level(MultiIndex({1, 1})).size() == 4);
  CHECK(p.complex.level(MultiIndex({2, 2})).size() == 16);
  CHECK(p.complex.level(MultiIndex({3, 1})).empty());  // factor truncated at 2
  CHECK(validate_multi(p.complex).ok());

  // a-major enumeration at (1,0): ids 3,4 are (e,*) and (g,*).
  CHECK(p.factors[3] == std::make_pair(SimplexId{1}, SimplexId{0}));
  CHECK(p.factors[4] == std::make_pair(SimplexId{2}, SimplexId{0}));

  // Faces act on the matching factor.
  std::map<std::pair<SimplexId, SimplexId>, SimplexId> id_of;
  for (std::uint32_t v = 0; v < p.complex.id_bound(); ++v)
    if (p.complex.contains(SimplexId{v})) id_of[p.factors[v]] = SimplexId{v};
  for (std::uint32_t v = 0; v < p.complex.id_bound(); ++v) {
    const SimplexId x{v};
    if (!p.complex.contains(x)) continue;
    const auto [a, b] = p.factors[v];
    const MultiIndex& n = p.complex.index_of(x);
    for (int i = 0; i <= n.entry(1) && n.entry(1) >= 1; ++i)
      CHECK(p.complex.face(x, 1, i) == id_of.at({n2.face(a, i), b}));
    for (int i = 0; i <= n.entry(2) && n.entry(2) >= 1; ++i)
      CHECK(p.complex.face(x, 2, i) == id_of.at({a, n2.face(b, i)}));
  }
}

TEST_CASE("external product respects max_total and point factors") {
  const SemiSimplicialSet n2 = nerve(cyclic_group(2), 3).complex;
  const ExternalProduct p = external_product(n2, n2, 3);
  CHECK(p.complex.truncation_total() == 3);
  CHECK(p.complex.level(MultiIndex({2, 1})).size() == 8);

  SemiSimplicialSetBuilder b(0);
  b.add_simplex(0);
  const SemiSimplicialSet point = std::move(b).build();
  const ExternalProduct q = external_product(n2, point);
  CHECK(q.complex.truncation_total() == 3);
  for (int m = 0; m <= 3; ++m) {
    CHECK(q.complex.level(MultiIndex({m, 0})).size() == n2.level(m).size());
    if (m >= 1) CHECK(q.complex.level(MultiIndex({m - 1, 1})).empty());
  }
  CHECK(validate_multi(q.complex).ok());
}

TEST_CASE("free construction on the point") {
  SemiSimplicialSetBuilder b(0);
  b.add_simplex(0);
  const SemiSimplicialSet point = std::move(b).build();
  const FreeSimplicial f = free_simplicial(point, 4);
  // One monotone surjection {0..n} -> {0} per level.
  for (int n = 0; n <= 4; ++n) CHECK(f.simplicial.base.level(n).size() == 1);
  CHECK(validate(f.simplicial.base).ok());
  CHECK(verify_identities(f.simplicial.base, f.simplicial.degeneracies, {}).ok());
}

TEST_CASE("free construction on the circle") {
  const FreeSimplicial f = free_simplicial(circle(), 4);
  // Sizes 1,2,3,4,5 at degrees 0..4: one vertex cell plus n choices of the
  // one 1-cell position.
  for (int n = 0; n <= 4; ++n)
    CHECK(f.simplicial.base.level(n).size() == static_cast<std::size_t>(n + 1));
  CHECK(f.simplicial.base.level(2).size() == 3);

  // Cell bookkeeping at level 1: the degenerate vertex then the identity on
  // the 1-cell.
  CHECK(f.cells[1] == std::make_pair(std::vector<int>{0, 0}, SimplexId{0}));
  CHECK(f.cells[2] == std::make_pair(std::vector<int>{0, 1}, SimplexId{1}));

  CHECK(validate(f.simplicial.base).ok());
  const VerificationReport report =
      verify_identities(f.simplicial.base, f.simplicial.degeneracies, {});
  CHECK(report.ok());
  CHECK(report.checked.at("ds-commute-low") > 0);
  CHECK(report.checked.at("ds-cancel") > 0);
  CHECK(report.checked.at("ds-commute-high") > 0);
  CHECK(report.checked.at("ss-swap") > 0);
  CHECK(report.checked.at("s-injective") > 0);
  CHECK(report.checked.at("ss-factor") > 0);
}

TEST_CASE("free level sizes match the binomial cardinality formula") {
  const SemiSimplicialSet ys[] = {circle(), nerve(cyclic_group(2), 2).complex,
                                  nerve(cyclic_group(3), 2).complex};
  for (const SemiSimplicialSet& y : ys) {
    const int cap = 4;
    const FreeSimplicial f = free_simplicial(y, cap);
    for (int n = 0; n <= cap; ++n) {
      long long expect = 0;
      for (int p = 0; p <= y.truncation_degree(); ++p)
        expect += static_cast<long long>(y.level(p).size()) * binomial(n, p);
      CHECK(static_cast<long long>(f.simplicial.base.level(n).size()) == expect);
    }
    CHECK(validate(f.simplicial.base).ok());
    CHECK(verify_identities(f.simplicial.base, f.simplicial.degeneracies, {}).ok());
  }
}

TEST_CASE("free construction rejects bad truncations") {
  CHECK_THROWS_AS(free_simplicial(circle(), -1), StructuralError);
}
