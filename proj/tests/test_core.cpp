#include <doctest.h>

#include <skan/core.hpp>

#include <sstream>

using namespace skan;

namespace {

// Two points, two loops on the first point, and one triangle. Face wiring of
// the triangle is a parameter so tests can break exactly one identity.
SemiSimplicialSet triangle_complex(SimplexId d0, SimplexId d1, SimplexId d2) {
  SemiSimplicialSetBuilder b(2);
  const SimplexId p = b.add_simplex(0);
  const SimplexId q = b.add_simplex(0);
  const SimplexId e = b.add_simplex(1);  // loop at p
  const SimplexId h = b.add_simplex(1);  // q -> p
  b.set_face(e, 0, p);
  b.set_face(e, 1, p);
  b.set_face(h, 0, q);
  b.set_face(h, 1, p);
  const SimplexId t = b.add_simplex(2);
  b.set_face(t, 0, d0);
  b.set_face(t, 1, d1);
  b.set_face(t, 2, d2);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("builder assigns sequential ids and keeps levels sorted") {
  SemiSimplicialSetBuilder b(1);
  const SimplexId a = b.add_simplex(0);
  const SimplexId e = b.add_simplex(1);
  const SimplexId c = b.add_simplex(0);
  b.set_face(e, 0, a);
  b.set_face(e, 1, c);
  const SemiSimplicialSet x = std::move(b).build();

  CHECK(a.value == 0);
  CHECK(e.value == 1);
  CHECK(c.value == 2);
  CHECK(x.size() == 3);
  CHECK(x.truncation_degree() == 1);
  REQUIRE(x.level(0).size() == 2);
  CHECK(x.level(0)[0] == a);
  CHECK(x.level(0)[1] == c);
  CHECK(x.degree(e) == 1);
  CHECK(x.face(e, 0) == a);
  CHECK(x.face(e, 1) == c);
  CHECK(x.contains(e));
  CHECK_FALSE(x.contains(SimplexId{7}));
}

TEST_CASE("builder rejects malformed input") {
  SUBCASE("degree out of range") {
    SemiSimplicialSetBuilder b(1);
    CHECK_THROWS_AS(b.add_simplex(2), StructuralError);
    CHECK_THROWS_AS(b.add_simplex(-1), StructuralError);
  }
  SUBCASE("duplicate explicit id") {
    SemiSimplicialSetBuilder b(1);
    b.add_simplex(SimplexId{4}, 0);
    CHECK_THROWS_AS(b.add_simplex(SimplexId{4}, 1), StructuralError);
  }
  SUBCASE("face index out of range") {
    SemiSimplicialSetBuilder b(1);
    const SimplexId a = b.add_simplex(0);
    const SimplexId e = b.add_simplex(1);
    CHECK_THROWS_AS(b.set_face(e, 2, a), StructuralError);
    CHECK_THROWS_AS(b.set_face(a, 0, a), StructuralError);
  }
  SUBCASE("missing face entry surfaces at build") {
    SemiSimplicialSetBuilder b(1);
    const SimplexId a = b.add_simplex(0);
    const SimplexId e = b.add_simplex(1);
    b.set_face(e, 0, a);
    CHECK_THROWS_AS(std::move(b).build(), StructuralError);
  }
  SUBCASE("face target of wrong degree surfaces at build") {
    SemiSimplicialSetBuilder b(2);
    const SimplexId a = b.add_simplex(0);
    const SimplexId e = b.add_simplex(1);
    const SimplexId t = b.add_simplex(2);
    b.set_face(e, 0, a);
    b.set_face(e, 1, a);
    b.set_face(t, 0, e);
    b.set_face(t, 1, e);
    b.set_face(t, 2, a);  // degree 0, wants 1
    CHECK_THROWS_AS(std::move(b).build(), StructuralError);
  }
  SUBCASE("dangling face target surfaces at build") {
    SemiSimplicialSetBuilder b(1);
    const SimplexId e{0};
    b.add_simplex(e, 1);
    b.set_face(e, 0, SimplexId{9});
    b.set_face(e, 1, SimplexId{9});
    CHECK_THROWS_AS(std::move(b).build(), StructuralError);
  }
}

TEST_CASE("validate accepts a well-wired triangle") {
  // e has both faces p, so d_i d_j t is p for every pair when all faces are e.
  const SemiSimplicialSet x = triangle_complex(SimplexId{2}, SimplexId{2}, SimplexId{2});
  CHECK(validate(x).ok());
}

TEST_CASE("validate reports exactly the broken pair") {
  // Faces (e, e, h): the pair (0,2) compares d_0 h = q against d_1 e = p and
  // fails; (0,1) and (1,2) still hold.
  const SemiSimplicialSet x = triangle_complex(SimplexId{2}, SimplexId{2}, SimplexId{3});
  const ValidationReport report = validate(x);
  REQUIRE(report.entries.size() == 1);
  const auto& entry = report.entries[0];
  CHECK(entry.x == SimplexId{4});
  CHECK(entry.i == 0);
  CHECK(entry.j == 2);
  CHECK(entry.lhs == SimplexId{1});
  CHECK(entry.rhs == SimplexId{0});
  CHECK_FALSE(entry.cross);
  CHECK(entry.line() == "VIOLATION face-commute x=4 i=0 j=2 lhs=1 rhs=0");
}

TEST_CASE("multi-index arithmetic") {
  const MultiIndex n({2, 0, 1});
  CHECK(n.axes() == 3);
  CHECK(n.total() == 3);
  CHECK(n.entry(1) == 2);
  CHECK(n.entry(3) == 1);
  CHECK_THROWS_AS((void)n.entry(0), StructuralError);
  CHECK_THROWS_AS((void)n.entry(4), StructuralError);
  CHECK(n.plus(2) == MultiIndex({2, 1, 1}));
  CHECK(n.plus(1, 2) == MultiIndex({4, 0, 1}));
  CHECK(n.minus(3) == MultiIndex({2, 0, 0}));
  CHECK_THROWS_AS((void)n.minus(2), StructuralError);
  CHECK(n.str() == "(2,0,1)");
}

TEST_CASE("multi_indices_with_total enumerates lexicographically") {
  const auto all = multi_indices_with_total(2, 2);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == MultiIndex({0, 2}));
  CHECK(all[1] == MultiIndex({1, 1}));
  CHECK(all[2] == MultiIndex({2, 0}));
  CHECK(multi_indices_with_total(3, 0).size() == 1);
  CHECK(multi_indices_with_total(3, 2).size() == 6);
}

namespace {

// Square bicomplex: one vertex v, loops ex (axis 1) and ey (axis 2), and one
// square whose axis-p faces land on the matching loop.
MultiSemiSimplicialSet square_complex(bool swap_one_face) {
  MultiSemiSimplicialSetBuilder b(2, 2);
  const SimplexId v = b.add_simplex(MultiIndex({0, 0}));
  const SimplexId ex = b.add_simplex(MultiIndex({1, 0}));
  const SimplexId ey = b.add_simplex(MultiIndex({0, 1}));
  for (int i = 0; i <= 1; ++i) {
    b.set_face(ex, 1, i, v);
    b.set_face(ey, 2, i, v);
  }
  const SimplexId sq = b.add_simplex(MultiIndex({1, 1}));
  b.set_face(sq, 1, 0, ey);
  b.set_face(sq, 1, 1, ey);
  b.set_face(sq, 2, 0, ex);
  b.set_face(sq, 2, 1, ex);
  if (swap_one_face) {
    // Second loop in axis 1 with distinct endpoints cannot commute.
    const SimplexId w = b.add_simplex(MultiIndex({0, 0}));
    const SimplexId f = b.add_simplex(MultiIndex({1, 0}));
    b.set_face(f, 1, 0, v);
    b.set_face(f, 1, 1, w);
    b.set_face(sq, 2, 0, f);
  }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("multi builder and accessors") {
  const MultiSemiSimplicialSet x = square_complex(false);
  CHECK(x.axes() == 2);
  CHECK(x.truncation_total() == 2);
  CHECK(x.size() == 4);
  CHECK(x.index_of(SimplexId{3}) == MultiIndex({1, 1}));
  CHECK(x.total_degree(SimplexId{3}) == 2);
  CHECK(x.level(MultiIndex({1, 0})).size() == 1);
  CHECK(x.level(MultiIndex({2, 0})).empty());
  CHECK(x.total_level(1).size() == 2);
  CHECK(x.face(SimplexId{3}, 1, 0) == SimplexId{2});
  CHECK(x.face(SimplexId{3}, 2, 1) == SimplexId{1});
  CHECK_THROWS_AS((void)x.face(SimplexId{1}, 2, 0), StructuralError);  // axis entry 0
  CHECK(validate_multi(x).ok());
}

TEST_CASE("validate_multi reports a cross-axis violation") {
  const MultiSemiSimplicialSet x = square_complex(true);
  const ValidationReport report = validate_multi(x);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& entry : report.entries) {
    if (entry.cross && entry.x == SimplexId{3}) found = true;
    if (entry.cross) {
      CHECK(entry.line().rfind("VIOLATION face-commute-cross ", 0) == 0);
    }
  }
  CHECK(found);
}

TEST_CASE("l=1 round trip preserves ids, degrees, and faces") {
  const SemiSimplicialSet x = triangle_complex(SimplexId{2}, SimplexId{2}, SimplexId{2});
  const MultiSemiSimplicialSet m = as_multi(x);
  CHECK(m.axes() == 1);
  CHECK(m.truncation_total() == x.truncation_degree());
  CHECK(m.size() == x.size());
  for (int n = 0; n <= x.truncation_degree(); ++n) {
    const auto single_level = x.level(n);
    const auto multi_level = m.level(MultiIndex({n}));
    REQUIRE(single_level.size() == multi_level.size());
    for (std::size_t i = 0; i < single_level.size(); ++i) {
      CHECK(single_level[i] == multi_level[i]);
      for (int f = 0; n >= 1 && f <= n; ++f)
        CHECK(x.face(single_level[i], f) == m.face(multi_level[i], 1, f));
    }
  }
  const SemiSimplicialSet back = as_single(m);
  CHECK(back.size() == x.size());
  CHECK(back.face(SimplexId{4}, 1) == x.face(SimplexId{4}, 1));
}
