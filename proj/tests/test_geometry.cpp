#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixcomb/geometry.hpp"
#include "fixcomb/lp.hpp"
#include "fixcomb/rational.hpp"

#include <algorithm>

using namespace fixcomb;

namespace {

Point pt(std::initializer_list<int> v) {
  Point p;
  for (int x : v) p.push_back(Rat(x));
  return p;
}

Point rpt(std::initializer_list<const char*> v) {
  Point p;
  for (const char* s : v) p.push_back(rat_from_string(s));
  return p;
}

}  // namespace

TEST_CASE("rational serialization is canonical and total") {
  CHECK(rat_to_string(Rat(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(-3)) == "-3/1");
  CHECK(rat_to_string(Rat(0)) == "0/1");
  CHECK(rat_from_string("7/21") == Rat(1, 3));
  CHECK(rat_to_string(rat_from_string("7/21")) == "1/3");
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_from_string("5") == Rat(5));
  CHECK(rat_from_string("1/-2") == Rat(-1, 2));
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
}

TEST_CASE("lp solves small programs exactly") {
  using namespace fixcomb::lp;
  SUBCASE("bounded optimum") {
    // max x0 + x1  s.t.  x0 + 2 x1 <= 4,  x0 <= 3
    std::vector<Row> rows{
        {{Rat(1), Rat(2)}, Sense::LE, Rat(4)},
        {{Rat(1), Rat(0)}, Sense::LE, Rat(3)},
    };
    auto r = maximize(2, rows, {Rat(1), Rat(1)});
    REQUIRE(r.status == Status::OPTIMAL);
    CHECK(r.value == Rat(7, 2));
    CHECK(r.x[0] == Rat(3));
    CHECK(r.x[1] == Rat(1, 2));
  }
  SUBCASE("equality rows") {
    std::vector<Row> rows{{{Rat(1), Rat(1)}, Sense::EQ, Rat(2)}};
    auto r = maximize(2, rows, {Rat(1), Rat(0)});
    REQUIRE(r.status == Status::OPTIMAL);
    CHECK(r.value == Rat(2));
  }
  SUBCASE("infeasible") {
    std::vector<Row> rows{{{Rat(1)}, Sense::LE, Rat(-1)}};
    CHECK(maximize(1, rows, {Rat(0)}).status == Status::INFEASIBLE);
  }
  SUBCASE("negative rhs is fine when feasible") {
    // x0 >= 2 written as -x0 <= -2
    std::vector<Row> rows{{{Rat(-1)}, Sense::LE, Rat(-2)},
                          {{Rat(1)}, Sense::LE, Rat(5)}};
    auto r = maximize(1, rows, {Rat(1)});
    REQUIRE(r.status == Status::OPTIMAL);
    CHECK(r.value == Rat(5));
  }
  SUBCASE("unbounded") {
    CHECK(maximize(1, {}, {Rat(1)}).status == Status::UNBOUNDED);
  }
}

TEST_CASE("point_location distinguishes interior, boundary, outside") {
  PolytopeDescriptor cross2{PolyKind::CROSS, 2, Rat(1)};
  CHECK(point_location(cross2, rpt({"1/2", "1/2"})) == Location::BOUNDARY);
  CHECK(point_location(cross2, rpt({"1/4", "1/4"})) == Location::INTERIOR);
  CHECK(point_location(cross2, pt({1, 1})) == Location::OUTSIDE);

  PolytopeDescriptor cube3{PolyKind::CUBE, 3, Rat(1)};
  CHECK(point_location(cube3, pt({0, 0, 0})) == Location::INTERIOR);
  CHECK(point_location(cube3, pt({1, 0, 0})) == Location::BOUNDARY);
  CHECK(point_location(cube3, pt({1, 1, 1})) == Location::BOUNDARY);
  CHECK(point_location(cube3, pt({2, 0, 0})) == Location::OUTSIDE);

  PolytopeDescriptor simp2{PolyKind::SIMPLEX, 2, Rat(1)};
  CHECK(point_location(simp2, rpt({"1/2", "1/2", "0"})) == Location::BOUNDARY);
  CHECK(point_location(simp2, rpt({"1/3", "1/3", "1/3"})) == Location::INTERIOR);
  CHECK(point_location(simp2, pt({1, 1, -1})) == Location::OUTSIDE);
  CHECK(point_location(simp2, rpt({"1/2", "1/2", "1/2"})) == Location::OUTSIDE);
}

TEST_CASE("active_constraints returns exactly the tight facets") {
  SUBCASE("cross at a vertex") {
    PolytopeDescriptor p{PolyKind::CROSS, 3, Rat(1)};
    auto act = active_constraints(p, pt({1, 0, 0}));
    // Oracle: enumerate all sign vectors and keep those with v . e1 = 1.
    int expected = 0;
    for (int a : {-1, 1})
      for (int b : {-1, 1})
        for (int c : {-1, 1})
          if (a == 1) ++expected, (void)b, (void)c;
    CHECK(static_cast<int>(act.size()) == expected);
    for (const auto& f : act) {
      CHECK(f.normal[0] == 1);
      CHECK(f.rhs == Rat(1));
    }
  }
  SUBCASE("cube at a facet point") {
    PolytopeDescriptor p{PolyKind::CUBE, 2, Rat(1)};
    auto act = active_constraints(p, pt({1, 0}));
    REQUIRE(act.size() == 1);
    CHECK(act[0].normal == std::vector<int>{1, 0});
  }
  SUBCASE("simplex at a boundary point") {
    PolytopeDescriptor p{PolyKind::SIMPLEX, 2, Rat(1)};
    auto act = active_constraints(p, rpt({"1/2", "1/2", "0"}));
    REQUIRE(act.size() == 1);
    CHECK(act[0].normal == std::vector<int>{0, 0, -1});
    CHECK(act[0].rhs == Rat(0));
  }
  SUBCASE("interior point has none") {
    PolytopeDescriptor p{PolyKind::CROSS, 2, Rat(1)};
    CHECK(active_constraints(p, pt({0, 0})).empty());
  }
  SUBCASE("outside point throws") {
    PolytopeDescriptor p{PolyKind::CROSS, 2, Rat(1)};
    CHECK_THROWS_AS(active_constraints(p, pt({2, 0})), std::invalid_argument);
  }
}

TEST_CASE("hull_meets_interior is an exact strict-interior test") {
  PolytopeDescriptor cross2{PolyKind::CROSS, 2, Rat(1)};
  PolytopeDescriptor cube2{PolyKind::CUBE, 2, Rat(1)};

  CHECK(hull_meets_interior({pt({1, 0}), pt({-1, 0})}, cross2));
  CHECK_FALSE(hull_meets_interior({pt({1, 0}), pt({0, 1})}, cross2));
  CHECK_FALSE(hull_meets_interior({pt({1, 0})}, cross2));
  CHECK(hull_meets_interior({pt({1, 1}), pt({-1, -1})}, cube2));
  CHECK_FALSE(hull_meets_interior({pt({1, 1}), pt({1, -1})}, cube2));

  SUBCASE("invariant under permutation and duplication") {
    std::vector<Point> pts{pt({1, 0}), pt({0, 1}), pt({-1, 0})};
    const bool base = hull_meets_interior(pts, cross2);
    std::vector<Point> perm{pts[2], pts[0], pts[1]};
    std::vector<Point> dup{pts[0], pts[1], pts[2], pts[1], pts[1]};
    CHECK(hull_meets_interior(perm, cross2) == base);
    CHECK(hull_meets_interior(dup, cross2) == base);
    CHECK(base);  // e1, e2, -e1 span points strictly inside
  }
  SUBCASE("hull entirely outside") {
    CHECK_FALSE(hull_meets_interior({pt({2, 0}), pt({3, 0})}, cross2));
  }
  SUBCASE("simplex relative interior") {
    PolytopeDescriptor simp2{PolyKind::SIMPLEX, 2, Rat(1)};
    CHECK(hull_meets_interior({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}, simp2));
    CHECK_FALSE(hull_meets_interior({pt({1, 0, 0}), pt({0, 1, 0})}, simp2));
  }
}

TEST_CASE("hull_contains") {
  CHECK(hull_contains({pt({1, 0}), pt({-1, 0})}, pt({0, 0})));
  CHECK_FALSE(hull_contains({pt({1, 0}), pt({0, 1})}, pt({0, 0})));
  CHECK(hull_contains({pt({1, 0}), pt({0, 1})}, rpt({"1/2", "1/2"})));
}

TEST_CASE("simplex_det matches hand values") {
  CHECK(simplex_det({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == Rat(1));
  CHECK(simplex_det({pt({0, 0}), pt({0, 1}), pt({1, 0})}) == Rat(-1));
  CHECK(simplex_det({pt({0, 0}), pt({1, 0}), pt({2, 0})}) == Rat(0));
  CHECK(simplex_det({pt({-1, -1}), pt({1, -1}), pt({1, 1})}) == Rat(4));
}

TEST_CASE("simplex_pair_ok accepts proper pairs") {
  // Two triangles sharing a full edge.
  CHECK(simplex_pair_ok({pt({0, 0}), pt({1, 0}), pt({0, 1})},
                        {pt({1, 0}), pt({0, 1}), pt({1, 1})}));
  // Identical simplices.
  CHECK(simplex_pair_ok({pt({0, 0}), pt({1, 0})}, {pt({1, 0}), pt({0, 0})}));
  // Sharing exactly one vertex, fanning apart.
  CHECK(simplex_pair_ok({pt({0, 0}), pt({1, 0}), pt({0, 1})},
                        {pt({0, 0}), pt({-1, 0}), pt({0, -1})}));
  // Disjoint and far away.
  CHECK(simplex_pair_ok({pt({0, 0}), pt({1, 0})}, {pt({5, 5}), pt({6, 5})}));
  // Proper pair whose strict separator must pass through a third vertex:
  // triangles meeting only at the origin with a collinear edge along x = 0.
  CHECK(simplex_pair_ok({pt({0, 0}), pt({1, 0}), pt({0, 1})},
                        {pt({0, 0}), pt({-1, 0}), pt({-1, 1})}));
}

TEST_CASE("simplex_pair_ok rejects improper pairs") {
  // Overlapping collinear segments.
  CHECK_FALSE(simplex_pair_ok({pt({0, 0}), pt({2, 0})},
                              {rpt({"-1/2", "0"}), rpt({"1/2", "0"})}));
  // T-junction: second triangle attaches to half of the first's bottom edge.
  CHECK_FALSE(simplex_pair_ok({pt({0, 0}), pt({2, 0}), pt({0, 1})},
                              {pt({0, 0}), pt({1, 0}), pt({0, -1})}));
  // One simplex inside the other.
  CHECK_FALSE(simplex_pair_ok({pt({0, 0}), pt({4, 0}), pt({0, 4})},
                              {pt({1, 1}), pt({2, 1}), pt({1, 2})}));
  // Same vertices plus interior crossing without shared vertices.
  CHECK_FALSE(simplex_pair_ok({pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}));
  // Degenerate input throws.
  CHECK_THROWS_AS(simplex_pair_ok({pt({0, 0}), pt({1, 0}), pt({2, 0})},
                                  {pt({0, 1}), pt({1, 1})}),
                  std::invalid_argument);
}
