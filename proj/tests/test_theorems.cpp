#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixcomb/theorems.hpp"

#include <algorithm>
#include <set>

using namespace fixcomb;

namespace {

Label lab(std::vector<int> v) { return v; }

Point pt(std::vector<int> v) {
  Point p;
  for (int x : v) p.emplace_back(x);
  return p;
}

LabelFunction make_lf(LabelKind kind, int m, std::map<VertexId, Label> assignment) {
  LabelFunction lf;
  lf.codomain = {kind, m};
  lf.assignment = std::move(assignment);
  return lf;
}

// Every valid labelling of a small instance must carry a witness.
void sweep_all_labellings(TheoremId id, const Triangulation& t, int m, long expected_count) {
  BigInt count = count_valid_labellings(id, t, m);
  CHECK(count == BigInt(expected_count));
  auto all = enumerate_valid_labellings(id, t, m, 200000);
  REQUIRE(all.has_value());
  REQUIRE(static_cast<long>(all->size()) == expected_count);
  for (const LabelFunction& lf : *all) {
    CHECK(validate_label_conditions(id, t, lf).ok);
    CHECK(find_witness(id, t, lf).has_value());
  }
}

}  // namespace

TEST_CASE("theorem names round-trip and metadata tables are pinned") {
  for (TheoremId id : {TheoremId::SPERNER, TheoremId::OCT_OCT, TheoremId::CUB_CUB,
                       TheoremId::CUB_OCT, TheoremId::OCT_CUB, TheoremId::TUCKER,
                       TheoremId::TUCKER_CUB})
    CHECK(theorem_from_string(theorem_name(id)) == id);
  CHECK_THROWS_AS(theorem_from_string("brouwer"), std::invalid_argument);

  CHECK(witness_kind_of(TheoremId::SPERNER) == WitnessKind::PANCHROMATIC);
  CHECK(witness_kind_of(TheoremId::OCT_OCT) == WitnessKind::COMPLEMENTARY_EDGE);
  CHECK(witness_kind_of(TheoremId::CUB_CUB) == WitnessKind::NEUTRAL);
  CHECK(witness_kind_of(TheoremId::CUB_OCT) == WitnessKind::COMPLEMENTARY_EDGE);
  CHECK(witness_kind_of(TheoremId::OCT_CUB) == WitnessKind::NEUTRAL);
  CHECK(witness_kind_of(TheoremId::TUCKER) == WitnessKind::COMPLEMENTARY_EDGE);
  CHECK(witness_kind_of(TheoremId::TUCKER_CUB) == WitnessKind::NEUTRAL);

  CHECK(codomain_kind_of(TheoremId::SPERNER) == LabelKind::SIMPLEX_EXT);
  CHECK(codomain_kind_of(TheoremId::CUB_OCT) == LabelKind::CROSS_EXT);
  CHECK(codomain_kind_of(TheoremId::OCT_CUB) == LabelKind::CUBE_EXT);

  CHECK(domain_kind_allowed(TheoremId::SPERNER, PolyKind::SIMPLEX));
  CHECK_FALSE(domain_kind_allowed(TheoremId::SPERNER, PolyKind::CUBE));
  CHECK(domain_kind_allowed(TheoremId::OCT_OCT, PolyKind::CROSS));
  CHECK_FALSE(domain_kind_allowed(TheoremId::OCT_OCT, PolyKind::CUBE));
  CHECK(domain_kind_allowed(TheoremId::CUB_OCT, PolyKind::CUBE));
  CHECK(domain_kind_allowed(TheoremId::TUCKER, PolyKind::CROSS));
  CHECK(domain_kind_allowed(TheoremId::TUCKER, PolyKind::CUBE));
  CHECK_FALSE(domain_kind_allowed(TheoremId::TUCKER, PolyKind::SIMPLEX));
}

TEST_CASE("allowed labels at simplex corners and edge midpoints") {
  Triangulation t1 = grid_simplex(2, 1);
  // Corners carry exactly the matching unit label.
  CHECK(allowed_labels(TheoremId::SPERNER, t1, 0, 2) ==
        std::vector<Label>{lab({1, 0, 0})});
  CHECK(allowed_labels(TheoremId::SPERNER, t1, 1, 2) ==
        std::vector<Label>{lab({0, 1, 0})});
  CHECK(allowed_labels(TheoremId::SPERNER, t1, 2, 2) ==
        std::vector<Label>{lab({0, 0, 1})});

  Triangulation t2 = grid_simplex(2, 2);
  VertexId mid = *t2.find_vertex(
      {Rat(1) / 2, Rat(1) / 2, Rat(0)});  // midpoint of the first edge
  CHECK(allowed_labels(TheoremId::SPERNER, t2, mid, 2) ==
        std::vector<Label>{lab({1, 0, 0}), lab({0, 1, 0})});
}

TEST_CASE("allowed labels on the cross polytope") {
  Triangulation t = cross_standard(2);

  // Interior center is unconstrained; boundary vertices are forced.
  CHECK(allowed_labels(TheoremId::OCT_OCT, t, 0, 2).size() == 4);
  CHECK(allowed_labels(TheoremId::OCT_OCT, t, 1, 2) == std::vector<Label>{lab({1, 0})});
  CHECK(allowed_labels(TheoremId::OCT_OCT, t, 2, 2) == std::vector<Label>{lab({-1, 0})});
  CHECK(allowed_labels(TheoremId::OCT_OCT, t, 4, 2) == std::vector<Label>{lab({0, -1})});

  // Cube labels at e_1: both facets through it forbid their negated normals,
  // leaving the two sign vectors that agree in the first coordinate.
  CHECK(allowed_labels(TheoremId::OCT_CUB, t, 1, 2) ==
        std::vector<Label>{lab({1, -1}), lab({1, 1})});
  CHECK(allowed_labels(TheoremId::OCT_CUB, t, 0, 2).size() == 4);

  // The relational theorems leave every vertex free.
  CHECK(allowed_labels(TheoremId::TUCKER, t, 1, 2).size() == 4);
  CHECK(allowed_labels(TheoremId::TUCKER, t, 1, 3).size() == 6);
  CHECK(allowed_labels(TheoremId::TUCKER_CUB, t, 1, 4).size() == 16);
}

TEST_CASE("allowed labels on the cube") {
  Triangulation t1 = freudenthal_cube(2, 1);
  // Corner (-1,-1): its own sign vector for cube labels, the two
  // non-opposing unit labels for cross labels.
  CHECK(allowed_labels(TheoremId::CUB_CUB, t1, 0, 2) ==
        std::vector<Label>{lab({-1, -1})});
  CHECK(allowed_labels(TheoremId::CUB_OCT, t1, 0, 2) ==
        std::vector<Label>{lab({-1, 0}), lab({0, -1})});

  Triangulation t2 = freudenthal_cube(2, 2);
  VertexId center = *t2.find_vertex(pt({0, 0}));
  VertexId south = *t2.find_vertex(pt({0, -1}));
  CHECK(allowed_labels(TheoremId::CUB_CUB, t2, center, 2).size() == 4);
  CHECK(allowed_labels(TheoremId::CUB_CUB, t2, south, 2) ==
        std::vector<Label>{lab({-1, -1}), lab({1, -1})});
  CHECK(allowed_labels(TheoremId::CUB_OCT, t2, south, 2) ==
        std::vector<Label>{lab({1, 0}), lab({-1, 0}), lab({0, -1})});
}

TEST_CASE("instance checks reject mismatched domains, codomains, and dimensions") {
  Triangulation cross = cross_standard(2);
  Triangulation simplex = grid_simplex(2, 1);
  LabelFunction cross_lf = random_labelling(TheoremId::OCT_OCT, cross, 2, 1);

  CHECK_THROWS_AS(validate_label_conditions(TheoremId::SPERNER, cross, cross_lf),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_label_conditions(TheoremId::CUB_CUB, cross, cross_lf),
                  std::invalid_argument);
  // Right domain, wrong label kind.
  CHECK_THROWS_AS(validate_label_conditions(TheoremId::OCT_CUB, cross, cross_lf),
                  std::invalid_argument);
  // Label dimension must match the domain dimension for the fixed theorems.
  CHECK_THROWS_AS(random_labelling(TheoremId::OCT_OCT, cross, 3, 1),
                  std::invalid_argument);

  Triangulation bare;  // no domain descriptor at all
  bare.ambient = 2;
  CHECK_THROWS_AS(allowed_labels(TheoremId::OCT_OCT, bare, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(allowed_labels(TheoremId::SPERNER, simplex, 0, 3), std::invalid_argument);
}

TEST_CASE("condition violations are reported per vertex") {
  Triangulation cross = cross_standard(2);

  // e_1 labelled with a sign vector disagreeing in its own coordinate.
  LabelFunction bad = make_lf(LabelKind::CUBE_EXT, 2,
                              {{0, lab({1, 1})},
                               {1, lab({-1, 1})},
                               {2, lab({-1, -1})},
                               {3, lab({-1, 1})},
                               {4, lab({1, -1})}});
  LabelReport rep = validate_label_conditions(TheoremId::OCT_CUB, cross, bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].vertex == 1);

  // Missing and malformed labels are caught before the conditions run.
  LabelFunction partial = make_lf(LabelKind::CROSS_EXT, 2, {{0, lab({1, 0})}});
  LabelReport missing = validate_label_conditions(TheoremId::OCT_OCT, cross, partial);
  CHECK_FALSE(missing.ok);
  CHECK(missing.violations.size() == 4);

  LabelFunction junk = make_lf(LabelKind::CROSS_EXT, 2,
                               {{0, lab({2, 0})},
                                {1, lab({1, 0})},
                                {2, lab({-1, 0})},
                                {3, lab({0, 1})},
                                {4, lab({0, -1})}});
  LabelReport invalid = validate_label_conditions(TheoremId::OCT_OCT, cross, junk);
  CHECK_FALSE(invalid.ok);
  REQUIRE(invalid.violations.size() == 1);
  CHECK(invalid.violations[0].vertex == 0);
}

TEST_CASE("antipodal label conditions on the boundary") {
  Triangulation t = cross_standard(1);  // ids: 0 center, 1 = e_1, 2 = -e_1

  LabelFunction good = make_lf(LabelKind::CROSS_EXT, 1,
                               {{0, lab({1})}, {1, lab({1})}, {2, lab({-1})}});
  CHECK(validate_label_conditions(TheoremId::TUCKER, t, good).ok);

  LabelFunction skew = make_lf(LabelKind::CROSS_EXT, 1,
                               {{0, lab({1})}, {1, lab({1})}, {2, lab({1})}});
  LabelReport rep = validate_label_conditions(TheoremId::TUCKER, t, skew);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].vertex == 1);

  // Interior labels are unconstrained even when m exceeds the dimension.
  LabelFunction wide = make_lf(LabelKind::CROSS_EXT, 3,
                               {{0, lab({0, 0, 1})}, {1, lab({1, 0, 0})}, {2, lab({-1, 0, 0})}});
  CHECK(validate_label_conditions(TheoremId::TUCKER, t, wide).ok);

  // A boundary complex that is not antipodally symmetric is flagged wholesale.
  Triangulation lop;
  lop.ambient = 1;
  lop.domain = PolytopeDescriptor{PolyKind::CROSS, 1, Rat(1)};
  VertexId a = lop.add_vertex(pt({1}));
  VertexId b = lop.add_vertex(pt({0}));
  lop.add_simplex({a, b});
  LabelFunction two = make_lf(LabelKind::CROSS_EXT, 1, {{a, lab({1})}, {b, lab({-1})}});
  LabelReport asym = validate_label_conditions(TheoremId::TUCKER, lop, two);
  CHECK_FALSE(asym.ok);
  REQUIRE(asym.violations.size() == 1);
  CHECK(asym.violations[0].vertex == -1);
}

TEST_CASE("forced corner labelling yields the panchromatic cell") {
  Triangulation t = grid_simplex(2, 1);
  auto all = enumerate_valid_labellings(TheoremId::SPERNER, t, 2, 10);
  REQUIRE(all.has_value());
  REQUIRE(all->size() == 1);
  auto w = find_witness(TheoremId::SPERNER, t, all->front());
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessKind::PANCHROMATIC);
  CHECK(w->simplex == make_simplex({0, 1, 2}));
}

TEST_CASE("complementary edge on the interval with pinned labels") {
  Triangulation t = cross_standard(1);
  LabelFunction lf = make_lf(LabelKind::CROSS_EXT, 1,
                             {{0, lab({1})}, {1, lab({1})}, {2, lab({-1})}});
  REQUIRE(validate_label_conditions(TheoremId::TUCKER, t, lf).ok);
  auto w = find_witness(TheoremId::TUCKER, t, lf);
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessKind::COMPLEMENTARY_EDGE);
  CHECK(w->simplex == make_simplex({0, 2}));
}

TEST_CASE("neutral witness search walks simplices in set order") {
  Triangulation t = cross_standard(2);
  LabelFunction lf = make_lf(LabelKind::CUBE_EXT, 2,
                             {{0, lab({1, 1})},
                              {1, lab({1, 1})},
                              {2, lab({-1, -1})},
                              {3, lab({-1, 1})},
                              {4, lab({1, -1})}});
  REQUIRE(validate_label_conditions(TheoremId::OCT_CUB, t, lf).ok);
  auto w = find_witness(TheoremId::OCT_CUB, t, lf);
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessKind::NEUTRAL);
  // {0,1} carries labels {(1,1)} only; {0,2} is the first neutral face.
  CHECK(w->simplex == make_simplex({0, 2}));
}

TEST_CASE("witness search reports absence on a broken instance") {
  Triangulation t = grid_simplex(2, 1);
  LabelFunction monochrome = make_lf(LabelKind::SIMPLEX_EXT, 2,
                                     {{0, lab({1, 0, 0})},
                                      {1, lab({1, 0, 0})},
                                      {2, lab({1, 0, 0})}});
  CHECK_FALSE(validate_label_conditions(TheoremId::SPERNER, t, monochrome).ok);
  CHECK_FALSE(find_witness(TheoremId::SPERNER, t, monochrome).has_value());
}

TEST_CASE("every valid labelling of the smallest instances carries a witness") {
  sweep_all_labellings(TheoremId::SPERNER, grid_simplex(2, 1), 2, 1);
  sweep_all_labellings(TheoremId::SPERNER, grid_simplex(2, 2), 2, 8);
  sweep_all_labellings(TheoremId::OCT_OCT, cross_standard(2), 2, 4);
  sweep_all_labellings(TheoremId::CUB_CUB, freudenthal_cube(2, 1), 2, 1);
  sweep_all_labellings(TheoremId::CUB_OCT, freudenthal_cube(2, 1), 2, 16);
  sweep_all_labellings(TheoremId::OCT_CUB, cross_standard(2), 2, 64);
  sweep_all_labellings(TheoremId::TUCKER, cross_standard(1), 1, 4);
  sweep_all_labellings(TheoremId::TUCKER, cross_standard(2), 2, 64);
  sweep_all_labellings(TheoremId::TUCKER_CUB, cross_standard(2), 2, 64);
}

TEST_CASE("a refined cube sweep still forces complementary edges") {
  Triangulation t = freudenthal_cube(2, 2);
  sweep_all_labellings(TheoremId::CUB_OCT, t, 2, 5184);
}

TEST_CASE("random labellings are valid, reproducible, and witnessed") {
  struct Setup {
    TheoremId id;
    Triangulation t;
    int m;
  };
  std::vector<Setup> setups;
  setups.push_back({TheoremId::SPERNER, grid_simplex(2, 2), 2});
  setups.push_back({TheoremId::OCT_OCT, cross_standard(2), 2});
  setups.push_back({TheoremId::CUB_CUB, freudenthal_cube(2, 2), 2});
  setups.push_back({TheoremId::CUB_OCT, freudenthal_cube(2, 2), 2});
  setups.push_back({TheoremId::OCT_CUB, cross_standard(2), 2});
  setups.push_back({TheoremId::TUCKER, cross_standard(2), 2});
  setups.push_back({TheoremId::TUCKER, cross_standard(3), 3});
  setups.push_back({TheoremId::TUCKER_CUB, barycentric_subdivide(cross_standard(2)), 2});

  for (const Setup& s : setups) {
    bool saw_difference = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      LabelFunction lf = random_labelling(s.id, s.t, s.m, seed);
      CHECK(validate_label_conditions(s.id, s.t, lf).ok);
      CHECK(find_witness(s.id, s.t, lf).has_value());
      CHECK(random_labelling(s.id, s.t, s.m, seed).assignment == lf.assignment);
      if (seed > 0 &&
          lf.assignment != random_labelling(s.id, s.t, s.m, seed - 1).assignment)
        saw_difference = true;
    }
    CHECK(saw_difference);
  }
}

TEST_CASE("antipodal pairs stay mirrored under sampling") {
  Triangulation t = cross_standard(2);
  LabelSetDescriptor ls{LabelKind::CROSS_EXT, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    LabelFunction lf = random_labelling(TheoremId::TUCKER, t, 2, seed);
    CHECK(lf.at(2) == opposite(ls, lf.at(1)));
    CHECK(lf.at(4) == opposite(ls, lf.at(3)));
  }
}

TEST_CASE("combinatorial predicates agree with the hull oracle on whole instances") {
  struct Setup {
    TheoremId id;
    Triangulation t;
    int m;
  };
  std::vector<Setup> setups;
  setups.push_back({TheoremId::OCT_OCT, cross_standard(2), 2});
  setups.push_back({TheoremId::OCT_CUB, cross_standard(2), 2});
  setups.push_back({TheoremId::CUB_OCT, freudenthal_cube(2, 2), 2});
  setups.push_back({TheoremId::CUB_CUB, freudenthal_cube(2, 2), 2});
  setups.push_back({TheoremId::TUCKER, cross_standard(3), 3});
  setups.push_back({TheoremId::TUCKER_CUB, cross_standard(3), 3});

  for (const Setup& s : setups) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      LabelFunction lf = random_labelling(s.id, s.t, s.m, seed);
      CrosscheckReport rep = crosscheck_propositions(s.t, lf);
      CHECK(rep.ok);
      CHECK(rep.simplices_checked == static_cast<long>(s.t.simplices.size()));
      CHECK(rep.disagreements.empty());
    }
  }

  Triangulation simplex = grid_simplex(2, 1);
  LabelFunction sp = random_labelling(TheoremId::SPERNER, simplex, 2, 0);
  CHECK_THROWS_AS(crosscheck_propositions(simplex, sp), std::invalid_argument);
}

TEST_CASE("enumeration respects its budget") {
  Triangulation t = freudenthal_cube(2, 1);
  CHECK_FALSE(enumerate_valid_labellings(TheoremId::CUB_OCT, t, 2, 10).has_value());
  auto all = enumerate_valid_labellings(TheoremId::CUB_OCT, t, 2, 16);
  REQUIRE(all.has_value());
  CHECK(all->size() == 16);
  std::set<std::map<VertexId, Label>> distinct;
  for (const LabelFunction& lf : *all) distinct.insert(lf.assignment);
  CHECK(distinct.size() == 16);
}

TEST_CASE("label counts scale with the free alphabet for relational theorems") {
  Triangulation t = cross_standard(2);
  // Two boundary pairs plus a free center: |alphabet|^3.
  CHECK(count_valid_labellings(TheoremId::TUCKER, t, 1) == BigInt(8));
  CHECK(count_valid_labellings(TheoremId::TUCKER, t, 3) == BigInt(216));
  CHECK(count_valid_labellings(TheoremId::TUCKER_CUB, t, 3) == BigInt(512));
}
