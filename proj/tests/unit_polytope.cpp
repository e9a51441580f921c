#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyhodge/polytope.hpp"

using namespace polyhodge;

namespace {

LatticePoint pt(std::initializer_list<long long> xs) {
  LatticePoint v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

Polytope cross_polytope(int n) {
  std::vector<LatticePoint> vertices;
  for (int i = 0; i < n; ++i)
    for (int sign : {1, -1}) {
      LatticePoint v(static_cast<std::size_t>(n), Int(0));
      v[static_cast<std::size_t>(i)] = sign;
      vertices.push_back(std::move(v));
    }
  // Facets: one vertex per axis, all sign patterns.
  std::vector<std::vector<int>> facets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i) f.push_back(2 * i + ((mask >> i) & 1));
    facets.push_back(std::move(f));
  }
  return validate_polytope(make_polytope(n, std::move(vertices), std::move(facets)));
}

}  // namespace

TEST_CASE("unit simplex validates and is reflexive") {
  Polytope p = validate_polytope(make_simplex({pt({1, 0}), pt({0, 1}), pt({-1, -1})}));
  CHECK(p.validated);
  CHECK(p.facets.size() == 3);
  for (const Int& level : p.facet_levels) CHECK(level == 1);
  CHECK(is_reflexive(p));
  CHECK(normalized_volume(p) == 3);

  SimplexWeights w = simplex_weights(p);
  CHECK(w.q == std::vector<Int>{1, 1, 1});
  CHECK(w.mu == 3);
  CHECK(is_reduced(w));
}

TEST_CASE("validation failures are classified") {
  // Origin on the boundary.
  CHECK_THROWS_AS(validate_polytope(make_simplex({pt({1, 0}), pt({0, 1}), pt({-1, 0})})),
                  ValidationError);
  // Origin strictly outside.
  try {
    validate_polytope(make_simplex({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.issue == ValidationIssue::OriginNotInterior);
  }
  // A facet whose generators are collinear.
  try {
    validate_polytope(make_polytope(2, {pt({1, 0}), pt({2, 0}), pt({0, 1}), pt({-1, -1})},
                                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.issue == ValidationIssue::DegenerateFacet);
  }
  // Wrong facet arity.
  try {
    validate_polytope(make_polytope(2, {pt({1, 0}), pt({0, 1}), pt({-1, -1})}, {{0, 1, 2}}));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.issue == ValidationIssue::NonSimplicialFacet);
  }
  // Missing facet: the fan does not close up.
  try {
    validate_polytope(make_polytope(2, {pt({1, 0}), pt({0, 1}), pt({-1, -1})}, {{0, 1}, {1, 2}}));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.issue == ValidationIssue::NotConvexPosition);
  }
  // Duplicate vertex.
  CHECK_THROWS_AS(validate_polytope(
                      make_simplex({pt({1, 0}), pt({1, 0}), pt({-1, -1})})),
                  ValidationError);
}

TEST_CASE("cross-polytopes") {
  for (int n = 2; n <= 4; ++n) {
    Polytope p = cross_polytope(n);
    CHECK(p.validated);
    CHECK(normalized_volume(p) == Int(1) << n);
    CHECK(is_reflexive(p));
    for (const Int& level : p.facet_levels) CHECK(level == 1);
  }
}

TEST_CASE("newton function") {
  Polytope p = cross_polytope(2);
  CHECK(newton_value(p, pt({0, 0})) == 0);
  CHECK(newton_value(p, pt({1, 0})) == 1);
  CHECK(newton_value(p, pt({1, 1})) == 2);
  CHECK(newton_value(p, pt({-3, 2})) == 5);

  Polytope s = validate_polytope(make_simplex({pt({1, 0}), pt({0, 1}), pt({-1, -1})}));
  CHECK(newton_value(s, pt({2, 1})) == 3);    // 2 e1 + e2 on the cone of the facet {e1, e2}
  CHECK(newton_value(s, pt({-2, -2})) == 2);  // multiple of the third vertex
}

TEST_CASE("face enumeration") {
  Polytope s = validate_polytope(make_simplex({pt({1, 0}), pt({0, 1}), pt({-1, -1})}));
  auto faces = enumerate_faces(s);
  CHECK(faces.size() == 6);  // 3 vertices + 3 edges
  CHECK(faces[0].dim == 1);
  CHECK(faces.back().dim == 2);

  // A 5-simplex boundary has 2^6 - 2 = 62 nonempty proper faces.
  std::vector<LatticePoint> vs;
  for (int i = 0; i < 5; ++i) {
    LatticePoint v(5, Int(0));
    v[static_cast<std::size_t>(i)] = 1;
    vs.push_back(std::move(v));
  }
  vs.push_back(pt({-2, -2, -3, -3, -3}));
  Polytope big = validate_polytope(make_simplex(std::move(vs)));
  CHECK(enumerate_faces(big).size() == 62);
}

TEST_CASE("weights of a realized simplex") {
  WeightRealization real = realize_weights({5, 3, 2});
  CHECK(real.vertex_weights == std::vector<Int>{2, 3, 5});
  CHECK(real.polytope.validated);
  CHECK(normalized_volume(real.polytope) == 10);
  CHECK(vertex_weights(real.polytope) == std::vector<Int>{2, 3, 5});

  // The weight relation: sum of q_i * b_i = 0.
  for (int r = 0; r < 2; ++r) {
    Int acc = 0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += real.vertex_weights[i] * real.polytope.vertices[i][static_cast<std::size_t>(r)];
    CHECK(acc == 0);
  }
}

TEST_CASE("realizations for assorted weight tuples") {
  for (const std::vector<Int>& q :
       {std::vector<Int>{1, 1, 1}, {1, 2, 2, 3, 3, 3}, {1, 2, 3, 4, 7, 11}, {1, 5, 12, 12, 30},
        {2, 2, 2}, {2, 3, 5, 7}, {4, 6, 9}}) {
    WeightRealization real = realize_weights(q);
    Int mu = 0;
    for (const Int& qi : q) mu += qi;
    CHECK(normalized_volume(real.polytope) == mu);
    CHECK(vertex_weights(real.polytope) == real.vertex_weights);
  }
}

TEST_CASE("reflexivity by weight divisibility") {
  CHECK(is_reflexive(realize_weights({1, 1, 2}).polytope));       // 4 divisible by all
  CHECK(is_reflexive(realize_weights({1, 5, 12, 12, 30}).polytope));
  CHECK_FALSE(is_reflexive(realize_weights({1, 2, 2}).polytope));  // 5 not divisible by 2
  CHECK_FALSE(is_reflexive(realize_weights({1, 2, 2, 3, 3, 3}).polytope));
}

TEST_CASE("weight helpers reject non-simplices") {
  Polytope p = cross_polytope(2);
  CHECK_THROWS_AS(simplex_weights(p), std::invalid_argument);
  CHECK_THROWS_AS(vertex_weights(p), std::invalid_argument);
  CHECK_THROWS_AS(realize_weights({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(realize_weights({3}), std::invalid_argument);
}
