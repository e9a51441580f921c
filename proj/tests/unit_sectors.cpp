#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyhodge/sectors.hpp"

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
  std::vector<std::vector<int>> facets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i) f.push_back(2 * i + ((mask >> i) & 1));
    facets.push_back(std::move(f));
  }
  return validate_polytope(make_polytope(n, std::move(vertices), std::move(facets)));
}

}  // namespace

TEST_CASE("sectors of the (1,2,2,3,3,3) simplex") {
  WeightRealization real = realize_weights({1, 2, 2, 3, 3, 3});
  auto sectors = enumerate_sectors(real.polytope);
  REQUIRE(sectors.size() == 4);

  CHECK_FALSE(sectors[0].box.has_value());
  CHECK(sectors[0].age == 0);
  CHECK(sectors[0].dim == 5);
  CHECK(sectors[0].betti == std::vector<long long>{1, 1, 1, 1, 1, 1});
  CHECK(sectors[0].inverse == 0);

  // Canonical order is by age: 4/3, 5/3, 2.
  CHECK(sectors[1].age == Rational(4, 3));
  CHECK(sectors[1].dim == 2);
  CHECK(sectors[1].betti == std::vector<long long>{1, 1, 1});
  CHECK(sectors[2].age == Rational(5, 3));
  CHECK(sectors[2].dim == 2);
  CHECK(sectors[3].age == Rational(2));
  CHECK(sectors[3].dim == 1);
  CHECK(sectors[3].betti == std::vector<long long>{1, 1});

  CHECK(sectors[1].inverse == 2);
  CHECK(sectors[2].inverse == 1);
  CHECK(sectors[3].inverse == 3);

  const Sector& partner = involution(sectors[1], sectors);
  CHECK(partner.age == Rational(5, 3));

  // Age equation through the involution.
  for (const Sector& s : sectors)
    CHECK(s.age + sectors[static_cast<std::size_t>(s.inverse)].age + s.dim == 5);
}

TEST_CASE("cross-polytopes have only the untwisted sector") {
  const std::vector<std::vector<long long>> expected = {
      {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
  for (int n = 2; n <= 4; ++n) {
    auto sectors = enumerate_sectors(cross_polytope(n));
    REQUIRE(sectors.size() == 1);
    CHECK_FALSE(sectors[0].box.has_value());
    CHECK(sectors[0].betti == expected[static_cast<std::size_t>(n - 2)]);
  }
}

TEST_CASE("graded dimensions") {
  WeightRealization real = realize_weights({1, 2, 2, 3, 3, 3});
  auto gd = graded_dims(enumerate_sectors(real.polytope));
  CHECK(gd.at(Rational(0)) == 1);
  CHECK(gd.at(Rational(2)) == 2);  // untwisted degree 2 plus the age-2 sector
  CHECK(gd.at(Rational(4, 3)) == 1);
  CHECK(gd.at(Rational(7, 3)) == 1);
  CHECK(gd.at(Rational(5)) == 1);
  Int total = 0;
  for (const auto& [alpha, d] : gd) total += d;
  CHECK(total == 14);
}

TEST_CASE("label set of (1,2,2,3,3,3)") {
  SimplexWeights w{{1, 2, 2, 3, 3, 3}, 14};
  WpsLabelSet labels = wps_label_set(w);
  REQUIRE(labels.labels.size() == 4);
  CHECK(labels.labels == std::vector<Rational>{0, Rational(1, 3), Rational(1, 2), Rational(2, 3)});
  CHECK(labels.d == std::vector<int>{6, 3, 2, 3});
  CHECK(labels.members[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(labels.members[1] == std::vector<int>{3, 4, 5});
  CHECK(labels.members[2] == std::vector<int>{1, 2});
  CHECK(labels.members[3] == std::vector<int>{3, 4, 5});
}

TEST_CASE("closed-form sector table") {
  SimplexWeights w{{1, 2, 2, 3, 3, 3}, 14};
  auto table = wps_sector_table(w);
  REQUIRE(table.size() == 4);
  CHECK(table[0].label == 0);
  CHECK(table[0].age == 0);
  CHECK(table[0].dim == 5);
  CHECK(table[0].inverse == 0);
  CHECK(table[1].label == Rational(1, 3));
  CHECK(table[1].age == Rational(4, 3));
  CHECK(table[1].dim == 2);
  CHECK(table[1].inverse == 3);
  CHECK(table[2].label == Rational(1, 2));
  CHECK(table[2].age == Rational(2));
  CHECK(table[2].dim == 1);
  CHECK(table[2].inverse == 2);
  CHECK(table[3].label == Rational(2, 3));
  CHECK(table[3].age == Rational(5, 3));
  CHECK(table[3].dim == 2);
  CHECK(table[3].inverse == 1);
}

TEST_CASE("box points named by labels") {
  WeightRealization real = realize_weights({1, 2, 2, 3, 3, 3});
  SimplexWeights w{{1, 2, 2, 3, 3, 3}, 14};
  auto sectors = enumerate_sectors(real.polytope);
  for (const WpsSector& s : wps_sector_table(w)) {
    if (s.label == 0) continue;
    LatticePoint v = wps_box_point(real.polytope, real.vertex_weights, s.label);
    CHECK(newton_value(real.polytope, v) == s.age);
    bool found = false;
    for (const Sector& g : sectors)
      if (g.box && g.box->point == v) {
        found = true;
        CHECK(g.age == s.age);
        CHECK(g.dim == s.dim);
      }
    CHECK(found);
  }
}

TEST_CASE("non-reduced tuples are rejected by the label machinery") {
  SimplexWeights w{{2, 2, 2}, 6};
  CHECK_THROWS_AS(wps_label_set(w), NotReducedError);
  CHECK_THROWS_AS(wps_sector_table(w), NotReducedError);
}

TEST_CASE("sectors of a non-reduced simplex still enumerate geometrically") {
  // (2,2,2) is P^2 / (Z/2)^2: one box point on a ray and one on a facet.
  WeightRealization real = realize_weights({2, 2, 2});
  auto sectors = enumerate_sectors(real.polytope);
  Int mass = 0;
  for (const Sector& s : sectors)
    for (long long b : s.betti) mass += b;
  CHECK(mass == 6);
  REQUIRE(sectors.size() == 3);
  CHECK(sectors[0].age == 0);
  CHECK(sectors[1].age == Rational(1, 2));
  CHECK(sectors[1].dim == 1);
  CHECK(sectors[1].inverse == 1);  // self-inverse: 1/2 + 1/2 + 1 = 2
  CHECK(sectors[2].age == 1);
  CHECK(sectors[2].dim == 0);
  CHECK(sectors[2].inverse == 2);
}

TEST_CASE("sector betti matches the stored vector") {
  WeightRealization real = realize_weights({1, 2, 3, 4, 7, 11});
  auto sectors = enumerate_sectors(real.polytope);
  CHECK(sectors.size() == 22);
  for (const Sector& s : sectors) CHECK(sector_betti(real.polytope, s) == s.betti);
}
