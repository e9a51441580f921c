#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyhodge/polarization.hpp"

#include <stdexcept>

using namespace polyhodge;

namespace {

struct Setup {
  std::vector<Sector> sectors;
  SimplexWeights weights;
};

Setup setup_for(const std::vector<Int>& q) {
  WeightRealization realized = realize_weights(q);
  return {enumerate_sectors(realized.polytope), simplex_weights(realized.polytope)};
}

}  // namespace

TEST_CASE("primitive dimensions of (1,2,2,3,3,3)") {
  Setup s = setup_for({1, 2, 2, 3, 3, 3});
  PrimitiveReport rep = primitive_dims(s.sectors, 5);

  CHECK(rep.integral.r == 5);
  REQUIRE(rep.integral.entries.size() == 2);
  CHECK(rep.integral.entries[0].nu == 1);
  CHECK(rep.integral.entries[0].dim == 1);
  CHECK(rep.integral.entries[0].hodge_split == std::map<int, long long>{{3, 1}});
  CHECK(rep.integral.entries[1].nu == 5);
  CHECK(rep.integral.entries[1].dim == 1);
  CHECK(rep.integral.entries[1].hodge_split == std::map<int, long long>{{5, 1}});

  CHECK(rep.fractional.r == 4);
  REQUIRE(rep.fractional.entries.size() == 1);
  CHECK(rep.fractional.entries[0].nu == 2);
  CHECK(rep.fractional.entries[0].dim == 2);
  CHECK(rep.fractional.entries[0].hodge_split == std::map<int, long long>{{3, 2}});
}

TEST_CASE("primitive split queries match the report") {
  Setup s = setup_for({1, 2, 2, 3, 3, 3});
  CHECK(primitive_hodge_split(s.sectors, 5, false, 1) == std::map<int, long long>{{3, 1}});
  CHECK(primitive_hodge_split(s.sectors, 5, false, 5) == std::map<int, long long>{{5, 1}});
  CHECK(primitive_hodge_split(s.sectors, 5, true, 2) == std::map<int, long long>{{3, 2}});
  CHECK(primitive_hodge_split(s.sectors, 5, true, 0).empty());
}

TEST_CASE("orbifold integrals of (1,2,2,3,3,3)") {
  Setup s = setup_for({1, 2, 2, 3, 3, 3});
  CHECK(orbifold_integral(s.weights, Rational(0)) == Rational(134456, 27));
  CHECK(orbifold_integral(s.weights, Rational(1, 3)) == Rational(196, 27));
  CHECK(orbifold_integral(s.weights, Rational(1, 2)) == Rational(7, 2));
  CHECK(orbifold_integral(s.weights, Rational(2, 3)) == Rational(196, 27));
  CHECK_THROWS_AS(orbifold_integral(s.weights, Rational(1, 5)), std::invalid_argument);
}

TEST_CASE("h-values of (1,2,2,3,3,3)") {
  Setup s = setup_for({1, 2, 2, 3, 3, 3});

  TwoPiValue untwisted = h_value(s.weights, Rational(0));
  CHECK(untwisted.rational_part == Rational(134456, 27));
  CHECK(untwisted.two_pi_exponent == 0);

  TwoPiValue third = h_value(s.weights, Rational(1, 3));
  CHECK(third.rational_part == Rational(196, 27));
  CHECK(third.two_pi_exponent == -2);

  TwoPiValue half = h_value(s.weights, Rational(1, 2));
  CHECK(half.rational_part == Rational(7, 2));
  CHECK(half.two_pi_exponent == -4);

  TwoPiValue two_thirds = h_value(s.weights, Rational(2, 3));
  CHECK(two_thirds.rational_part == Rational(196, 27));
  CHECK(two_thirds.two_pi_exponent == -2);
}

TEST_CASE("polarization report certificates") {
  for (const std::vector<Int>& q :
       {std::vector<Int>{1, 2, 2, 3, 3, 3}, {1, 2, 3, 4, 7, 11}, {1, 5, 12, 12, 30}}) {
    Setup s = setup_for(q);
    PolarizationReport rep =
        polarization_report(s.sectors, static_cast<int>(q.size()) - 1, s.weights);
    CHECK(rep.lefschetz_reassembly_ok);
    CHECK(rep.splits_consistent);
    CHECK(rep.h_values_positive);
    CHECK(rep.pass);
    CHECK(rep.h_values.size() == s.sectors.size());
    for (const LabelHValue& lv : rep.h_values) CHECK(lv.value.rational_part > 0);
  }
}

TEST_CASE("polarization report without weights") {
  // A cross-polytope is not a simplex, so no weight tuple: primitive data and
  // reassembly still apply, h-values are vacuous.
  Polytope cross2 = validate_polytope(make_polytope(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                                                    {{0, 2}, {2, 1}, {1, 3}, {3, 0}}));
  auto sectors = enumerate_sectors(cross2);
  PolarizationReport rep = polarization_report(sectors, 2, std::nullopt);
  CHECK(rep.h_values.empty());
  CHECK(rep.h_values_positive);
  CHECK(rep.lefschetz_reassembly_ok);
  CHECK(rep.pass);

  PrimitiveReport prim = rep.primitive;
  CHECK(prim.integral.r == 2);
  REQUIRE(prim.integral.entries.size() == 2);
  // Betti (1,2,1): one top primitive class and one extra middle class.
  CHECK(prim.integral.entries[0].nu == 0);
  CHECK(prim.integral.entries[0].dim == 1);
  CHECK(prim.integral.entries[1].nu == 2);
  CHECK(prim.integral.entries[1].dim == 1);
  CHECK(prim.fractional.entries.empty());
}
