#pragma once

#include "polyhodge/sectors.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyhodge {

// Hodge numbers of the orbifold mixed Hodge structure, split by whether the
// contributing sector has integral age (h0, weight-pure part centered at n)
// or fractional age (hneq0, centered at n-1). total = h0 + hneq0 entrywise.
// All three are (n+1) x (n+1), indexed [p][q].
struct HodgeTable {
  int n = 0;
  std::vector<std::vector<long long>> h0, hneq0, total;
};

HodgeTable hodge_numbers(const std::vector<Sector>& sectors, int n);

// Same table computed directly from a reduced weight tuple via the label
// counting formulas; must agree with hodge_numbers on the realization.
HodgeTable wps_hodge_numbers(const SimplexWeights& w);

// Hodge filtration dimensions: p -> dim F^p for p = 0..n+1, where
// dim F^{n-p} = sum of graded dims in degrees <= p. Decreasing, F^0 = mu,
// F^{n+1} = 0.
std::map<int, long long> hodge_filtration(const std::vector<Sector>& sectors, int n);

// Weight filtration dimensions, split into the part carried by integral-age
// sectors (pure weight center n) and fractional-age sectors (center n-1).
struct WeightProfile {
  std::map<int, long long> w_integral, w_fractional;    // m -> dim W_m
  std::map<int, long long> gr_integral, gr_fractional;  // m -> dim gr^W_m
  std::map<int, long long> gr_total;
};
WeightProfile weight_filtration(const std::vector<Sector>& sectors, int n);

// Hodge-Tate criterion: floor(age) == floor(inverse age) for every sector.
// On failure, reports the first violating sector in canonical order.
struct HodgeTateWitness {
  int sector_index = 0;
  Rational age, inverse_age;
};
struct HodgeTateResult {
  bool hodge_tate = false;
  std::optional<HodgeTateWitness> witness;
};
HodgeTateResult is_hodge_tate(const std::vector<Sector>& sectors);

// Hard Lefschetz: the powers of the Lefschetz operator are isomorphisms
// H^{2k} -> H^{2(n-k)} (integral degrees) and H^{2(beta+k)} -> H^{2(beta+n-1-k)}
// (within each fractional degree class). Since the operator preserves sectors
// this holds exactly when age == inverse age for every integral-age sector and
// floor(age) == floor(inverse age) for every fractional-age one -- the same
// condition as Hodge-Tate, tested here sector by sector.
bool hard_lefschetz_check(const std::vector<Sector>& sectors, int n);

// In the Hodge-Tate case the weight filtration is determined by the graded
// dims: dim W_{2k} = dim W_{2k+1} = sum of dims in degrees > n-k-1; with all
// ages integral additionally dim gr^W_{2(n-k)} = dim H^{2k}. The report says
// whether those identities hold (applicable=false when not Hodge-Tate).
struct HtWeightReport {
  bool applicable = false;
  bool filtration_matches = false;
  bool all_ages_integral = false;
  bool graded_matches = false;  // only meaningful when all_ages_integral
};
HtWeightReport ht_weight_description(const std::vector<Sector>& sectors, int n);

enum class DiamondPart { Total, IntegralAges, FractionalAges };

// 2n+1 text rows; row r lists h^{p,q} with p+q = r for increasing p, spaced
// so each row is centered (the classical diamond layout).
std::string render_diamond(const HodgeTable& t, DiamondPart which);

}  // namespace polyhodge
