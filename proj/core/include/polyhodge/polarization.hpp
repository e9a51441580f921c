#pragma once

#include "polyhodge/sectors.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polyhodge {

// Dimensions of the primitive (new) classes under the Lefschetz operator,
// per weight-parity part: the integral-age part is centered at r = n, the
// fractional-age part at r = n-1. Entry nu records dim P_{r+nu} together
// with its split by Hodge index p.
struct PrimitiveEntry {
  int nu = 0;
  long long dim = 0;
  std::map<int, long long> hodge_split;  // p -> dim, summing to dim
};
struct PrimitivePart {
  int r = 0;
  std::vector<PrimitiveEntry> entries;  // nu ascending, only nonzero dims
};
struct PrimitiveReport {
  PrimitivePart integral, fractional;
};

PrimitiveReport primitive_dims(const std::vector<Sector>& sectors, int n);

// The Hodge split of one primitive space P_{r+nu} of the chosen part.
std::map<int, long long> primitive_hodge_split(const std::vector<Sector>& sectors, int n,
                                               bool fractional_part, int nu);

// A positive rational multiple of a power of 2*pi, written
// rational_part * (2*pi)^{two_pi_exponent}.
struct TwoPiValue {
  Rational rational_part;
  int two_pi_exponent = 0;
};

// For a reduced weight tuple and a label f in F: mu^{n_f} / prod_{i in S_f} q_i,
// the orbifold self-pairing normalization of the sector's fundamental class.
// Throws std::invalid_argument when the label is not in F.
Rational orbifold_integral(const SimplexWeights& w, const Rational& label);

// The polarization value of the sector's primitive generator:
// orbifold_integral * (2*pi)^{-(r - n_f)} with r = n for integral age,
// r = n-1 for fractional age. Always positive.
TwoPiValue h_value(const SimplexWeights& w, const Rational& label);

struct LabelHValue {
  Rational label;
  TwoPiValue value;
};

// Aggregated polarization evidence: primitive dimensions with Hodge splits,
// the Lefschetz reassembly of the weight graded pieces (reassembly for
// m >= r, mirror symmetry below the center), split consistency, and, for
// reduced weight tuples, the per-label h-values with their positivity.
struct PolarizationReport {
  PrimitiveReport primitive;
  std::vector<LabelHValue> h_values;  // empty unless weights were supplied
  bool lefschetz_reassembly_ok = false;
  bool splits_consistent = false;
  bool h_values_positive = false;  // vacuously true without weights
  bool pass = false;
};

PolarizationReport polarization_report(const std::vector<Sector>& sectors, int n,
                                       const std::optional<SimplexWeights>& weights);

}  // namespace polyhodge
