#pragma once

#include "polyhodge/sectors.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace polyhodge {

// The spectrum at infinity: the multiset of orbifold degrees, each degree
// alpha repeated dim H^{2 alpha} times. Stored sorted ascending.
struct Spectrum {
  std::vector<Rational> values;
};

Spectrum spectrum(const std::vector<Sector>& sectors);

// Size of the spectrum; equals the normalized volume of the polytope.
Int milnor_number(const std::vector<Sector>& sectors);

// Jordan type of the log of the unipotent part of monodromy: each sector
// contributes, for k = 0..floor(dim/2), betti[k]-betti[k-1] blocks of size
// dim-2k+1 whose primitive generator sits in degree age+k. Blocks with equal
// (value, size) are aggregated; ordered by size descending, value ascending.
struct JordanBlock {
  Rational primitive_value;
  int size = 0;
  long long multiplicity = 0;
};
struct JordanType {
  std::vector<JordanBlock> blocks;
};

JordanType jordan_type(const std::vector<Sector>& sectors);

class UnpairedBlockError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The duality pairing at block level: (a, s) pairs with (n - a - (s-1), s).
// Returns index pairs into jordan.blocks (self-pairs allowed). Throws
// UnpairedBlockError when a partner of matching size/multiplicity is missing.
struct BlockPairing {
  std::vector<std::pair<int, int>> pairs;
};

BlockPairing block_pairing(const JordanType& jordan, int n);

}  // namespace polyhodge
