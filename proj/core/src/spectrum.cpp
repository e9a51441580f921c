#include "polyhodge/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyhodge {

Spectrum spectrum(const std::vector<Sector>& sectors) {
  Spectrum out;
  for (const Sector& s : sectors) {
    for (int k = 0; k <= s.dim; ++k) {
      long long b = s.betti[static_cast<std::size_t>(k)];
      for (long long i = 0; i < b; ++i) out.values.push_back(s.age + k);
    }
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

Int milnor_number(const std::vector<Sector>& sectors) {
  return Int(spectrum(sectors).values.size());
}

JordanType jordan_type(const std::vector<Sector>& sectors) {
  // Aggregate by (value, size); each sector's h-vector increments produce the
  // primitive classes, and a primitive class born at Lefschetz level k spans
  // a block of size dim - 2k + 1.
  std::map<std::pair<Rational, int>, long long> agg;
  for (const Sector& s : sectors) {
    for (int k = 0; 2 * k <= s.dim; ++k) {
      long long mult = s.betti[static_cast<std::size_t>(k)] -
                       (k > 0 ? s.betti[static_cast<std::size_t>(k - 1)] : 0);
      if (mult <= 0) continue;
      agg[{s.age + k, s.dim - 2 * k + 1}] += mult;
    }
  }
  JordanType out;
  for (const auto& [key, mult] : agg)
    out.blocks.push_back({key.first, key.second, mult});
  std::sort(out.blocks.begin(), out.blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.primitive_value < b.primitive_value;
  });
  return out;
}

BlockPairing block_pairing(const JordanType& jordan, int n) {
  auto find_partner = [&](const JordanBlock& b) -> int {
    Rational target = Rational(n) - b.primitive_value - (b.size - 1);
    for (std::size_t j = 0; j < jordan.blocks.size(); ++j) {
      if (jordan.blocks[j].size == b.size && jordan.blocks[j].primitive_value == target)
        return static_cast<int>(j);
    }
    return -1;
  };

  BlockPairing out;
  for (std::size_t i = 0; i < jordan.blocks.size(); ++i) {
    int j = find_partner(jordan.blocks[i]);
    if (j < 0) {
      std::ostringstream msg;
      msg << "unpaired Jordan block (value " << jordan.blocks[i].primitive_value << ", size "
          << jordan.blocks[i].size << ")";
      throw UnpairedBlockError(msg.str());
    }
    if (jordan.blocks[static_cast<std::size_t>(j)].multiplicity != jordan.blocks[i].multiplicity) {
      std::ostringstream msg;
      msg << "Jordan block multiplicity mismatch between (value "
          << jordan.blocks[i].primitive_value << ", size " << jordan.blocks[i].size << ") and its dual";
      throw UnpairedBlockError(msg.str());
    }
    if (static_cast<std::size_t>(j) >= i) out.pairs.emplace_back(static_cast<int>(i), j);
  }
  return out;
}

}  // namespace polyhodge
