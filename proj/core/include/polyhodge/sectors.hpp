#pragma once

#include "polyhodge/polytope.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polyhodge {

// A twisted-sector representative: a lattice point v = sum q_i b_i with every
// coefficient strictly between 0 and 1, supported on the face spanned by the
// listed vertices.
struct BoxElement {
  LatticePoint point;
  Face support;                        // global vertex indices, sorted
  std::vector<Rational> coefficients;  // one per support vertex, each in (0,1)
};

// One inertia sector. The untwisted sector has no box element, age 0,
// dim = n. For a twisted sector, dim = n - |support| and age is the sum of
// the box coefficients. betti[k] = dim H^{2k} of the sector piece, a
// palindromic vector of length dim+1.
struct Sector {
  std::optional<BoxElement> box;
  Rational age;
  int dim = 0;
  std::vector<long long> betti;
  int inverse = 0;  // index of the involution partner in the canonical list
};

// All sectors in canonical order: age ascending, ties by lexicographic box
// point (the untwisted sector first). Inverse indices are resolved.
std::vector<Sector> enumerate_sectors(const Polytope& p);

// The partner sector carrying sum (1-q_i) b_i (the untwisted sector is its
// own partner). Throws std::logic_error if the partner is missing from `all`.
const Sector& involution(const Sector& s, const std::vector<Sector>& all);

// Betti vector of one sector: the h-vector of the star of its support face
// (the full fan for the untwisted sector).
std::vector<long long> sector_betti(const Polytope& p, const Sector& s);

// Graded dimensions of total orbifold cohomology: degree alpha -> dim H^{2 alpha},
// where each sector contributes betti[k] in degree age + k.
std::map<Rational, long long> graded_dims(const std::vector<Sector>& sectors);

// ---- Closed forms for weighted projective spaces (reduced weight tuples) ----

class NotReducedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The label set F = { j/q_i : 0 <= j < q_i } with, for each label f, the
// member index set S_f = { i : q_i * f integral } and its size d_f.
struct WpsLabelSet {
  std::vector<Rational> labels;          // ascending, starts at 0
  std::vector<int> d;                    // d[k] = |S_{labels[k]}|
  std::vector<std::vector<int>> members; // S_{labels[k]} as weight indices
};
WpsLabelSet wps_label_set(const SimplexWeights& w);

// Sector table computed from the weights alone: ages via the running-sum
// formula i_{f_k} = d_1 + ... + d_{k-1} - mu * f_k (equivalently
// sum_i frac(-f q_i)), dims d_f - 1, Betti vectors all ones, and the
// involution f -> (1 - f) mod 1.
struct WpsSector {
  Rational label;
  Rational age;
  int dim = 0;
  int inverse = 0;  // index into the label-ordered table
};
std::vector<WpsSector> wps_sector_table(const SimplexWeights& w);

// The box element the label f names in a concrete realization:
// sum_i frac(-f w_i) b_i, where w_i is the weight of vertex b_i.
LatticePoint wps_box_point(const Polytope& realized, const std::vector<Int>& vertex_weights,
                           const Rational& label);

}  // namespace polyhodge
