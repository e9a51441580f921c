#pragma once

#include "polyhodge/lattice.hpp"
#include "polyhodge/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polyhodge {

// A face of the boundary complex, identified by its (sorted) vertex indices.
// dim is the dimension of the cone it spans, i.e. the number of vertices for
// simplicial polytopes.
struct Face {
  std::vector<int> vertex_indices;
  int dim = 0;
};

bool operator==(const Face& a, const Face& b);

enum class ValidationIssue {
  NonSimplicialFacet,
  OriginNotInterior,
  DegenerateFacet,
  NotConvexPosition,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationIssue issue, const std::string& message)
      : std::runtime_error(message), issue(issue) {}
  ValidationIssue issue;
};

// A full-dimensional simplicial lattice polytope containing the origin in its
// interior, described by vertices and facet index sets. Validation fills in
// the primitive inner facet normals and their (positive) lattice levels.
struct Polytope {
  int n = 0;
  std::vector<LatticePoint> vertices;
  std::vector<std::vector<int>> facets;  // sorted index sets of size n

  bool validated = false;
  std::vector<LatticePoint> facet_normals;  // primitive, origin on the < level side
  std::vector<Int> facet_levels;            // all positive once validated
};

// Simplex with auto-generated facets (all n-subsets of the n+1 vertices).
Polytope make_simplex(std::vector<LatticePoint> vertices);

Polytope make_polytope(int n, std::vector<LatticePoint> vertices,
                       std::vector<std::vector<int>> facets);

// Checks simpliciality, convex position, completeness of the facet fan and
// strict interiority of the origin; returns the polytope with facet normal
// data attached. Throws ValidationError otherwise.
Polytope validate_polytope(Polytope p);

// Weight tuple of a simplex: q_i = |det(vertices omitting i)|, ascending.
struct SimplexWeights {
  std::vector<Int> q;  // sorted ascending, all positive
  Int mu;              // sum of the q_i = normalized volume
};

// Throws std::invalid_argument when p is not a simplex (vertex count != n+1).
SimplexWeights simplex_weights(const Polytope& p);

// Same weights but in vertex order (unsorted), one per vertex.
std::vector<Int> vertex_weights(const Polytope& p);

bool is_reduced(const SimplexWeights& w);

// Simplices: q_i | mu for every i. General polytopes: every facet's primitive
// inner normal sits at lattice level exactly 1.
bool is_reflexive(const Polytope& p);

// The piecewise-linear function that is 1 at every vertex and linear on each
// facet cone, evaluated at v (v may be any lattice point; rational value).
Rational newton_value(const Polytope& p, const LatticePoint& v);

// Sum over facets of |det| of the facet vertex matrix.
Int normalized_volume(const Polytope& p);

// All nonempty faces of the boundary complex: the distinct nonempty subsets
// of facet vertex sets, ordered by (dim, lexicographic indices).
std::vector<Face> enumerate_faces(const Polytope& p);
std::vector<Face> faces_from_facets(const std::vector<std::vector<int>>& facets);

// Realizes a positive integer weight tuple as a lattice simplex whose i-th
// vertex carries weight q_i (input is sorted ascending first). For reduced
// tuples with smallest weight 1 this is conv(e_1..e_n, -(q_1..q_n)); general
// reduced tuples go through a unimodular completion of the weight column, and
// a gcd g > 1 scales one coordinate of the reduced realization.
struct WeightRealization {
  Polytope polytope;              // validated
  std::vector<Int> vertex_weights;  // ascending, matching vertex order
};
WeightRealization realize_weights(std::vector<Int> weights);

}  // namespace polyhodge
