#include "polyhodge/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace polyhodge {

bool operator==(const Face& a, const Face& b) {
  return a.vertex_indices == b.vertex_indices;
}

Polytope make_simplex(std::vector<LatticePoint> vertices) {
  if (vertices.empty()) throw std::invalid_argument("make_simplex: no vertices");
  const int n = static_cast<int>(vertices[0].size());
  if (static_cast<int>(vertices.size()) != n + 1)
    throw std::invalid_argument("make_simplex: need n+1 vertices");
  std::vector<std::vector<int>> facets;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != omit) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return make_polytope(n, std::move(vertices), std::move(facets));
}

Polytope make_polytope(int n, std::vector<LatticePoint> vertices,
                       std::vector<std::vector<int>> facets) {
  Polytope p;
  p.n = n;
  p.vertices = std::move(vertices);
  p.facets = std::move(facets);
  for (auto& f : p.facets) std::sort(f.begin(), f.end());
  std::sort(p.facets.begin(), p.facets.end());
  p.facets.erase(std::unique(p.facets.begin(), p.facets.end()), p.facets.end());
  return p;
}

namespace {

IntMatrix facet_matrix(const Polytope& p, const std::vector<int>& facet) {
  std::vector<LatticePoint> cols;
  cols.reserve(facet.size());
  for (int i : facet) cols.push_back(p.vertices.at(static_cast<std::size_t>(i)));
  return IntMatrix::from_columns(cols);
}

Int vector_gcd(const LatticePoint& v) {
  Int g = 0;
  for (const Int& e : v) g = gcd(g, e);
  return g;
}

}  // namespace

Polytope validate_polytope(Polytope p) {
  const int n = p.n;
  if (n < 1) throw ValidationError(ValidationIssue::DegenerateFacet, "dimension must be >= 1");
  if (static_cast<int>(p.vertices.size()) < n + 1)
    throw ValidationError(ValidationIssue::NotConvexPosition,
                          "need at least n+1 vertices for a full-dimensional polytope");
  for (const auto& v : p.vertices) {
    if (static_cast<int>(v.size()) != n)
      throw ValidationError(ValidationIssue::NotConvexPosition, "vertex of wrong dimension");
  }
  {
    auto sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError(ValidationIssue::NotConvexPosition, "duplicate vertices");
  }
  if (p.facets.empty())
    throw ValidationError(ValidationIssue::NonSimplicialFacet, "no facets given");

  for (const auto& f : p.facets) {
    if (static_cast<int>(f.size()) != n)
      throw ValidationError(ValidationIssue::NonSimplicialFacet,
                            "facet must have exactly n vertices");
    for (int i : f) {
      if (i < 0 || i >= static_cast<int>(p.vertices.size()))
        throw ValidationError(ValidationIssue::NonSimplicialFacet, "facet index out of range");
    }
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ValidationError(ValidationIssue::NonSimplicialFacet, "repeated vertex in facet");
  }

  const bool simplex_auto = static_cast<int>(p.vertices.size()) == n + 1 &&
                            static_cast<int>(p.facets.size()) == n + 1;

  p.facet_normals.clear();
  p.facet_levels.clear();
  for (const auto& facet : p.facets) {
    IntMatrix b = facet_matrix(p, facet);
    if (det(b) == 0)
      throw ValidationError(ValidationIssue::DegenerateFacet,
                            "facet vertices are linearly dependent");

    // The hyperplane through the facet: solve b^T a = (1,...,1), then clear
    // denominators to a primitive integer normal.
    IntMatrix bt(b.cols(), b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) bt.at(c, r) = b.at(r, c);
    LatticePoint ones(static_cast<std::size_t>(n), Int(1));
    auto sol = solve_rational(bt, ones);
    if (!sol) throw std::logic_error("validate_polytope: hyperplane solve failed");
    Int common = 1;
    for (const Rational& e : *sol) common = lcm(common, denominator(e));
    LatticePoint normal(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      normal[static_cast<std::size_t>(i)] =
          numerator((*sol)[static_cast<std::size_t>(i)]) *
          (common / denominator((*sol)[static_cast<std::size_t>(i)]));
    Int g = vector_gcd(normal);
    for (auto& e : normal) e /= g;
    Int level = 0;
    for (int i = 0; i < n; ++i)
      level += normal[static_cast<std::size_t>(i)] * p.vertices[static_cast<std::size_t>(facet[0])][static_cast<std::size_t>(i)];

    // Orient so the rest of the polytope lies strictly on the < level side.
    int below = 0, above = 0;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
      if (std::binary_search(facet.begin(), facet.end(), static_cast<int>(vi))) continue;
      Int value = 0;
      for (int i = 0; i < n; ++i)
        value += normal[static_cast<std::size_t>(i)] * p.vertices[vi][static_cast<std::size_t>(i)];
      if (value == level) {
        throw ValidationError(ValidationIssue::NonSimplicialFacet,
                              "vertex lies on a facet hyperplane it does not belong to");
      }
      (value < level ? below : above)++;
    }
    if (below > 0 && above > 0)
      throw ValidationError(simplex_auto ? ValidationIssue::OriginNotInterior
                                         : ValidationIssue::NotConvexPosition,
                            "vertices on both sides of a facet hyperplane");
    if (above > 0) {
      for (auto& e : normal) e = -e;
      level = -level;
    }
    if (level <= 0)
      throw ValidationError(ValidationIssue::OriginNotInterior,
                            "origin is not strictly inside every facet halfspace");
    p.facet_normals.push_back(std::move(normal));
    p.facet_levels.push_back(std::move(level));
  }

  // Every vertex must support at least one facet, else it is interior to the
  // hull and the list is not in convex position.
  {
    std::vector<char> used(p.vertices.size(), 0);
    for (const auto& f : p.facets)
      for (int i : f) used[static_cast<std::size_t>(i)] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end())
      throw ValidationError(ValidationIssue::NotConvexPosition,
                            "vertex not contained in any facet");
  }

  // Pseudo-manifold condition: each ridge is shared by exactly two facets.
  // Together with the side tests this certifies the facet fan is complete.
  if (n >= 2) {
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& f : p.facets) {
      for (std::size_t omit = 0; omit < f.size(); ++omit) {
        std::vector<int> ridge;
        ridge.reserve(f.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != omit) ridge.push_back(f[i]);
        ridge_count[ridge]++;
      }
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 2)
        throw ValidationError(ValidationIssue::NotConvexPosition,
                              "facet fan is not closed along a ridge");
    }
  }

  p.validated = true;
  return p;
}

std::vector<Int> vertex_weights(const Polytope& p) {
  const int n = p.n;
  if (static_cast<int>(p.vertices.size()) != n + 1)
    throw std::invalid_argument("vertex_weights: polytope is not a simplex");
  std::vector<Int> w;
  w.reserve(p.vertices.size());
  for (std::size_t omit = 0; omit < p.vertices.size(); ++omit) {
    std::vector<LatticePoint> cols;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      if (i != omit) cols.push_back(p.vertices[i]);
    w.push_back(abs(det(IntMatrix::from_columns(cols))));
  }
  return w;
}

SimplexWeights simplex_weights(const Polytope& p) {
  SimplexWeights out;
  out.q = vertex_weights(p);
  std::sort(out.q.begin(), out.q.end());
  out.mu = 0;
  for (const Int& qi : out.q) {
    if (qi == 0) throw std::invalid_argument("simplex_weights: degenerate simplex");
    out.mu += qi;
  }
  return out;
}

bool is_reduced(const SimplexWeights& w) {
  Int g = 0;
  for (const Int& qi : w.q) g = gcd(g, qi);
  return g == 1;
}

bool is_reflexive(const Polytope& p) {
  if (static_cast<int>(p.vertices.size()) == p.n + 1) {
    SimplexWeights w = simplex_weights(p);
    for (const Int& qi : w.q)
      if (w.mu % qi != 0) return false;
    return true;
  }
  if (!p.validated) throw std::logic_error("is_reflexive: polytope must be validated");
  for (const Int& level : p.facet_levels)
    if (level != 1) return false;
  return true;
}

Rational newton_value(const Polytope& p, const LatticePoint& v) {
  if (!p.validated) throw std::logic_error("newton_value: polytope must be validated");
  if (static_cast<int>(v.size()) != p.n)
    throw std::invalid_argument("newton_value: point of wrong dimension");
  for (const auto& facet : p.facets) {
    auto q = solve_rational(facet_matrix(p, facet), v);
    if (!q) continue;
    bool nonneg = true;
    Rational total = 0;
    for (const Rational& qi : *q) {
      if (qi < 0) { nonneg = false; break; }
      total += qi;
    }
    if (nonneg) return total;
  }
  throw std::logic_error("newton_value: point escapes every facet cone");
}

Int normalized_volume(const Polytope& p) {
  Int total = 0;
  for (const auto& facet : p.facets) total += abs(det(facet_matrix(p, facet)));
  return total;
}

std::vector<Face> faces_from_facets(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> subsets;
  for (const auto& facet : facets) {
    const std::size_t m = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(facet[i]);
      subsets.insert(std::move(sub));
    }
  }
  std::vector<Face> faces;
  faces.reserve(subsets.size());
  for (const auto& s : subsets) faces.push_back({s, static_cast<int>(s.size())});
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return faces;
}

std::vector<Face> enumerate_faces(const Polytope& p) {
  return faces_from_facets(p.facets);
}

WeightRealization realize_weights(std::vector<Int> weights) {
  if (weights.size() < 2) throw std::invalid_argument("realize_weights: need at least two weights");
  for (const Int& w : weights)
    if (w <= 0) throw std::invalid_argument("realize_weights: weights must be positive");
  std::sort(weights.begin(), weights.end());

  const int n = static_cast<int>(weights.size()) - 1;
  Int g = 0;
  for (const Int& w : weights) g = gcd(g, w);
  std::vector<Int> reduced(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) reduced[i] = weights[i] / g;

  std::vector<LatticePoint> vertices;
  if (reduced[0] == 1) {
    // Canonical form conv(-(q_1..q_n), e_1, ..., e_n); vertex order matches
    // the ascending weights.
    LatticePoint neg(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) neg[static_cast<std::size_t>(i - 1)] = -reduced[static_cast<std::size_t>(i)];
    vertices.push_back(std::move(neg));
    for (int i = 1; i <= n; ++i) {
      LatticePoint e(static_cast<std::size_t>(n));
      e[static_cast<std::size_t>(i - 1)] = 1;
      vertices.push_back(std::move(e));
    }
  } else {
    // Unimodular completion: row-reduce the weight column to e_1 with
    // recorded row operations; the bottom n rows of the transform are the
    // vertex coordinates (signed maximal minors come out as +-q_i).
    const std::size_t m = weights.size();
    std::vector<Int> r = reduced;
    std::vector<LatticePoint> w(m, LatticePoint(m));
    for (std::size_t i = 0; i < m; ++i) w[i][i] = 1;
    while (true) {
      std::size_t nonzero = 0, last = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (r[i] != 0) { ++nonzero; last = i; }
      if (nonzero <= 1) {
        if (nonzero == 0 || r[last] != 1)
          throw std::logic_error("realize_weights: reduction did not reach gcd 1");
        std::swap(r[0], r[last]);
        std::swap(w[0], w[last]);
        break;
      }
      std::size_t pivot = 0;
      Int best = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (r[i] != 0 && (best == 0 || r[i] < best)) { best = r[i]; pivot = i; }
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (j == pivot || r[j] == 0) continue;
        Int k = floor_div(r[j], r[pivot]);
        if (k == 0) continue;
        r[j] -= k * r[pivot];
        for (std::size_t c = 0; c < m; ++c) w[j][c] -= k * w[pivot][c];
      }
    }
    vertices.assign(m, LatticePoint(static_cast<std::size_t>(n)));
    for (std::size_t c = 0; c < m; ++c)
      for (int row = 0; row < n; ++row)
        vertices[c][static_cast<std::size_t>(row)] = w[static_cast<std::size_t>(row) + 1][c];
  }

  if (g > 1) {
    // A gcd g scales one coordinate, multiplying every maximal minor by g.
    for (auto& v : vertices) v[0] *= g;
  }

  WeightRealization out;
  out.polytope = validate_polytope(make_simplex(std::move(vertices)));
  out.vertex_weights = vertex_weights(out.polytope);
  if (out.vertex_weights != weights)
    throw std::logic_error("realize_weights: realized weights disagree with input");
  return out;
}

}  // namespace polyhodge
