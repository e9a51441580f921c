#include "polyhodge/sectors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyhodge {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// h-vector of the star of a face: with d_j the number of faces of dimension
// |support|+j containing the support (d_0 = 1), expand
// sum_j d_j (t-1)^{m-j} = sum_k h_k t^{m-k}. The h_k are the even Betti
// numbers of the corresponding complete simplicial quotient fan.
std::vector<long long> star_h_vector(const std::vector<Face>& faces,
                                     const std::vector<int>& support, int n) {
  const int m = n - static_cast<int>(support.size());
  std::vector<long long> d(static_cast<std::size_t>(m) + 1, 0);
  d[0] = 1;
  for (const Face& f : faces) {
    int j = f.dim - static_cast<int>(support.size());
    if (j < 1 || j > m) continue;
    if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(),
                      support.begin(), support.end()))
      d[static_cast<std::size_t>(j)]++;
  }
  std::vector<long long> coeff(static_cast<std::size_t>(m) + 1, 0);  // of t^e
  for (int j = 0; j <= m; ++j) {
    if (d[static_cast<std::size_t>(j)] == 0) continue;
    for (int e = 0; e <= m - j; ++e) {
      long long term = d[static_cast<std::size_t>(j)] * binomial(m - j, e);
      if ((m - j - e) % 2 != 0) term = -term;
      coeff[static_cast<std::size_t>(e)] += term;
    }
  }
  std::vector<long long> h(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) h[static_cast<std::size_t>(k)] = coeff[static_cast<std::size_t>(m - k)];
  return h;
}

IntMatrix facet_matrix(const Polytope& p, const std::vector<int>& facet) {
  std::vector<LatticePoint> cols;
  cols.reserve(facet.size());
  for (int i : facet) cols.push_back(p.vertices[static_cast<std::size_t>(i)]);
  return IntMatrix::from_columns(cols);
}

bool sector_order(const Sector& a, const Sector& b) {
  if (a.age != b.age) return a.age < b.age;
  if (a.box.has_value() != b.box.has_value()) return !a.box.has_value();
  if (!a.box) return false;
  return lex_less(a.box->point, b.box->point);
}

}  // namespace

std::vector<Sector> enumerate_sectors(const Polytope& p) {
  if (!p.validated) throw std::logic_error("enumerate_sectors: polytope must be validated");
  const int n = p.n;
  const auto faces = enumerate_faces(p);

  // Walk each facet's half-open parallelepiped; a nonzero point with
  // coefficient support S is precisely a box element of the face S.
  std::map<LatticePoint, BoxElement> boxes;
  for (const auto& facet : p.facets) {
    for (auto& pp : half_open_parallelepiped(facet_matrix(p, facet))) {
      std::vector<int> support;
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < facet.size(); ++i) {
        if (pp.coefficients[i] != 0) {
          support.push_back(facet[i]);
          coeffs.push_back(pp.coefficients[i]);
        }
      }
      if (support.empty()) continue;  // the origin
      boxes.emplace(pp.point,
                    BoxElement{pp.point, Face{support, static_cast<int>(support.size())}, coeffs});
    }
  }

  std::vector<Sector> sectors;
  sectors.reserve(boxes.size() + 1);
  sectors.push_back({std::nullopt, Rational(0), n, star_h_vector(faces, {}, n), 0});
  for (auto& [point, box] : boxes) {
    Sector s;
    s.age = 0;
    for (const Rational& c : box.coefficients) s.age += c;
    s.dim = n - box.support.dim;
    s.betti = star_h_vector(faces, box.support.vertex_indices, n);
    s.box = box;
    sectors.push_back(std::move(s));
  }
  std::sort(sectors.begin(), sectors.end(), sector_order);

  std::map<LatticePoint, int> index_of;
  for (std::size_t i = 0; i < sectors.size(); ++i)
    if (sectors[i].box) index_of[sectors[i].box->point] = static_cast<int>(i);
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    Sector& s = sectors[i];
    if (!s.box) { s.inverse = static_cast<int>(i); continue; }
    LatticePoint partner(static_cast<std::size_t>(n), Int(0));
    std::vector<Rational> acc(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < s.box->support.vertex_indices.size(); ++j) {
      const LatticePoint& b = p.vertices[static_cast<std::size_t>(s.box->support.vertex_indices[j])];
      Rational c = Rational(1) - s.box->coefficients[j];
      for (int r = 0; r < n; ++r) acc[static_cast<std::size_t>(r)] += c * Rational(b[static_cast<std::size_t>(r)]);
    }
    for (int r = 0; r < n; ++r) {
      if (!is_integral(acc[static_cast<std::size_t>(r)]))
        throw std::logic_error("enumerate_sectors: involution point is not integral");
      partner[static_cast<std::size_t>(r)] = numerator(acc[static_cast<std::size_t>(r)]);
    }
    auto it = index_of.find(partner);
    if (it == index_of.end())
      throw std::logic_error("enumerate_sectors: involution partner missing");
    s.inverse = it->second;
  }
  return sectors;
}

const Sector& involution(const Sector& s, const std::vector<Sector>& all) {
  for (const Sector& cand : all) {
    bool same = s.box.has_value() == cand.box.has_value() &&
                (!s.box || s.box->point == cand.box->point);
    if (same) return all[static_cast<std::size_t>(cand.inverse)];
  }
  throw std::logic_error("involution: sector not found in list");
}

std::vector<long long> sector_betti(const Polytope& p, const Sector& s) {
  static const std::vector<int> kEmpty;
  const auto faces = enumerate_faces(p);
  return star_h_vector(faces, s.box ? s.box->support.vertex_indices : kEmpty, p.n);
}

std::map<Rational, long long> graded_dims(const std::vector<Sector>& sectors) {
  std::map<Rational, long long> out;
  for (const Sector& s : sectors) {
    for (int k = 0; k <= s.dim; ++k) {
      long long b = s.betti[static_cast<std::size_t>(k)];
      if (b != 0) out[s.age + k] += b;
    }
  }
  return out;
}

WpsLabelSet wps_label_set(const SimplexWeights& w) {
  if (!is_reduced(w)) throw NotReducedError("weight tuple is not reduced");
  std::set<Rational> label_set;
  for (const Int& qi : w.q) {
    for (Int j = 0; j < qi; ++j) label_set.insert(Rational(j, qi));
  }
  WpsLabelSet out;
  out.labels.assign(label_set.begin(), label_set.end());
  for (const Rational& f : out.labels) {
    std::vector<int> members;
    for (std::size_t i = 0; i < w.q.size(); ++i) {
      if (is_integral(f * Rational(w.q[i]))) members.push_back(static_cast<int>(i));
    }
    out.d.push_back(static_cast<int>(members.size()));
    out.members.push_back(std::move(members));
  }
  return out;
}

std::vector<WpsSector> wps_sector_table(const SimplexWeights& w) {
  WpsLabelSet ls = wps_label_set(w);
  std::vector<WpsSector> out;
  out.reserve(ls.labels.size());
  for (std::size_t k = 0; k < ls.labels.size(); ++k) {
    WpsSector s;
    s.label = ls.labels[k];
    for (const Int& qi : w.q) s.age += fractional_part(-s.label * Rational(qi));
    s.dim = ls.d[k] - 1;
    Rational partner = fractional_part(Rational(1) - s.label);
    auto it = std::lower_bound(ls.labels.begin(), ls.labels.end(), partner);
    s.inverse = static_cast<int>(it - ls.labels.begin());
    out.push_back(std::move(s));
  }
  return out;
}

LatticePoint wps_box_point(const Polytope& realized, const std::vector<Int>& weights,
                           const Rational& label) {
  if (weights.size() != realized.vertices.size())
    throw std::invalid_argument("wps_box_point: one weight per vertex required");
  const int n = realized.n;
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Rational c = fractional_part(-label * Rational(weights[i]));
    if (c == 0) continue;
    for (int r = 0; r < n; ++r)
      acc[static_cast<std::size_t>(r)] += c * Rational(realized.vertices[i][static_cast<std::size_t>(r)]);
  }
  LatticePoint out(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (!is_integral(acc[static_cast<std::size_t>(r)]))
      throw std::logic_error("wps_box_point: label does not name a lattice point");
    out[static_cast<std::size_t>(r)] = numerator(acc[static_cast<std::size_t>(r)]);
  }
  return out;
}

}  // namespace polyhodge
