#include "polyhodge/polarization.hpp"

#include "polyhodge/hodge.hpp"

#include <algorithm>
#include <map>

namespace polyhodge {

namespace {

// nu -> (dim, hodge split) for the chosen parity part.
std::map<int, PrimitiveEntry> part_entries(const std::vector<Sector>& sectors, int n,
                                           bool fractional) {
  const int r = fractional ? n - 1 : n;
  std::map<int, PrimitiveEntry> entries;
  for (const Sector& s : sectors) {
    if (is_integral(s.age) == fractional) continue;
    const int fl = static_cast<int>(rational_floor(s.age).convert_to<long long>());
    for (int k = 0; 2 * k <= s.dim; ++k) {
      long long mult = s.betti[static_cast<std::size_t>(k)] -
                       (k > 0 ? s.betti[static_cast<std::size_t>(k - 1)] : 0);
      if (mult <= 0) continue;
      const int nu = s.dim - 2 * k;
      PrimitiveEntry& e = entries[nu];
      e.nu = nu;
      e.dim += mult;
      e.hodge_split[r - fl - k] += mult;
    }
  }
  return entries;
}

PrimitivePart assemble_part(const std::vector<Sector>& sectors, int n, bool fractional) {
  PrimitivePart part;
  part.r = fractional ? n - 1 : n;
  for (auto& [nu, entry] : part_entries(sectors, n, fractional)) part.entries.push_back(entry);
  return part;
}

}  // namespace

PrimitiveReport primitive_dims(const std::vector<Sector>& sectors, int n) {
  return {assemble_part(sectors, n, false), assemble_part(sectors, n, true)};
}

std::map<int, long long> primitive_hodge_split(const std::vector<Sector>& sectors, int n,
                                               bool fractional_part, int nu) {
  auto entries = part_entries(sectors, n, fractional_part);
  auto it = entries.find(nu);
  return it == entries.end() ? std::map<int, long long>{} : it->second.hodge_split;
}

Rational orbifold_integral(const SimplexWeights& w, const Rational& label) {
  WpsLabelSet ls = wps_label_set(w);
  auto it = std::lower_bound(ls.labels.begin(), ls.labels.end(), label);
  if (it == ls.labels.end() || *it != label)
    throw std::invalid_argument("orbifold_integral: label is not in the label set");
  const std::size_t idx = static_cast<std::size_t>(it - ls.labels.begin());
  const int sector_dim = ls.d[idx] - 1;

  Rational value = 1;
  for (int i = 0; i < sector_dim; ++i) value *= Rational(w.mu);
  for (int i : ls.members[idx]) value /= Rational(w.q[static_cast<std::size_t>(i)]);
  return value;
}

TwoPiValue h_value(const SimplexWeights& w, const Rational& label) {
  WpsLabelSet ls = wps_label_set(w);
  auto it = std::lower_bound(ls.labels.begin(), ls.labels.end(), label);
  if (it == ls.labels.end() || *it != label)
    throw std::invalid_argument("h_value: label is not in the label set");
  const std::size_t idx = static_cast<std::size_t>(it - ls.labels.begin());
  const int n = static_cast<int>(w.q.size()) - 1;
  const int sector_dim = ls.d[idx] - 1;

  Rational age = 0;
  for (const Int& qi : w.q) age += fractional_part(-label * Rational(qi));
  const int r = is_integral(age) ? n : n - 1;

  TwoPiValue out;
  out.rational_part = orbifold_integral(w, label);
  out.two_pi_exponent = -(r - sector_dim);
  return out;
}

PolarizationReport polarization_report(const std::vector<Sector>& sectors, int n,
                                       const std::optional<SimplexWeights>& weights) {
  PolarizationReport report;
  report.primitive = primitive_dims(sectors, n);

  // Lefschetz reassembly: above the center of a part, the weight graded
  // pieces are sums of primitive dimensions; below it they mirror.
  auto wp = weight_filtration(sectors, n);
  report.lefschetz_reassembly_ok = true;
  for (int pass = 0; pass < 2; ++pass) {
    const bool fractional = pass == 1;
    const PrimitivePart& part = fractional ? report.primitive.fractional : report.primitive.integral;
    const auto& gr = fractional ? wp.gr_fractional : wp.gr_integral;
    auto dim_p = [&](int index) {  // index = r + nu
      for (const PrimitiveEntry& e : part.entries)
        if (part.r + e.nu == index) return e.dim;
      return 0LL;
    };
    for (int m = 0; m <= 2 * n; ++m) {
      long long expected;
      if (m >= part.r) {
        expected = 0;
        for (int idx = m; idx <= 2 * n; idx += 2) expected += dim_p(idx);
      } else {
        int mirror = 2 * part.r - m;
        expected = (mirror >= 0 && mirror <= 2 * n) ? gr.at(mirror) : 0;
      }
      if (gr.at(m) != expected) {
        report.lefschetz_reassembly_ok = false;
        break;
      }
    }
    if (!report.lefschetz_reassembly_ok) break;
  }

  report.splits_consistent = true;
  for (const PrimitivePart* part : {&report.primitive.integral, &report.primitive.fractional}) {
    for (const PrimitiveEntry& e : part->entries) {
      long long total = 0;
      for (const auto& [p, d] : e.hodge_split) total += d;
      if (total != e.dim) report.splits_consistent = false;
    }
  }

  report.h_values_positive = true;
  if (weights) {
    for (const Rational& label : wps_label_set(*weights).labels) {
      LabelHValue lv;
      lv.label = label;
      lv.value = h_value(*weights, label);
      if (lv.value.rational_part <= 0) report.h_values_positive = false;
      report.h_values.push_back(std::move(lv));
    }
  }

  report.pass = report.lefschetz_reassembly_ok && report.splits_consistent && report.h_values_positive;
  return report;
}

}  // namespace polyhodge
