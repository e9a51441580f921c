#include "polyhodge/hodge.hpp"

#include <algorithm>
#include <sstream>

namespace polyhodge {

namespace {

std::vector<std::vector<long long>> zero_table(int n) {
  return std::vector<std::vector<long long>>(static_cast<std::size_t>(n) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
}

long long lookup(const std::map<Rational, long long>& dims, const Rational& key) {
  auto it = dims.find(key);
  return it == dims.end() ? 0 : it->second;
}

}  // namespace

HodgeTable hodge_numbers(const std::vector<Sector>& sectors, int n) {
  HodgeTable t;
  t.n = n;
  t.h0 = zero_table(n);
  t.hneq0 = zero_table(n);
  t.total = zero_table(n);
  for (const Sector& s : sectors) {
    const Rational& age = s.age;
    const Rational& inv_age = sectors[static_cast<std::size_t>(s.inverse)].age;
    const bool integral = is_integral(age);
    // q - p is the floor-age defect of the sector; the Betti index follows
    // from placing the sector's cohomology at Hodge index p.
    const Int fl_age = rational_floor(age);
    const Int fl_inv = rational_floor(inv_age);
    for (int p = 0; p <= n; ++p) {
      Int q = Int(p) + fl_age - fl_inv;
      if (q < 0 || q > n) continue;
      Int k = Int(s.dim) + fl_inv - p;
      if (k < 0 || k > s.dim) continue;
      long long b = s.betti[static_cast<std::size_t>(k.convert_to<long long>())];
      auto& target = integral ? t.h0 : t.hneq0;
      target[static_cast<std::size_t>(p)][static_cast<std::size_t>(q.convert_to<long long>())] += b;
    }
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      t.total[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          t.h0[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] +
          t.hneq0[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  return t;
}

HodgeTable wps_hodge_numbers(const SimplexWeights& w) {
  const int n = static_cast<int>(w.q.size()) - 1;
  auto table = wps_sector_table(w);
  HodgeTable t;
  t.n = n;
  t.h0 = zero_table(n);
  t.hneq0 = zero_table(n);
  t.total = zero_table(n);
  for (const WpsSector& s : table) {
    const Rational& age = s.age;
    const Rational& inv_age = table[static_cast<std::size_t>(s.inverse)].age;
    const Int fl_age = rational_floor(age);
    const Int fl_inv = rational_floor(inv_age);
    if (is_integral(age)) {
      // Count 1 at every (p, q) with q - p = age - inv_age, age <= n - p,
      // inv_age <= p.
      for (int p = 0; p <= n; ++p) {
        Int q = Int(p) + fl_age - fl_inv;
        if (q < 0 || q > n) continue;
        if (age <= n - p && inv_age <= p)
          t.h0[static_cast<std::size_t>(p)][static_cast<std::size_t>(q.convert_to<long long>())] += 1;
      }
    } else {
      for (int p = 0; p <= n; ++p) {
        Int q = Int(p) + fl_age - fl_inv;
        if (q < 0 || q > n) continue;
        if (fl_age <= n - 1 - p && fl_inv <= p)
          t.hneq0[static_cast<std::size_t>(p)][static_cast<std::size_t>(q.convert_to<long long>())] += 1;
      }
    }
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      t.total[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          t.h0[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] +
          t.hneq0[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  return t;
}

std::map<int, long long> hodge_filtration(const std::vector<Sector>& sectors, int n) {
  auto dims = graded_dims(sectors);
  std::map<int, long long> out;
  for (int p = 0; p <= n + 1; ++p) {
    long long total = 0;
    for (const auto& [alpha, d] : dims) {
      if (alpha <= n - p) total += d;
    }
    out[p] = total;
  }
  return out;
}

WeightProfile weight_filtration(const std::vector<Sector>& sectors, int n) {
  WeightProfile out;
  for (int m = 0; m <= 2 * n; ++m) {
    out.gr_integral[m] = 0;
    out.gr_fractional[m] = 0;
  }
  for (const Sector& s : sectors) {
    const int center = is_integral(s.age) ? n : n - 1;
    auto& gr = is_integral(s.age) ? out.gr_integral : out.gr_fractional;
    for (int k = 0; k <= s.dim; ++k) {
      long long b = s.betti[static_cast<std::size_t>(k)];
      if (b == 0) continue;
      int m = center + s.dim - 2 * k;
      gr[m] += b;
    }
  }
  long long acc_i = 0, acc_f = 0;
  for (int m = 0; m <= 2 * n; ++m) {
    acc_i += out.gr_integral[m];
    acc_f += out.gr_fractional[m];
    out.w_integral[m] = acc_i;
    out.w_fractional[m] = acc_f;
    out.gr_total[m] = out.gr_integral[m] + out.gr_fractional[m];
  }
  return out;
}

HodgeTateResult is_hodge_tate(const std::vector<Sector>& sectors) {
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    const Rational& age = sectors[i].age;
    const Rational& inv_age = sectors[static_cast<std::size_t>(sectors[i].inverse)].age;
    if (rational_floor(age) != rational_floor(inv_age)) {
      return {false, HodgeTateWitness{static_cast<int>(i), age, inv_age}};
    }
  }
  return {true, std::nullopt};
}

bool hard_lefschetz_check(const std::vector<Sector>& sectors, int n) {
  (void)n;
  // The Lefschetz operator preserves sectors, so its powers are isomorphisms
  // exactly when every sector sits symmetrically about the middle degree:
  // age == inverse age for integral ages (the two cohomology ranges must line
  // up on the nose), floor equality for fractional ones. Equal dimensions
  // alone are not enough -- the operator can still drop rank.
  for (const Sector& s : sectors) {
    const Rational& inv_age = sectors[static_cast<std::size_t>(s.inverse)].age;
    if (is_integral(s.age)) {
      if (s.age != inv_age) return false;
    } else if (rational_floor(s.age) != rational_floor(inv_age)) {
      return false;
    }
  }
  return true;
}

HtWeightReport ht_weight_description(const std::vector<Sector>& sectors, int n) {
  HtWeightReport report;
  report.all_ages_integral =
      std::all_of(sectors.begin(), sectors.end(), [](const Sector& s) { return is_integral(s.age); });
  report.applicable = is_hodge_tate(sectors).hodge_tate;
  if (!report.applicable) return report;

  auto dims = graded_dims(sectors);
  auto wp = weight_filtration(sectors, n);
  report.filtration_matches = true;
  for (int k = 0; k <= n; ++k) {
    long long target = 0;
    for (const auto& [alpha, d] : dims) {
      if (alpha > n - k - 1) target += d;
    }
    long long w_even = wp.w_integral[2 * k] + wp.w_fractional[2 * k];
    long long w_odd = (2 * k + 1 <= 2 * n)
                          ? wp.w_integral[2 * k + 1] + wp.w_fractional[2 * k + 1]
                          : w_even;
    if (w_even != target || w_odd != target) {
      report.filtration_matches = false;
      break;
    }
  }
  if (report.all_ages_integral) {
    report.graded_matches = true;
    for (int k = 0; k <= n; ++k) {
      if (wp.gr_total[2 * (n - k)] != lookup(dims, Rational(k))) {
        report.graded_matches = false;
        break;
      }
    }
  }
  return report;
}

std::string render_diamond(const HodgeTable& t, DiamondPart which) {
  const int n = t.n;
  const auto& mat = which == DiamondPart::Total ? t.total
                    : which == DiamondPart::IntegralAges ? t.h0
                                                         : t.hneq0;
  std::size_t width = 1;
  for (const auto& row : mat)
    for (long long v : row) width = std::max(width, std::to_string(v).size());

  std::ostringstream out;
  for (int r = 0; r <= 2 * n; ++r) {
    const int off = r <= n ? n - r : r - n;
    std::string line;
    for (int c = 0; c <= 2 * n; ++c) {
      std::string cell(width, ' ');
      if (c >= off && c <= 2 * n - off && (c - off) % 2 == 0) {
        int p = std::max(0, r - n) + (c - off) / 2;
        std::string s = std::to_string(mat[static_cast<std::size_t>(p)][static_cast<std::size_t>(r - p)]);
        std::size_t left = (width - s.size()) / 2;
        cell.replace(left, s.size(), s);
      }
      if (c > 0) line += ' ';
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace polyhodge
