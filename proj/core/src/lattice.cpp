#include "polyhodge/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace polyhodge {

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_columns(const std::vector<LatticePoint>& columns) {
  if (columns.empty()) return IntMatrix(0, 0);
  IntMatrix m(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_)
      throw std::invalid_argument("from_columns: ragged column heights");
    for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

LatticePoint IntMatrix::column(std::size_t c) const {
  LatticePoint v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Bareiss fraction-free elimination: every division below is exact.
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Forward elimination over Q on [generators | v]. Throws on dependent
// columns; returns nullopt when the system is inconsistent (v off-span).
std::optional<std::vector<Rational>> solve_impl(const IntMatrix& generators,
                                                const std::vector<Rational>& rhs) {
  const std::size_t n = generators.rows();
  const std::size_t d = generators.cols();
  if (rhs.size() != n) throw std::invalid_argument("solve_rational: dimension mismatch");

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(d + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r][c] = Rational(generators.at(r, c));
    a[r][d] = rhs[r];
  }

  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("solve_rational: dependent generator columns");
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row[c] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (a[i][d] != 0) return std::nullopt;
  }

  std::vector<Rational> q(d);
  for (std::size_t c = d; c-- > 0;) {
    Rational acc = a[pivot_row[c]][d];
    for (std::size_t j = c + 1; j < d; ++j) acc -= a[pivot_row[c]][j] * q[j];
    q[c] = acc / a[pivot_row[c]][c];
  }
  return q;
}

std::vector<Rational> to_rational(const LatticePoint& v) {
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& generators,
                                                    const LatticePoint& v) {
  return solve_impl(generators, to_rational(v));
}

std::vector<ParallelepipedPoint> enumerate_open_parallelepiped(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  const std::size_t d = generators.cols();
  if (d == 0) return {};
  if (d > n) throw std::invalid_argument("enumerate_open_parallelepiped: dependent generator columns");

  // Coordinate ranges of the closed parallelepiped, row by row.
  std::vector<Int> lo(n), hi(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const Int& e = generators.at(r, c);
      if (e < 0) lo[r] += e;
      else hi[r] += e;
    }
  }

  // A point of the parallelepiped is pinned down by its values on any d rows
  // whose d x d generator minor is invertible, so it suffices to scan those
  // d coordinates instead of the full n-dimensional bounding box. Greedily
  // pick independent rows with the narrowest ranges to keep the scan small.
  std::vector<std::size_t> order(n);
  for (std::size_t r = 0; r < n; ++r) order[r] = r;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return hi[a] - lo[a] < hi[b] - lo[b]; });

  std::vector<std::size_t> rows;
  std::vector<std::vector<Rational>> basis;  // eliminated copies of chosen rows
  for (std::size_t r : order) {
    if (rows.size() == d) break;
    std::vector<Rational> cand(d);
    for (std::size_t c = 0; c < d; ++c) cand[c] = Rational(generators.at(r, c));
    for (const std::vector<Rational>& b : basis) {
      std::size_t pivot = 0;
      while (pivot < d && b[pivot] == 0) ++pivot;
      if (pivot < d && cand[pivot] != 0) {
        Rational f = cand[pivot] / b[pivot];
        for (std::size_t c = pivot; c < d; ++c) cand[c] -= f * b[c];
      }
    }
    if (std::all_of(cand.begin(), cand.end(), [](const Rational& v) { return v == 0; })) continue;
    basis.push_back(std::move(cand));
    rows.push_back(r);
  }
  if (rows.size() < d)
    throw std::invalid_argument("enumerate_open_parallelepiped: dependent generator columns");

  IntMatrix sub(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) sub.at(i, c) = generators.at(rows[i], c);
  const Int denom = det(sub);

  // Cramer numerators u_c for the subsystem sub * q = x_rows; the candidate
  // is a lattice point of the open parallelepiped iff 0 < u_c/denom < 1 for
  // all c and the remaining rows of generators * q come out integral.
  std::vector<ParallelepipedPoint> out;
  LatticePoint x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = lo[rows[i]];
  while (true) {
    std::vector<Int> u(d);
    bool strict = true;
    for (std::size_t c = 0; c < d && strict; ++c) {
      IntMatrix m = sub;
      for (std::size_t i = 0; i < d; ++i) m.at(i, c) = x[i];
      u[c] = det(m);
      if (denom > 0 ? (u[c] <= 0 || u[c] >= denom) : (u[c] >= 0 || u[c] <= denom))
        strict = false;
    }
    if (strict) {
      LatticePoint point(n);
      bool integral = true;
      for (std::size_t r = 0; r < n && integral; ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < d; ++c) acc += generators.at(r, c) * u[c];
        if (acc % denom != 0) integral = false;
        else point[r] = acc / denom;
      }
      if (integral) {
        // Keep the denominator positive: cpp_rational refuses negative ones.
        std::vector<Rational> q(d);
        for (std::size_t c = 0; c < d; ++c)
          q[c] = denom > 0 ? Rational(u[c], denom) : Rational(-u[c], -denom);
        out.push_back({std::move(point), std::move(q)});
      }
    }
    std::size_t k = d;
    while (k-- > 0) {
      if (x[k] < hi[rows[k]]) { ++x[k]; break; }
      x[k] = lo[rows[k]];
      if (k == 0) {
        std::sort(out.begin(), out.end(),
                  [](const ParallelepipedPoint& a, const ParallelepipedPoint& b) {
                    return lex_less(a.point, b.point);
                  });
        return out;
      }
    }
  }
}

std::vector<ParallelepipedPoint> half_open_parallelepiped(const IntMatrix& b) {
  const std::size_t n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("half_open_parallelepiped: matrix not square");
  Int d = det(b);
  if (d == 0) throw std::invalid_argument("half_open_parallelepiped: singular matrix");
  const Int count = abs(d);

  // Rational inverse by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rational(b.at(r, c));
    a[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;  // exists: b nonsingular
    std::swap(a[c], a[p]);
    Rational piv = a[c][c];
    for (std::size_t j = c; j < 2 * n; ++j) a[c][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }

  // Canonical representative of x modulo the column lattice of b.
  auto reduce = [&](const LatticePoint& x) -> ParallelepipedPoint {
    std::vector<Rational> q(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) q[i] += a[i][n + j] * Rational(x[j]);
    }
    LatticePoint point = x;
    for (std::size_t i = 0; i < n; ++i) {
      Int fl = rational_floor(q[i]);
      q[i] -= Rational(fl);
      if (fl != 0) {
        for (std::size_t r = 0; r < n; ++r) point[r] -= fl * b.at(r, i);
      }
    }
    return {std::move(point), std::move(q)};
  };

  std::map<LatticePoint, std::vector<Rational>> seen;
  std::deque<LatticePoint> queue;
  seen.emplace(LatticePoint(n, Int(0)), std::vector<Rational>(n));
  queue.push_back(LatticePoint(n, Int(0)));
  while (!queue.empty()) {
    LatticePoint x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      for (int step : {1, -1}) {
        LatticePoint y = x;
        y[i] += step;
        ParallelepipedPoint rep = reduce(y);
        auto [it, inserted] = seen.emplace(rep.point, std::move(rep.coefficients));
        if (inserted) queue.push_back(it->first);
      }
    }
  }
  if (Int(seen.size()) != count)
    throw std::logic_error("half_open_parallelepiped: coset walk missed points");

  std::vector<ParallelepipedPoint> out;
  out.reserve(seen.size());
  for (auto& [point, coeffs] : seen) out.push_back({point, coeffs});
  return out;
}

}  // namespace polyhodge
