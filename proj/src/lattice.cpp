#include "affsemi/lattice.hpp"

#include <algorithm>
#include <utility>

#include "affsemi/errors.hpp"

namespace affsemi {

namespace detail {
bool force_wide_kernel = false;
}

namespace {

// Fraction-free Gaussian elimination; exact integer determinant.
Int det_bareiss(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Int(0);
  Int sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Int(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        // divisions in the Bareiss recurrence are exact
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool fits_below(const Int& v, long long bound) {
  if (!v.fits_slong_p()) return false;
  long x = v.get_si();
  return x > -bound && x < bound;
}

// Floor and ceiling quotients with a positive divisor, both integer types.
long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}
long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && r > 0) ? q + 1 : q;
}
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Enumerates all integer (x, y) with 0 <= A_i x + B_i y < D for both rows,
// x ascending in [0, xmax], y ascending within a column. Emits the point and
// its two numerators. One logic for the 64-bit and the mpz instantiation.
template <class ZZ, class Emit>
void column_scan_2d_t(const ZZ& A1, const ZZ& B1, const ZZ& A2, const ZZ& B2,
                      const ZZ& D, const ZZ& xmax, Emit emit) {
  const ZZ U = D - 1;
  for (ZZ x(0); x <= xmax; x += 1) {
    bool ok = true, have = false;
    ZZ lo(0), hi(0);
    auto add_row = [&](const ZZ& A, const ZZ& B) {
      if (!ok) return;
      if (B == 0) {
        ZZ t = A * x;
        if (t < 0 || t > U) ok = false;
        return;
      }
      ZZ aa = A, bb = B, low(0), up = U;
      if (bb < 0) {
        aa = -aa;
        bb = -bb;
        low = -U;
        up = 0;
      }
      ZZ l = ceil_div(ZZ(low - aa * x), bb);
      ZZ h = floor_div(ZZ(up - aa * x), bb);
      if (!have) {
        lo = l;
        hi = h;
        have = true;
      } else {
        if (l > lo) lo = l;
        if (h < hi) hi = h;
      }
    };
    add_row(A1, B1);
    add_row(A2, B2);
    // both rows degenerate would mean det == 0, which create() rejects
    if (!ok || !have || lo > hi) continue;
    for (ZZ y = lo; y <= hi; y += 1)
      emit(x, y, ZZ(A1 * x + B1 * y), ZZ(A2 * x + B2 * y));
  }
}

void check_cells(const Int& cells, const EnumerationBudget& budget,
                 const char* what) {
  Int cap = 16 * budget.limit;
  if (cells > cap)
    throw LimitExceededError(std::string(what) + " would scan " +
                             cells.get_str() + " cells, over the budget of " +
                             cap.get_str());
}

}  // namespace

IntVector make_primitive(const IntVector& v) {
  if (v.is_zero()) throw ZeroVectorError();
  Int g(0);
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  IntVector r = v;
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

RaySystem RaySystem::create(std::vector<IntVector> rays) {
  if (rays.size() < 2)
    throw InvalidRaysError("need at least 2 rays, got " +
                           std::to_string(rays.size()));
  const std::size_t d = rays.size();
  for (const IntVector& r : rays) {
    if (r.dim() != d)
      throw InvalidRaysError("ray " + r.str() + " has dimension " +
                             std::to_string(r.dim()) + ", expected " +
                             std::to_string(d) + " rays of dimension " +
                             std::to_string(d));
    if (r.is_zero()) throw InvalidRaysError("zero vector is not a ray");
    for (std::size_t j = 0; j < d; ++j)
      if (r[j] < 0)
        throw InvalidRaysError("negative entry in ray " + r.str());
    if (make_primitive(r) != r)
      throw InvalidRaysError("ray " + r.str() +
                             " is not primitive; rays are rejected, not "
                             "rescaled");
  }

  std::vector<std::vector<Int>> a(d, std::vector<Int>(d));
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t row = 0; row < d; ++row) a[row][col] = rays[col][row];
  Int det = det_bareiss(a);
  if (det == 0) throw InvalidRaysError("rays are linearly dependent");

  RaySystem rs;
  rs.d_ = d;
  rs.rays_ = std::move(rays);
  rs.det_ = det;
  rs.det_abs_ = abs(det);
  const bool flip = det < 0;

  rs.adj_rows_.assign(d, IntVector::zeros(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
      for (std::size_t r = 0, mr = 0; r < d; ++r) {
        if (r == k) continue;
        for (std::size_t c = 0, mc = 0; c < d; ++c) {
          if (c == i) continue;
          minor[mr][mc] = a[r][c];
          ++mc;
        }
        ++mr;
      }
      Int cof = d == 1 ? Int(1) : det_bareiss(minor);
      if ((i + k) % 2) cof = -cof;
      rs.adj_rows_[i][k] = flip ? Int(-cof) : cof;
    }
  }

  // adj_row(i) . ray_j == |det| * delta_ij; cheap and catches cofactor bugs
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Int acc(0);
      for (std::size_t k = 0; k < d; ++k)
        acc += rs.adj_rows_[i][k] * rs.rays_[j][k];
      if (acc != (i == j ? rs.det_abs_ : Int(0)))
        throw Error("internal: adjugate identity failed");
    }

  if (d <= 16) {
    bool narrow_ok = fits_below(rs.det_abs_, detail::kNarrowDetBound);
    for (std::size_t i = 0; narrow_ok && i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (!fits_below(rs.rays_[i][j], detail::kNarrowRayBound) ||
            !fits_below(rs.adj_rows_[i][j], detail::kNarrowAdjBound)) {
          narrow_ok = false;
          break;
        }
      }
    if (narrow_ok) {
      detail::NarrowMirror m;
      m.det_abs = rs.det_abs_.get_si();
      m.rays.assign(d, std::vector<long long>(d));
      m.adj_rows.assign(d, std::vector<long long>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          m.rays[i][j] = rs.rays_[i][j].get_si();
          m.adj_rows[i][j] = rs.adj_rows_[i][j].get_si();
        }
      rs.narrow_ = std::move(m);
    }
  }
  return rs;
}

bool RaySystem::narrow_point(const IntVector& z, long long* out) const {
  if (detail::force_wide_kernel || !narrow_) return false;
  for (std::size_t i = 0; i < d_; ++i) {
    if (!fits_below(z[i], detail::kNarrowPointBound)) return false;
    out[i] = z[i].get_si();
  }
  return true;
}

IntVector RaySystem::lambda_numerators(const IntVector& z) const {
  if (z.dim() != d_)
    throw DimensionMismatchError("point " + z.str() +
                                 " has wrong dimension for this ray system");
  IntVector n = IntVector::zeros(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    Int acc(0);
    for (std::size_t k = 0; k < d_; ++k) acc += adj_rows_[i][k] * z[k];
    n[i] = acc;
  }
  return n;
}

Barycentric barycentric(const IntVector& z, const RaySystem& rs) {
  IntVector n = rs.lambda_numerators(z);
  Barycentric b;
  b.values.reserve(rs.dim());
  for (std::size_t i = 0; i < rs.dim(); ++i)
    b.values.push_back(make_rational(n[i], rs.det_abs()));
  return b;
}

ConePosition cone_position(const IntVector& z, const RaySystem& rs) {
  if (z.dim() != rs.dim())
    throw DimensionMismatchError("point " + z.str() +
                                 " has wrong dimension for this ray system");
  long long zb[16];
  if (rs.dim() <= 16 && rs.narrow_point(z, zb)) {
    const auto& adj = rs.narrow()->adj_rows;
    bool zero = false;
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      long long acc = 0;
      for (std::size_t k = 0; k < rs.dim(); ++k) acc += adj[i][k] * zb[k];
      if (acc < 0) return ConePosition::Outside;
      if (acc == 0) zero = true;
    }
    return zero ? ConePosition::Boundary : ConePosition::Interior;
  }
  bool zero = false;
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    Int acc(0);
    for (std::size_t k = 0; k < rs.dim(); ++k)
      acc += rs.adj_row(i)[k] * z[k];
    if (acc < 0) return ConePosition::Outside;
    if (acc == 0) zero = true;
  }
  return zero ? ConePosition::Boundary : ConePosition::Interior;
}

bool in_parallelotope(const IntVector& z, const RaySystem& rs) {
  if (z.dim() != rs.dim())
    throw DimensionMismatchError("point " + z.str() +
                                 " has wrong dimension for this ray system");
  long long zb[16];
  if (rs.dim() <= 16 && rs.narrow_point(z, zb)) {
    const auto& adj = rs.narrow()->adj_rows;
    const long long D = rs.narrow()->det_abs;
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      long long acc = 0;
      for (std::size_t k = 0; k < rs.dim(); ++k) acc += adj[i][k] * zb[k];
      if (acc < 0 || acc >= D) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    Int acc(0);
    for (std::size_t k = 0; k < rs.dim(); ++k)
      acc += rs.adj_row(i)[k] * z[k];
    if (acc < 0 || acc >= rs.det_abs()) return false;
  }
  return true;
}

namespace detail {

std::vector<IntVector> parallelotope_points_boxscan(
    const RaySystem& rs, const EnumerationBudget& budget) {
  if (rs.det_abs() > budget.limit)
    throw LimitExceededError("determinant " + rs.det_abs().get_str() +
                             " exceeds the enumeration budget " +
                             budget.limit.get_str());
  const std::size_t d = rs.dim();
  IntVector hi = IntVector::zeros(d);
  for (const IntVector& r : rs.rays())
    for (std::size_t j = 0; j < d; ++j) hi[j] += r[j];
  Int cells(1);
  for (std::size_t j = 0; j < d; ++j) cells *= hi[j] + 1;
  check_cells(cells, budget, "parallelotope box scan");

  std::vector<IntVector> out;
  IntVector z = IntVector::zeros(d);
  while (true) {
    if (in_parallelotope(z, rs)) out.push_back(z);
    // odometer, last coordinate fastest: emits in lexicographic order
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (z[j] < hi[j]) {
        z[j] += 1;
        for (std::size_t k = j + 1; k < d; ++k) z[k] = 0;
        break;
      }
      if (j == 0) return out;
    }
  }
}

std::vector<ScanPoint> parallelotope_scan_2d(const RaySystem& rs,
                                             const EnumerationBudget& budget) {
  if (rs.dim() != 2)
    throw InapplicableError("column scan requires dimension 2");
  if (rs.det_abs() > budget.limit)
    throw LimitExceededError("determinant " + rs.det_abs().get_str() +
                             " exceeds the enumeration budget " +
                             budget.limit.get_str());
  Int xmax = rs.rays()[0][0] + rs.rays()[1][0];
  check_cells(Int(xmax + 1), budget, "parallelotope column scan");

  std::vector<ScanPoint> out;
  if (rs.det_abs().fits_ulong_p())
    out.reserve(rs.det_abs().get_ui());
  column_scan_2d_t<Int>(
      rs.adj_row(0)[0], rs.adj_row(0)[1], rs.adj_row(1)[0], rs.adj_row(1)[1],
      rs.det_abs(), xmax,
      [&](const Int& x, const Int& y, const Int& n1, const Int& n2) {
        out.push_back(ScanPoint{IntVector(std::vector<Int>{x, y}),
                                IntVector(std::vector<Int>{n1, n2})});
      });
  if (Int(static_cast<unsigned long>(out.size())) != rs.det_abs())
    throw Error("internal: parallelotope point count != |det|");
  return out;
}

bool parallelotope_scan_2d_narrow(const RaySystem& rs,
                                  const EnumerationBudget& budget,
                                  std::vector<P64>& out) {
  if (rs.dim() != 2 || !rs.narrow() || force_wide_kernel) return false;
  if (rs.det_abs() > budget.limit)
    throw LimitExceededError("determinant " + rs.det_abs().get_str() +
                             " exceeds the enumeration budget " +
                             budget.limit.get_str());
  const NarrowMirror& m = *rs.narrow();
  long long xmax = m.rays[0][0] + m.rays[1][0];
  check_cells(Int(static_cast<long>(xmax + 1)), budget,
              "parallelotope column scan");
  out.clear();
  column_scan_2d_t<long long>(
      m.adj_rows[0][0], m.adj_rows[0][1], m.adj_rows[1][0], m.adj_rows[1][1],
      m.det_abs, xmax,
      [&](long long x, long long y, long long n1, long long n2) {
        out.push_back(P64{x, y, n1, n2});
      });
  if (Int(static_cast<unsigned long>(out.size())) != rs.det_abs())
    throw Error("internal: parallelotope point count != |det|");
  return true;
}

}  // namespace detail

std::vector<IntVector> parallelotope_points(const RaySystem& rs,
                                            const EnumerationBudget& budget) {
  if (rs.dim() == 2) {
    std::vector<detail::P64> pts;
    if (detail::parallelotope_scan_2d_narrow(rs, budget, pts)) {
      std::vector<IntVector> out;
      out.reserve(pts.size());
      for (const detail::P64& p : pts)
        out.push_back(IntVector(std::vector<Int>{
            Int(static_cast<long>(p.x)), Int(static_cast<long>(p.y))}));
      return out;
    }
    std::vector<detail::ScanPoint> sp = detail::parallelotope_scan_2d(rs, budget);
    std::vector<IntVector> out;
    out.reserve(sp.size());
    for (detail::ScanPoint& p : sp) out.push_back(std::move(p.z));
    return out;
  }
  return detail::parallelotope_points_boxscan(rs, budget);
}

}  // namespace affsemi
