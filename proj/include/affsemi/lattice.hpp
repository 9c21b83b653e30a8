#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "affsemi/int_vector.hpp"

// Exact lattice geometry for simplicial cones in N^d: barycentric coordinates
// with respect to the extremal rays, cone membership, and enumeration of the
// lattice points of the fundamental parallelotope.
//
// Key conventions:
//  - A RaySystem holds d primitive, pairwise independent rays in N^d with
//    nonzero determinant. Validation rejects bad input instead of fixing it.
//  - All decisions are made in integer arithmetic: the cached sign-normalized
//    adjugate gives numerators N_i(z) with N_i(z) = |det| * [z]_i, so sign
//    and range tests never build a rational.
//  - Hot loops dispatch to a checked 64-bit kernel when every magnitude is
//    provably below the narrow-kernel bounds; otherwise they run on mpz.
//    Both kernels implement the same scans and are compared in tests.

namespace affsemi {

enum class ConePosition { Interior, Boundary, Outside };

// Exact barycentric coordinates: z = sum_i values[i] * ray_i.
struct Barycentric {
  std::vector<Rational> values;
};

// Caps every enumeration. |det| may not exceed `limit`, and no scan may visit
// more than 16 * limit grid cells. Exceeding either throws LimitExceededError;
// results are never truncated.
struct EnumerationBudget {
  Int limit{1000000};
};

namespace detail {

// Test hook: force the mpz kernel even where the 64-bit kernel applies.
extern bool force_wide_kernel;

// Narrow-kernel admission bounds. With ray entries < 2^25, adjugate entries
// < 2^30, |det| < 2^40 and point coordinates < 2^26, every intermediate value
// in the scans stays below 2^58.
constexpr long long kNarrowRayBound = 1LL << 25;
constexpr long long kNarrowAdjBound = 1LL << 30;
constexpr long long kNarrowDetBound = 1LL << 40;
constexpr long long kNarrowPointBound = 1LL << 26;

struct NarrowMirror {
  std::vector<std::vector<long long>> rays;      // rays[i][j]
  std::vector<std::vector<long long>> adj_rows;  // adj_rows[i][j]
  long long det_abs = 0;
};

}  // namespace detail

class RaySystem {
 public:
  // Validates and freezes d rays of dimension d. Throws InvalidRaysError on
  // wrong count, negative entries, zero or non-primitive rays, or det == 0.
  static RaySystem create(std::vector<IntVector> rays);

  std::size_t dim() const { return d_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  // Determinant of the ray matrix (columns are rays), original sign.
  const Int& det() const { return det_; }
  const Int& det_abs() const { return det_abs_; }

  // Row i of the sign-normalized adjugate: adj_row(i) . z = |det| * [z]_i.
  const IntVector& adj_row(std::size_t i) const { return adj_rows_[i]; }

  // All d numerators |det| * [z]_i as a vector (exact, any magnitude).
  IntVector lambda_numerators(const IntVector& z) const;

  const std::optional<detail::NarrowMirror>& narrow() const { return narrow_; }

  // Writes z into `out` if every coordinate is within the narrow point bound
  // and the mirror exists (and the test hook does not force the wide path).
  bool narrow_point(const IntVector& z, long long* out) const;

 private:
  std::size_t d_ = 0;
  std::vector<IntVector> rays_;
  Int det_, det_abs_;
  std::vector<IntVector> adj_rows_;
  std::optional<detail::NarrowMirror> narrow_;
};

// Primitive representative v / gcd(v). Throws ZeroVectorError on 0.
IntVector make_primitive(const IntVector& v);

// Exact barycentric coordinates of z with respect to rs (lowest terms).
Barycentric barycentric(const IntVector& z, const RaySystem& rs);

// Interior: all [z]_i > 0. Boundary: all >= 0 with at least one zero.
// Outside: some [z]_i < 0.
ConePosition cone_position(const IntVector& z, const RaySystem& rs);

// Half-open fundamental parallelotope: 0 <= [z]_i < 1 for all i.
bool in_parallelotope(const IntVector& z, const RaySystem& rs);

// All lattice points of the half-open parallelotope, sorted lexicographically.
// Contains exactly |det| points, 0 included.
std::vector<IntVector> parallelotope_points(const RaySystem& rs,
                                            const EnumerationBudget& budget = {});

namespace detail {

// Generic box-filter enumeration (any d): scan [0, sum of rays] and keep the
// in_parallelotope points. Reference implementation for the d=2 column scan.
std::vector<IntVector> parallelotope_points_boxscan(const RaySystem& rs,
                                                    const EnumerationBudget& budget);

// Lattice point of the parallelotope with its numerator vector attached;
// the Hilbert-basis construction consumes the numerators directly.
struct ScanPoint {
  IntVector z;
  IntVector numerators;
};

// d=2 enumeration by exact per-column bounds; same point set as the box scan.
std::vector<ScanPoint> parallelotope_scan_2d(const RaySystem& rs,
                                             const EnumerationBudget& budget);

// Parallelotope point in the 64-bit kernel: coordinates and numerators.
struct P64 {
  long long x, y, n1, n2;
};

// 64-bit variant of the d=2 scan, reusing the caller's buffer. Returns false
// (leaving `out` untouched) when the narrow kernel does not apply; budget
// violations throw either way.
bool parallelotope_scan_2d_narrow(const RaySystem& rs,
                                  const EnumerationBudget& budget,
                                  std::vector<P64>& out);

}  // namespace detail

}  // namespace affsemi
