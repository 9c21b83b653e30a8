#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "affsemi/errors.hpp"
#include "affsemi/lattice.hpp"

using namespace affsemi;

namespace {

RaySystem rays2(long x1, long y1, long x2, long y2) {
  return RaySystem::create({IntVector{x1, y1}, IntVector{x2, y2}});
}

// Toggles the wide-kernel hook for one scope.
struct WideGuard {
  WideGuard() { detail::force_wide_kernel = true; }
  ~WideGuard() { detail::force_wide_kernel = false; }
};

// Coprime ray pairs below `bound` with positive determinant, for sweeps.
std::vector<RaySystem> small_systems(long bound) {
  std::vector<IntVector> prim;
  for (long x = 0; x <= bound; ++x)
    for (long y = 0; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      IntVector v{x, y};
      if (make_primitive(v) == v) prim.push_back(v);
    }
  std::vector<RaySystem> out;
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = 0; j < prim.size(); ++j) {
      if (i == j) continue;
      Int det = prim[i][0] * prim[j][1] - prim[i][1] * prim[j][0];
      if (det > 0) out.push_back(RaySystem::create({prim[i], prim[j]}));
    }
  return out;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("make_primitive divides out the gcd") {
  CHECK(make_primitive(IntVector{2, 4}) == IntVector{1, 2});
  CHECK(make_primitive(IntVector{3, 0}) == IntVector{1, 0});
  CHECK(make_primitive(IntVector{7, 5}) == IntVector{7, 5});
  CHECK(make_primitive(IntVector{-2, -4}) == IntVector{-1, -2});
  CHECK(make_primitive(IntVector{6, 10, 4}) == IntVector{3, 5, 2});
  CHECK_THROWS_AS(make_primitive(IntVector{0, 0}), ZeroVectorError);
}

TEST_CASE("ray validation rejects bad input") {
  CHECK_THROWS_AS(RaySystem::create({IntVector{1, 0}}), InvalidRaysError);
  CHECK_THROWS_AS(RaySystem::create({IntVector{1, 0, 0}, IntVector{0, 1, 0}}),
                  InvalidRaysError);
  CHECK_THROWS_AS(RaySystem::create({IntVector{1, 0}, IntVector{2, -1}}),
                  InvalidRaysError);
  CHECK_THROWS_AS(RaySystem::create({IntVector{2, 4}, IntVector{0, 1}}),
                  InvalidRaysError);
  CHECK_THROWS_AS(RaySystem::create({IntVector{0, 0}, IntVector{0, 1}}),
                  InvalidRaysError);
  CHECK_THROWS_AS(RaySystem::create({IntVector{1, 1}, IntVector{2, 2}}),
                  InvalidRaysError);
}

TEST_CASE("determinant and adjugate in dimension 2") {
  RaySystem rs = rays2(11, 2, 31, 6);
  CHECK(rs.det() == 4);
  CHECK(rs.det_abs() == 4);
  CHECK(rs.adj_row(0) == IntVector{6, -31});
  CHECK(rs.adj_row(1) == IntVector{-2, 11});

  // swapped ray order flips the determinant sign; the normalized adjugate
  // still returns nonnegative numerators on the cone
  RaySystem sw = rays2(31, 6, 11, 2);
  CHECK(sw.det() == -4);
  CHECK(sw.det_abs() == 4);
  CHECK(cone_position(IntVector{16, 3}, sw) == ConePosition::Interior);
}

TEST_CASE("barycentric coordinates are exact and reduced") {
  RaySystem rs = rays2(11, 2, 31, 6);
  Barycentric b = barycentric(IntVector{16, 3}, rs);
  REQUIRE(b.values.size() == 2);
  CHECK(b.values[0] == make_rational(3, 4));
  CHECK(b.values[1] == make_rational(1, 4));

  Barycentric h = barycentric(IntVector{21, 4}, rs);
  CHECK(h.values[0] == make_rational(1, 2));
  CHECK(h.values[1] == make_rational(1, 2));
  CHECK(h.values[0].get_den() == 2);
}

TEST_CASE("cone position classifies interior, boundary, outside") {
  RaySystem rs = rays2(11, 2, 31, 6);
  CHECK(cone_position(IntVector{16, 3}, rs) == ConePosition::Interior);
  CHECK(cone_position(IntVector{42, 8}, rs) == ConePosition::Interior);
  CHECK(cone_position(IntVector{11, 2}, rs) == ConePosition::Boundary);
  CHECK(cone_position(IntVector{62, 12}, rs) == ConePosition::Boundary);
  CHECK(cone_position(IntVector{0, 0}, rs) == ConePosition::Boundary);
  CHECK(cone_position(IntVector{1, 0}, rs) == ConePosition::Outside);
  CHECK(cone_position(IntVector{0, 1}, rs) == ConePosition::Outside);
  CHECK_THROWS_AS(cone_position(IntVector{1, 2, 3}, rs),
                  DimensionMismatchError);
}

TEST_CASE("parallelotope membership is half-open") {
  RaySystem rs = rays2(11, 2, 31, 6);
  CHECK(in_parallelotope(IntVector{0, 0}, rs));
  CHECK(in_parallelotope(IntVector{16, 3}, rs));
  CHECK(!in_parallelotope(IntVector{11, 2}, rs));
  CHECK(!in_parallelotope(IntVector{31, 6}, rs));
  CHECK(!in_parallelotope(IntVector{42, 8}, rs));
}

TEST_CASE("parallelotope points, pinned sets") {
  RaySystem rs = rays2(11, 2, 31, 6);
  std::vector<IntVector> expect = {IntVector{0, 0}, IntVector{16, 3},
                                   IntVector{21, 4}, IntVector{26, 5}};
  CHECK(parallelotope_points(rs) == expect);

  RaySystem rt = rays2(1, 0, 2, 5);
  std::vector<IntVector> expect2 = {IntVector{0, 0}, IntVector{1, 1},
                                    IntVector{1, 2}, IntVector{2, 3},
                                    IntVector{2, 4}};
  CHECK(parallelotope_points(rt) == expect2);

  // ray order must not change the set
  CHECK(parallelotope_points(rays2(2, 5, 1, 0)) == expect2);
}

TEST_CASE("parallelotope points in dimension 3") {
  RaySystem rs = RaySystem::create(
      {IntVector{5, 3, 1}, IntVector{1, 5, 2}, IntVector{8, 3, 5}});
  CHECK(rs.det_abs() == 91);
  std::vector<IntVector> pts = parallelotope_points(rs);
  CHECK(pts.size() == 91);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (const IntVector& p : pts) {
    CHECK(in_parallelotope(p, rs));
    CHECK(cone_position(p, rs) != ConePosition::Outside);
  }
}

TEST_CASE("point count equals |det| and recombination is exact") {
  for (const RaySystem& rs : small_systems(6)) {
    std::vector<IntVector> pts = parallelotope_points(rs);
    CHECK(Int(static_cast<unsigned long>(pts.size())) == rs.det_abs());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const IntVector& p : pts) {
      IntVector n = rs.lambda_numerators(p);
      // |det| * p == n1 * a1 + n2 * a2
      IntVector lhs = p * rs.det_abs();
      IntVector rhs = rs.rays()[0] * n[0] + rs.rays()[1] * n[1];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("column scan agrees with the box-filter reference") {
  EnumerationBudget budget;
  for (const RaySystem& rs : small_systems(5)) {
    std::vector<IntVector> box =
        detail::parallelotope_points_boxscan(rs, budget);
    CHECK(parallelotope_points(rs) == box);
  }
}

TEST_CASE("64-bit kernel and mpz kernel agree") {
  std::vector<RaySystem> systems = small_systems(5);
  for (const RaySystem& rs : systems) REQUIRE(rs.narrow().has_value());

  std::vector<std::vector<IntVector>> narrow_pts;
  for (const RaySystem& rs : systems)
    narrow_pts.push_back(parallelotope_points(rs));
  {
    WideGuard wide;
    for (std::size_t i = 0; i < systems.size(); ++i) {
      CHECK(parallelotope_points(systems[i]) == narrow_pts[i]);
      long long buf[2];
      CHECK(!systems[i].narrow_point(IntVector{0, 0}, buf));
    }
  }
}

TEST_CASE("entries beyond the narrow bounds fall back to mpz") {
  Int big = Int(1) << 30;
  IntVector a1(std::vector<Int>{big + 1, Int(1)});
  IntVector a2(std::vector<Int>{Int(1), Int(2)});
  RaySystem rs = RaySystem::create({a1, a2});
  CHECK(!rs.narrow().has_value());
  CHECK(cone_position(a1 + a2, rs) == ConePosition::Interior);
  IntVector n = rs.lambda_numerators(a1 + a2);
  CHECK(n[0] == rs.det_abs());
  CHECK(n[1] == rs.det_abs());
  CHECK_THROWS_AS(parallelotope_points(rs), LimitExceededError);
}

TEST_CASE("budget caps both determinant and scanned cells") {
  EnumerationBudget tiny{Int(2)};
  CHECK_THROWS_AS(parallelotope_points(rays2(11, 2, 31, 6), tiny),
                  LimitExceededError);

  // |det| == 1 fits, but the scan would walk 41 columns > 16 * 1
  EnumerationBudget one{Int(1)};
  CHECK_THROWS_AS(parallelotope_points(rays2(20, 1, 19, 1), one),
                  LimitExceededError);
  {
    WideGuard wide;
    CHECK_THROWS_AS(parallelotope_points(rays2(20, 1, 19, 1), one),
                    LimitExceededError);
  }
  CHECK(parallelotope_points(rays2(20, 1, 19, 1)).size() == 1);
}

}  // TEST_SUITE
