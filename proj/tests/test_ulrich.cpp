#include "affsemi/ulrich.hpp"

#include <numeric>
#include <vector>

#include "affsemi/errors.hpp"
#include "doctest.h"

using namespace affsemi;

namespace {

OrientedModel make_oriented(std::initializer_list<IntVector> rays,
                            EnumerationBudget budget = {}) {
  return OrientedModel::orient(
      SemigroupModel::build(std::vector<IntVector>(rays), budget));
}

std::vector<IntVector> vecs(std::initializer_list<IntVector> vs) {
  return std::vector<IntVector>(vs);
}

// every coprime slope-ordered ray pair with entries <= max, plus the two
// axis rays so degenerate slopes are covered
std::vector<OrientedModel> oriented_sweep(long max) {
  std::vector<IntVector> rays;
  for (long x = 0; x <= max; ++x)
    for (long y = 0; y <= max; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(x, y) != 1) continue;
      rays.push_back(IntVector{x, y});
    }
  std::vector<OrientedModel> out;
  for (const IntVector& a : rays)
    for (const IntVector& b : rays) {
      // slope(a) < slope(b) as a cross product
      if (a[0] * b[1] - a[1] * b[0] <= 0) continue;
      out.push_back(
          OrientedModel::orient(SemigroupModel::build({a, b})));
    }
  return out;
}

struct WideGuard {
  WideGuard() { detail::force_wide_kernel = true; }
  ~WideGuard() { detail::force_wide_kernel = false; }
};

}  // namespace

TEST_SUITE("ulrich") {

TEST_CASE("orientation sorts rays by slope and caches the bottom") {
  OrientedModel om = make_oriented({IntVector{11, 2}, IntVector{31, 6}});
  CHECK(om.a1() == IntVector{11, 2});
  CHECK(om.a2() == IntVector{31, 6});
  CHECK(om.bottom() == IntVector{16, 3});
  CHECK(om.u() == 16);
  CHECK(om.v() == 3);

  OrientedModel swapped = make_oriented({IntVector{31, 6}, IntVector{11, 2}});
  CHECK(swapped.a1() == IntVector{11, 2});
  CHECK(swapped.a2() == IntVector{31, 6});
  CHECK(swapped.base().hilbert_basis() == om.base().hilbert_basis());

  OrientedModel axes = make_oriented({IntVector{0, 1}, IntVector{1, 0}});
  CHECK(axes.a1() == IntVector{1, 0});
  CHECK(axes.a2() == IntVector{0, 1});
  CHECK(axes.bottom() == IntVector{1, 1});

  CHECK_THROWS_AS(OrientedModel::orient(SemigroupModel::build(vecs(
                      {IntVector{1, 0, 0}, IntVector{0, 1, 0},
                       IntVector{0, 0, 1}}))),
                  InapplicableError);
}

TEST_CASE("interior parallelogram points: pinned sets") {
  OrientedModel nice = make_oriented({IntVector{11, 2}, IntVector{31, 6}});
  CHECK(h_star(nice, 1).points.empty());
  CHECK(h_star(nice, 2).points == vecs({IntVector{21, 4}, IntVector{26, 5}}));
  CHECK(h_star_count(nice, 1) == 0);
  CHECK(h_star_count(nice, 2) == 2);

  OrientedModel notnice = make_oriented({IntVector{5, 2}, IntVector{2, 5}});
  CHECK(notnice.bottom() == IntVector{1, 1});
  CHECK(h_star(notnice, 1).points == vecs({IntVector{2, 1}, IntVector{4, 2}}));
  CHECK(h_star(notnice, 2).points == vecs({IntVector{1, 2}, IntVector{2, 4}}));

  OrientedModel bu = make_oriented({IntVector{11, 13}, IntVector{3, 4}});
  CHECK(bu.a1() == IntVector{11, 13});
  CHECK(bu.bottom() == IntVector{4, 5});
  CHECK(h_star(bu, 1).points == vecs({IntVector{5, 6}, IntVector{10, 12}}));
  CHECK(h_star(bu, 2).points.empty());

  OrientedModel una = make_oriented({IntVector{1, 0}, IntVector{2, 5}});
  CHECK(h_star(una, 1).points.empty());
  CHECK(h_star(una, 2).points == vecs({IntVector{1, 2}, IntVector{2, 4}}));

  // one point per column, all in the same row
  OrientedModel comb = make_oriented({IntVector{7, 1}, IntVector{1, 3}});
  CHECK(comb.bottom() == IntVector{1, 1});
  CHECK(h_star(comb, 1).points ==
        vecs({IntVector{2, 1}, IntVector{3, 1}, IntVector{4, 1},
              IntVector{5, 1}, IntVector{6, 1}}));

  CHECK_THROWS_AS(h_star(nice, 3), InapplicableError);
  CHECK_THROWS_AS(h_star_count(nice, 0), InapplicableError);
}

TEST_CASE("counting law and coordinate bounds across a sweep") {
  for (const OrientedModel& om : oriented_sweep(12)) {
    for (int i : {1, 2}) {
      HStarSet s = h_star(om, i);
      Int want = h_star_count(om, i);
      CHECK(Int(static_cast<long>(s.points.size())) == want);
      CHECK(std::is_sorted(s.points.begin(), s.points.end()));
      for (const IntVector& p : s.points) {
        CHECK(om.base().interior_contains(p));
        if (i == 1) {
          CHECK(om.u() < p[0]);
          CHECK(p[0] < om.x1());
          CHECK(om.v() <= p[1]);
          CHECK(p[1] <= om.y1());
        } else {
          CHECK(om.v() < p[1]);
          CHECK(p[1] < om.y2());
          CHECK(om.u() <= p[0]);
          CHECK(p[0] <= om.x2());
        }
      }
    }
  }
}

TEST_CASE("cross sums of the two point sets always land above the bottom") {
  for (const OrientedModel& om : oriented_sweep(10)) {
    HStarSet h1 = h_star(om, 1), h2 = h_star(om, 2);
    for (const IntVector& p : h1.points)
      for (const IntVector& q : h2.points)
        CHECK(om.base().contains_shifted(om.bottom(), p + q));
  }
}

TEST_CASE("sum-freeness verdicts: pinned") {
  OrientedModel nice = make_oriented({IntVector{11, 2}, IntVector{31, 6}});
  CHECK(is_ag(nice, 1));
  CHECK(is_ag(nice, 2));
  CHECK(is_ulrich_bottom(nice));

  OrientedModel notnice = make_oriented({IntVector{5, 2}, IntVector{2, 5}});
  CHECK_FALSE(is_ag(notnice, 1));
  CHECK_FALSE(is_ag(notnice, 2));
  CHECK_FALSE(is_ulrich_bottom(notnice));

  // (5,6) + (5,6) = (10,12) stays inside the first set
  OrientedModel bu = make_oriented({IntVector{11, 13}, IntVector{3, 4}});
  CHECK_FALSE(is_ag(bu, 1));
  CHECK(is_ag(bu, 2));
  CHECK_FALSE(is_ulrich_bottom(bu));

  OrientedModel una = make_oriented({IntVector{1, 0}, IntVector{2, 5}});
  CHECK(is_ag(una, 1));
  CHECK_FALSE(is_ag(una, 2));

  OrientedModel good = make_oriented({IntVector{5, 1}, IntVector{1, 7}});
  CHECK(is_ag(good, 1));
  CHECK(is_ag(good, 2));
  CHECK(is_ulrich_bottom(good));
}

TEST_CASE("the flipped residue inequality disagrees with the pair scan") {
  OrientedModel notnice = make_oriented({IntVector{5, 2}, IntVector{2, 5}});
  CHECK_FALSE(detail::ag_residue(notnice, 1, false));
  CHECK_FALSE(detail::ag_pair_scan(notnice, 1));
  CHECK(detail::ag_residue(notnice, 1, true));
  CHECK(detail::ag_residue(notnice, 2, true));
}

TEST_CASE("pairwise covering verdicts: pinned") {
  OrientedModel nice = make_oriented({IntVector{11, 2}, IntVector{31, 6}});
  CHECK(is_ulrich(nice, IntVector{16, 3}).ulrich);
  CHECK(is_ulrich(nice, IntVector{21, 4}).ulrich);
  CHECK(is_ulrich(nice, IntVector{26, 5}).ulrich);

  OrientedModel notnice = make_oriented({IntVector{5, 2}, IntVector{2, 5}});
  for (IntVector b : {IntVector{1, 1}, IntVector{2, 1}, IntVector{1, 2}}) {
    UlrichVerdict v = is_ulrich(notnice, b);
    CHECK_FALSE(v.ulrich);
    REQUIRE(v.violating_pair.has_value());
    IntVector s = v.violating_pair->first + v.violating_pair->second;
    const SemigroupModel& m = notnice.base();
    CHECK_FALSE(m.contains_shifted(b, s));
    CHECK_FALSE(m.contains_shifted(notnice.a1(), s));
    CHECK_FALSE(m.contains_shifted(notnice.a2(), s));
  }

  OrientedModel bu = make_oriented({IntVector{11, 13}, IntVector{3, 4}});
  CHECK(is_ulrich(bu, IntVector{5, 6}).ulrich);
  CHECK_FALSE(is_ulrich(bu, IntVector{4, 5}).ulrich);

  OrientedModel una = make_oriented({IntVector{1, 0}, IntVector{2, 5}});
  CHECK_FALSE(is_ulrich(una, IntVector{1, 1}).ulrich);
  CHECK(is_ulrich(una, IntVector{1, 2}).ulrich);

  // non-basis interior elements are legal inputs
  UlrichVerdict deep = is_ulrich(notnice, IntVector{2, 2});
  CHECK(deep.element == IntVector{2, 2});

  // boundary and exterior points are not in the canonical ideal
  CHECK_THROWS_AS(is_ulrich(nice, IntVector{11, 2}), NotInOmegaError);
  CHECK_THROWS_AS(is_ulrich(nice, IntVector{1, 1}), NotInOmegaError);
}

TEST_CASE("residue divisibility criterion for bottom (1,1)") {
  CHECK_FALSE(ulrich_one_one(
      make_oriented({IntVector{5, 2}, IntVector{2, 5}})));
  CHECK(ulrich_one_one(make_oriented({IntVector{5, 1}, IntVector{1, 7}})));
  CHECK_FALSE(ulrich_one_one(
      make_oriented({IntVector{1, 0}, IntVector{2, 5}})));
  CHECK(ulrich_one_one(make_oriented({IntVector{1, 0}, IntVector{0, 1}})));
  CHECK_THROWS_AS(ulrich_one_one(
                      make_oriented({IntVector{11, 2}, IntVector{31, 6}})),
                  InapplicableError);
}

TEST_CASE("division recursion reproduces the first point set") {
  OrientedModel notnice = make_oriented({IntVector{5, 2}, IntVector{2, 5}});
  CHECK(h1_star_recursive(notnice) ==
        vecs({IntVector{2, 1}, IntVector{4, 2}}));

  OrientedModel comb = make_oriented({IntVector{7, 1}, IntVector{1, 3}});
  CHECK(h1_star_recursive(comb) ==
        vecs({IntVector{2, 1}, IntVector{3, 1}, IntVector{4, 1},
              IntVector{5, 1}, IntVector{6, 1}}));

  // x1 - y1 = 1 leaves an empty recursion
  CHECK_THROWS_AS(h1_star_recursive(
                      make_oriented({IntVector{2, 1}, IntVector{1, 3}})),
                  InapplicableError);
  // bottom is not (1,1)
  CHECK_THROWS_AS(h1_star_recursive(
                      make_oriented({IntVector{11, 13}, IntVector{3, 4}})),
                  InapplicableError);

  for (const OrientedModel& om : oriented_sweep(12)) {
    if (om.bottom() != IntVector{1, 1}) continue;
    if (om.x1() - om.y1() < 2) continue;
    CHECK(h1_star_recursive(om) == h_star(om, 1).points);
  }
}

TEST_CASE("three decision routes agree when (1,1) is interior") {
  for (const OrientedModel& om : oriented_sweep(14)) {
    if (om.bottom() != IntVector{1, 1}) continue;
    bool residues = ulrich_one_one(om);
    bool sum_free = is_ulrich_bottom(om);
    bool pairwise = is_ulrich(om, IntVector{1, 1}).ulrich;
    CHECK(residues == sum_free);
    CHECK(sum_free == pairwise);
  }
}

TEST_CASE("shortcut filters: pinned flags and their implications") {
  QuickFilters nice =
      quick_filters(make_oriented({IntVector{11, 2}, IntVector{31, 6}}));
  CHECK_FALSE(nice.only_candidate_is_ones);
  CHECK_FALSE(nice.only_candidate_is_bottom);
  CHECK_FALSE(nice.bottom_forced_ulrich);
  CHECK(nice.all_basis_elements_ulrich);

  QuickFilters notnice =
      quick_filters(make_oriented({IntVector{5, 2}, IntVector{2, 5}}));
  CHECK(notnice.only_candidate_is_ones);
  CHECK(notnice.only_candidate_is_bottom);
  CHECK_FALSE(notnice.bottom_forced_ulrich);
  CHECK_FALSE(notnice.all_basis_elements_ulrich);

  QuickFilters good =
      quick_filters(make_oriented({IntVector{5, 1}, IntVector{1, 7}}));
  CHECK(good.only_candidate_is_ones);
  CHECK(good.bottom_forced_ulrich);

  for (const OrientedModel& om : oriented_sweep(8)) {
    QuickFilters f = quick_filters(om);
    if (f.bottom_forced_ulrich) CHECK(is_ulrich_bottom(om));
    if (f.all_basis_elements_ulrich)
      for (const IntVector& c : om.base().hilbert_basis())
        if (om.base().interior_contains(c)) CHECK(is_ulrich(om, c).ulrich);
    // the exclusion shortcuts are exact only on basis elements, where the
    // pairwise covering test is a proven equivalence
    if (f.only_candidate_is_ones)
      for (const IntVector& c : om.base().hilbert_basis())
        if (c != IntVector{1, 1} && om.base().interior_contains(c))
          CHECK_FALSE(is_ulrich(om, c).ulrich);
    if (f.only_candidate_is_bottom)
      for (const IntVector& c : om.base().hilbert_basis())
        if (c != om.bottom() && om.base().interior_contains(c))
          CHECK_FALSE(is_ulrich(om, c).ulrich);
  }
}

TEST_CASE("complete search: pinned results") {
  SearchResult nice =
      find_ulrich(make_oriented({IntVector{11, 2}, IntVector{31, 6}}));
  CHECK(nice.kind == SearchResult::Kind::AllOfOmega);

  SearchResult regular =
      find_ulrich(make_oriented({IntVector{1, 0}, IntVector{0, 1}}));
  CHECK(regular.kind == SearchResult::Kind::AllOfOmega);

  SearchResult notnice =
      find_ulrich(make_oriented({IntVector{5, 2}, IntVector{2, 5}}));
  CHECK(notnice.kind == SearchResult::Kind::FiniteSet);
  CHECK(notnice.elements.empty());

  SearchResult bu =
      find_ulrich(make_oriented({IntVector{11, 13}, IntVector{3, 4}}));
  CHECK(bu.kind == SearchResult::Kind::FiniteSet);
  CHECK(bu.elements == vecs({IntVector{5, 6}}));

  SearchResult una =
      find_ulrich(make_oriented({IntVector{1, 0}, IntVector{2, 5}}));
  CHECK(una.kind == SearchResult::Kind::FiniteSet);
  CHECK(una.elements == vecs({IntVector{1, 2}}));
}

TEST_CASE("search results re-validate and respect the bottom divisor") {
  for (const OrientedModel& om : oriented_sweep(7)) {
    SearchResult r = find_ulrich(om);
    if (r.kind == SearchResult::Kind::AllOfOmega) {
      CHECK(is_ulrich(om, om.bottom()).ulrich);
      continue;
    }
    CHECK(std::is_sorted(r.elements.begin(), r.elements.end()));
    for (const IntVector& b : r.elements) {
      CHECK(om.base().interior_contains(b));
      CHECK(is_ulrich(om, b).ulrich);
    }
  }
}

TEST_CASE("64-bit and wide evaluations agree") {
  for (const OrientedModel& om : oriented_sweep(7)) {
    HStarSet h1 = h_star(om, 1), h2 = h_star(om, 2);
    bool ag1 = is_ag(om, 1), ag2 = is_ag(om, 2);
    UlrichVerdict vb = is_ulrich(om, om.bottom());
    SearchResult r = find_ulrich(om);

    WideGuard guard;
    CHECK(h_star(om, 1).points == h1.points);
    CHECK(h_star(om, 2).points == h2.points);
    CHECK(is_ag(om, 1) == ag1);
    CHECK(is_ag(om, 2) == ag2);
    CHECK(is_ulrich(om, om.bottom()).ulrich == vb.ulrich);
    SearchResult rw = find_ulrich(om);
    CHECK(rw.kind == r.kind);
    CHECK(rw.elements == r.elements);
  }
}

}  // TEST_SUITE
