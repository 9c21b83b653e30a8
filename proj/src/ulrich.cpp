#include "affsemi/ulrich.hpp"

#include <algorithm>
#include <utility>

#include "affsemi/errors.hpp"

namespace affsemi {

namespace {

// Oriented data in a single integer type, so every decision below runs
// either on 64-bit integers (small models, the sweep workload) or on mpz
// through one shared implementation.
template <class ZZ>
struct Ctx {
  ZZ x1, y1, x2, y2;  // oriented rays
  ZZ u, v;            // bottom
  ZZ det;
  ZZ a11, a12, a21, a22;  // sign-normalized adjugate rows

  bool in_H(const ZZ& zx, const ZZ& zy) const {
    if (a11 * zx + a12 * zy < 0) return false;
    return a21 * zx + a22 * zy >= 0;
  }
  bool interior(const ZZ& zx, const ZZ& zy) const {
    if (a11 * zx + a12 * zy <= 0) return false;
    return a21 * zx + a22 * zy > 0;
  }
  bool in_P(const ZZ& zx, const ZZ& zy) const {
    ZZ n1 = a11 * zx + a12 * zy;
    if (n1 < 0 || n1 >= det) return false;
    ZZ n2 = a21 * zx + a22 * zy;
    return n2 >= 0 && n2 < det;
  }
};

Ctx<Int> wide_ctx(const OrientedModel& om) {
  const RaySystem& rs = om.base().ray_system();
  Ctx<Int> c;
  c.x1 = om.x1();
  c.y1 = om.y1();
  c.x2 = om.x2();
  c.y2 = om.y2();
  c.u = om.u();
  c.v = om.v();
  c.det = rs.det_abs();
  c.a11 = rs.adj_row(0)[0];
  c.a12 = rs.adj_row(0)[1];
  c.a21 = rs.adj_row(1)[0];
  c.a22 = rs.adj_row(1)[1];
  return c;
}

bool narrow_ctx(const OrientedModel& om, Ctx<long long>& c) {
  const RaySystem& rs = om.base().ray_system();
  const auto& nm = rs.narrow();
  long long b[2];
  if (!nm || !rs.narrow_point(om.bottom(), b)) return false;
  c.x1 = nm->rays[0][0];
  c.y1 = nm->rays[0][1];
  c.x2 = nm->rays[1][0];
  c.y2 = nm->rays[1][1];
  c.u = b[0];
  c.v = b[1];
  c.det = nm->det_abs;
  c.a11 = nm->adj_rows[0][0];
  c.a12 = nm->adj_rows[0][1];
  c.a21 = nm->adj_rows[1][0];
  c.a22 = nm->adj_rows[1][1];
  return true;
}

void check_index(int index) {
  if (index != 1 && index != 2)
    throw InapplicableError("index must be 1 or 2, got " +
                            std::to_string(index));
}

// One point per column: for i=1, column k in (u, x1) contributes (k, q_k+1)
// exactly when the residue r_k of k*y1 mod x1 reaches x1 - (v*x1 - u*y1);
// i=2 swaps the roles of the coordinates.
template <class ZZ>
std::vector<std::pair<ZZ, ZZ>> h_star_t(const Ctx<ZZ>& c, int index) {
  std::vector<std::pair<ZZ, ZZ>> out;
  if (index == 1) {
    ZZ thr = c.x1 - (c.v * c.x1 - c.u * c.y1);
    for (ZZ k = c.u + 1; k < c.x1; k += 1) {
      ZZ t = k * c.y1;
      ZZ r = t % c.x1;
      if (r >= thr) out.emplace_back(k, ZZ((t - r) / c.x1 + 1));
    }
  } else {
    ZZ thr = c.y2 - (c.u * c.y2 - c.v * c.x2);
    for (ZZ l = c.v + 1; l < c.y2; l += 1) {
      ZZ t = l * c.x2;
      ZZ r = t % c.y2;
      if (r >= thr) out.emplace_back(ZZ((t - r) / c.y2 + 1), l);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class ZZ>
bool ag_pair_scan_t(const Ctx<ZZ>& c, int index) {
  std::vector<std::pair<ZZ, ZZ>> pts = h_star_t(c, index);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) {
      std::pair<ZZ, ZZ> s{ZZ(pts[i].first + pts[j].first),
                          ZZ(pts[i].second + pts[j].second)};
      if (std::binary_search(pts.begin(), pts.end(), s)) return false;
    }
  return true;
}

// Residue form of the pair scan: the sum of two kept columns k, l lands back
// in the set exactly when k + l < x1 and r_k + r_l >= 2*x1 - (v*x1 - u*y1)
// (the residues then wrap once, fixing the row). flip reverses the
// comparison for the mutation harness.
template <class ZZ>
bool ag_residue_t(const Ctx<ZZ>& c, int index, bool flip) {
  std::vector<std::pair<ZZ, ZZ>> cols;  // (column, residue)
  ZZ bound, thr2;
  if (index == 1) {
    ZZ d1 = c.v * c.x1 - c.u * c.y1;
    ZZ thr = c.x1 - d1;
    bound = c.x1;
    thr2 = 2 * c.x1 - d1;
    for (ZZ k = c.u + 1; k < c.x1; k += 1) {
      ZZ r = (k * c.y1) % c.x1;
      if (r >= thr) cols.emplace_back(k, r);
    }
  } else {
    ZZ d2 = c.u * c.y2 - c.v * c.x2;
    ZZ thr = c.y2 - d2;
    bound = c.y2;
    thr2 = 2 * c.y2 - d2;
    for (ZZ l = c.v + 1; l < c.y2; l += 1) {
      ZZ r = (l * c.x2) % c.y2;
      if (r >= thr) cols.emplace_back(l, r);
    }
  }
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i; j < cols.size(); ++j) {
      if (cols[i].first + cols[j].first >= bound) continue;
      ZZ s = cols[i].second + cols[j].second;
      bool hit = flip ? (s <= thr2) : (s >= thr2);
      if (hit) return false;
    }
  return true;
}

template <class ZZ>
struct XY {
  ZZ x, y;
};

// First (p, q) in loop order whose sum escapes (b+H) u (a1+H) u (a2+H).
template <class ZZ>
std::optional<std::pair<std::size_t, std::size_t>> first_uncovered(
    const Ctx<ZZ>& c, const std::vector<XY<ZZ>>& ps,
    const std::vector<XY<ZZ>>& qs, const XY<ZZ>& b, bool upper_triangle) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = upper_triangle ? i : 0; j < qs.size(); ++j) {
      ZZ sx = ps[i].x + qs[j].x;
      ZZ sy = ps[i].y + qs[j].y;
      if (c.in_H(ZZ(sx - b.x), ZZ(sy - b.y))) continue;
      if (c.in_H(ZZ(sx - c.x1), ZZ(sy - c.y1))) continue;
      if (c.in_H(ZZ(sx - c.x2), ZZ(sy - c.y2))) continue;
      return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool to_xy_narrow(const RaySystem& rs, const std::vector<IntVector>& vs,
                  std::vector<XY<long long>>& out) {
  out.clear();
  out.reserve(vs.size());
  long long buf[2];
  for (const IntVector& v : vs) {
    if (!rs.narrow_point(v, buf)) return false;
    out.push_back(XY<long long>{buf[0], buf[1]});
  }
  return true;
}

std::vector<XY<Int>> to_xy_wide(const std::vector<IntVector>& vs) {
  std::vector<XY<Int>> out;
  out.reserve(vs.size());
  for (const IntVector& v : vs) out.push_back(XY<Int>{v[0], v[1]});
  return out;
}

}  // namespace

OrientedModel OrientedModel::orient(SemigroupModel m) {
  if (m.dim() != 2)
    throw InapplicableError("orientation requires a 2-dimensional model");
  if (m.ray_system().det() < 0) {
    std::vector<IntVector> swapped = {m.ray_system().rays()[1],
                                      m.ray_system().rays()[0]};
    m = SemigroupModel::build(std::move(swapped), m.build_budget());
  }
  OrientedModel om;
  om.base_ = std::move(m);
  if (!om.base_.bottom_element().has_value())
    throw Error("internal: 2-dimensional model without a bottom element");
  om.bottom_ = *om.base_.bottom_element();
  return om;
}

HStarSet h_star(const OrientedModel& om, int index) {
  check_index(index);
  HStarSet set;
  set.index = index;
  Ctx<long long> nc;
  if (narrow_ctx(om, nc)) {
    for (const auto& p : h_star_t(nc, index))
      set.points.push_back(IntVector{static_cast<long>(p.first),
                                     static_cast<long>(p.second)});
  } else {
    for (auto& p : h_star_t(wide_ctx(om), index))
      set.points.push_back(
          IntVector(std::vector<Int>{std::move(p.first), std::move(p.second)}));
  }
  return set;
}

Int h_star_count(const OrientedModel& om, int index) {
  check_index(index);
  if (index == 1) return Int(om.v() * om.x1() - om.u() * om.y1() - 1);
  return Int(om.u() * om.y2() - om.v() * om.x2() - 1);
}

namespace detail {

bool ag_pair_scan(const OrientedModel& om, int index) {
  check_index(index);
  Ctx<long long> nc;
  if (narrow_ctx(om, nc)) return ag_pair_scan_t(nc, index);
  return ag_pair_scan_t(wide_ctx(om), index);
}

bool ag_residue(const OrientedModel& om, int index, bool flip_inequality) {
  check_index(index);
  Ctx<long long> nc;
  if (narrow_ctx(om, nc)) return ag_residue_t(nc, index, flip_inequality);
  return ag_residue_t(wide_ctx(om), index, flip_inequality);
}

}  // namespace detail

bool is_ag(const OrientedModel& om, int index) {
  bool residue = detail::ag_residue(om, index, false);
  bool scan = detail::ag_pair_scan(om, index);
  if (residue != scan)
    throw Error("internal: residue and pair-scan sum-freeness disagree");
  return residue;
}

UlrichVerdict is_ulrich(const OrientedModel& om, const IntVector& b) {
  const SemigroupModel& m = om.base();
  if (cone_position(b, m.ray_system()) != ConePosition::Interior)
    throw NotInOmegaError("element " + b.str() +
                          " is not interior, so it is not in the canonical "
                          "ideal");
  const std::vector<IntVector>& basis = m.hilbert_basis();
  const std::vector<IntVector>& gens = m.omega_generators();
  bool in_basis =
      std::binary_search(basis.begin(), basis.end(), b);

  std::optional<std::pair<std::size_t, std::size_t>> bad;
  std::optional<std::pair<std::size_t, std::size_t>> bad_bb;
  bool ran_bb = false;

  Ctx<long long> nc;
  std::vector<XY<long long>> nb, ng;
  long long bbuf[2];
  if (narrow_ctx(om, nc) && m.ray_system().narrow_point(b, bbuf) &&
      to_xy_narrow(m.ray_system(), basis, nb) &&
      to_xy_narrow(m.ray_system(), gens, ng)) {
    XY<long long> bx{bbuf[0], bbuf[1]};
    bad = first_uncovered(nc, nb, ng, bx, false);
    if (in_basis) {
      bad_bb = first_uncovered(nc, nb, nb, bx, true);
      ran_bb = true;
    }
  } else {
    Ctx<Int> wc = wide_ctx(om);
    std::vector<XY<Int>> wb = to_xy_wide(basis), wg = to_xy_wide(gens);
    XY<Int> bx{b[0], b[1]};
    bad = first_uncovered(wc, wb, wg, bx, false);
    if (in_basis) {
      bad_bb = first_uncovered(wc, wb, wb, bx, true);
      ran_bb = true;
    }
  }

  // the generator form and the basis-pair form decide the same predicate
  if (ran_bb && bad.has_value() != bad_bb.has_value())
    throw Error("internal: generator-pair and basis-pair coverage disagree");

  UlrichVerdict v;
  v.element = b;
  v.ulrich = !bad.has_value();
  if (bad)
    v.violating_pair = std::make_pair(basis[bad->first], gens[bad->second]);
  return v;
}

bool is_ulrich_bottom(const OrientedModel& om) {
  return is_ag(om, 1) && is_ag(om, 2);
}

bool ulrich_one_one(const OrientedModel& om) {
  if (!(om.y1() < om.x1() && om.x2() < om.y2()))
    throw InapplicableError("(1,1) is not interior for this model");
  Int m1 = om.x1() - om.y1();
  Int m2 = om.y2() - om.x2();
  Int r1 = Int(om.x1() - 1) % m1;
  Int r2 = Int(om.y2() - 1) % m2;
  return r1 == 0 && r2 == 0;
}

std::vector<IntVector> h1_star_recursive(const OrientedModel& om) {
  if (om.bottom() != IntVector{1, 1})
    throw InapplicableError("division recursion requires bottom (1,1)");
  Int step = om.x1() - om.y1();  // positive: (1,1) interior
  Int n = step - 1;
  if (n < 1)
    throw InapplicableError("x1 - y1 - 1 = 0 leaves nothing to enumerate");
  std::vector<IntVector> out;
  Int total(0);
  Int carry = om.x1();
  for (Int t(1); t <= n; t += 1) {
    Int li = carry / step;
    Int si = carry % step;
    total += li;
    out.push_back(IntVector(std::vector<Int>{Int(t + total), total}));
    carry = om.y1() + si;
  }
  return out;
}

QuickFilters quick_filters(const OrientedModel& om) {
  const SemigroupModel& m = om.base();
  QuickFilters f;
  IntVector ones{1, 1};
  f.only_candidate_is_ones =
      om.y1() >= 1 && om.x2() >= 1 && m.interior_contains(ones);
  f.only_candidate_is_bottom =
      in_parallelotope(om.bottom() + om.bottom(), m.ray_system());
  f.bottom_forced_ulrich = om.x2() <= om.u() && om.y1() <= om.v();

  std::vector<IntVector> inside;
  for (const IntVector& c : m.hilbert_basis())
    if (in_parallelotope(c, m.ray_system())) inside.push_back(c);
  f.all_basis_elements_ulrich = true;
  for (std::size_t i = 0; i < inside.size() && f.all_basis_elements_ulrich;
       ++i)
    for (std::size_t j = i; j < inside.size(); ++j)
      if (in_parallelotope(inside[i] + inside[j], m.ray_system())) {
        f.all_basis_elements_ulrich = false;
        break;
      }
  return f;
}

SearchResult find_ulrich(const OrientedModel& om) {
  const SemigroupModel& m = om.base();
  std::vector<IntVector> uncovered;
  for (const IntVector& p : m.hilbert_basis())
    for (const IntVector& q : m.omega_generators()) {
      IntVector s = p + q;
      if (!m.contains_shifted(om.a1(), s) && !m.contains_shifted(om.a2(), s))
        uncovered.push_back(s);
    }
  std::sort(uncovered.begin(), uncovered.end());
  uncovered.erase(std::unique(uncovered.begin(), uncovered.end()),
                  uncovered.end());

  SearchResult res;
  if (uncovered.empty()) {
    res.kind = SearchResult::Kind::AllOfOmega;
    return res;
  }

  // Any Ulrich element b must cover every uncovered sum s through b + H,
  // hence b <= u0 componentwise for the least such sum u0: a finite box.
  const IntVector& u0 = uncovered.front();
  Int cells = Int(u0[0] + 1) * Int(u0[1] + 1);
  Int cap = 16 * m.build_budget().limit;
  if (cells > cap)
    throw LimitExceededError("Ulrich candidate box of " + cells.get_str() +
                             " cells exceeds the budget of " + cap.get_str());
  res.kind = SearchResult::Kind::FiniteSet;
  for (Int x(0); x <= u0[0]; x += 1)
    for (Int y(0); y <= u0[1]; y += 1) {
      IntVector z(std::vector<Int>{x, y});
      if (!m.interior_contains(z)) continue;
      if (!m.contains(u0 - z)) continue;
      if (is_ulrich(om, z).ulrich) res.elements.push_back(z);
    }
  return res;
}

}  // namespace affsemi
