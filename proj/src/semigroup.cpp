#include "affsemi/semigroup.hpp"

#include <algorithm>
#include <utility>

#include "affsemi/errors.hpp"

namespace affsemi {

namespace {

// Non-ray Hilbert basis elements are the componentwise minima of the nonzero
// parallelotope points in numerator space: s dominates c (s != c, every
// numerator of s <= that of c) exactly when c - s is again a nonzero
// parallelotope point, so dominated points decompose and minima do not.
// Scanning in nondecreasing numerator-sum order means any dominator of c is
// seen (and kept) before c, so testing against kept minima suffices.

std::vector<IntVector> pareto_basis_narrow(std::vector<detail::P64> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const detail::P64& a, const detail::P64& b) {
              long long sa = a.n1 + a.n2, sb = b.n1 + b.n2;
              if (sa != sb) return sa < sb;
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
  std::vector<detail::P64> kept;
  for (const detail::P64& c : pts) {
    if (c.n1 == 0 && c.n2 == 0) continue;
    bool dominated = false;
    for (const detail::P64& s : kept)
      if (s.n1 <= c.n1 && s.n2 <= c.n2) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(c);
  }
  std::vector<IntVector> out;
  out.reserve(kept.size());
  for (const detail::P64& p : kept)
    out.push_back(IntVector(std::vector<Int>{Int(static_cast<long>(p.x)),
                                             Int(static_cast<long>(p.y))}));
  return out;
}

std::vector<IntVector> pareto_basis_wide(const RaySystem& rs,
                                         const EnumerationBudget& budget) {
  struct Cand {
    IntVector z;
    IntVector n;
    Int sum;
  };
  std::vector<Cand> cands;
  if (rs.dim() == 2) {
    for (detail::ScanPoint& p : detail::parallelotope_scan_2d(rs, budget)) {
      if (p.z.is_zero()) continue;
      Int s = p.numerators[0] + p.numerators[1];
      cands.push_back(Cand{std::move(p.z), std::move(p.numerators), s});
    }
  } else {
    for (IntVector& z : detail::parallelotope_points_boxscan(rs, budget)) {
      if (z.is_zero()) continue;
      IntVector n = rs.lambda_numerators(z);
      Int s(0);
      for (std::size_t i = 0; i < n.dim(); ++i) s += n[i];
      cands.push_back(Cand{std::move(z), std::move(n), s});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    int c = cmp(a.sum, b.sum);
    if (c != 0) return c < 0;
    return a.z < b.z;
  });
  std::vector<const Cand*> kept;
  std::vector<IntVector> out;
  for (const Cand& c : cands) {
    bool dominated = false;
    for (const Cand* s : kept)
      if (leq_componentwise(s->n, c.n)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      kept.push_back(&c);
      out.push_back(c.z);
    }
  }
  return out;
}

}  // namespace

std::vector<IntVector> hilbert_basis(const RaySystem& rs,
                                     const EnumerationBudget& budget) {
  std::vector<IntVector> basis;
  if (rs.dim() == 2) {
    std::vector<detail::P64> pts;
    if (detail::parallelotope_scan_2d_narrow(rs, budget, pts))
      basis = pareto_basis_narrow(std::move(pts));
    else
      basis = pareto_basis_wide(rs, budget);
  } else {
    basis = pareto_basis_wide(rs, budget);
  }
  for (const IntVector& r : rs.rays()) basis.push_back(r);
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace detail {

std::vector<IntVector> omega_generators_scan(const RaySystem& rs,
                                             const std::vector<IntVector>& basis,
                                             const EnumerationBudget& budget) {
  const std::size_t d = rs.dim();
  IntVector hi = IntVector::zeros(d);
  for (const IntVector& r : rs.rays())
    for (std::size_t j = 0; j < d; ++j) hi[j] += r[j];
  Int cells(1);
  for (std::size_t j = 0; j < d; ++j) cells *= hi[j] + 1;
  Int cap = 16 * budget.limit;
  if (cells > cap)
    throw LimitExceededError("interior-generator scan would visit " +
                             cells.get_str() + " cells, over the budget of " +
                             cap.get_str());

  // Any minimal interior generator g has every numerator in [1, |det|]:
  // if some numerator exceeded |det|, subtracting that ray would keep g
  // interior and g would factor. So candidates live in the closed
  // parallelotope, inside the box [0, sum of rays].
  std::vector<IntVector> interior;
  IntVector z = IntVector::zeros(d);
  while (true) {
    IntVector n = rs.lambda_numerators(z);
    bool candidate = true;
    for (std::size_t i = 0; i < d; ++i)
      if (n[i] < 1 || n[i] > rs.det_abs()) {
        candidate = false;
        break;
      }
    if (candidate) interior.push_back(z);
    std::size_t j = d;
    bool advanced = false;
    while (j > 0) {
      --j;
      if (z[j] < hi[j]) {
        z[j] += 1;
        for (std::size_t k = j + 1; k < d; ++k) z[k] = 0;
        advanced = true;
        break;
      }
      if (j == 0) break;
    }
    if (!advanced) break;
  }

  std::vector<IntVector> gens;
  for (const IntVector& g : interior) {
    bool minimal = true;
    for (const IntVector& c : basis) {
      if (cone_position(g - c, rs) == ConePosition::Interior) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace detail

SemigroupModel SemigroupModel::build(std::vector<IntVector> rays,
                                     const EnumerationBudget& budget) {
  SemigroupModel m;
  m.budget_ = budget;
  m.rs_ = RaySystem::create(std::move(rays));
  m.hilbert_ = affsemi::hilbert_basis(m.rs_, budget);

  if (m.is_regular()) {
    IntVector sum = IntVector::zeros(m.dim());
    for (const IntVector& r : m.rs_.rays()) sum = sum + r;
    m.omega_ = {sum};
  } else if (m.dim() == 2) {
    // in dimension 2 the non-ray basis elements are exactly the minimal
    // interior generators; cross-checked against omega_generators_scan
    for (const IntVector& c : m.hilbert_)
      if (cone_position(c, m.rs_) == ConePosition::Interior)
        m.omega_.push_back(c);
  } else {
    m.omega_ = detail::omega_generators_scan(m.rs_, m.hilbert_, budget);
  }

  m.slim_.slim = true;
  for (const IntVector& c : m.hilbert_) {
    IntVector n = m.rs_.lambda_numerators(c);
    bool boundary = false;
    Int sum(0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (n[i] == 0) boundary = true;
      sum += n[i];
    }
    if (boundary && sum < m.rs_.det_abs()) {
      m.slim_.slim = false;
      m.slim_.witness = c;  // hilbert_ is sorted, so first hit is lex-least
      break;
    }
  }

  IntVector bot = m.omega_.front();
  for (const IntVector& g : m.omega_) bot = meet(bot, g);
  if (cone_position(bot, m.rs_) == ConePosition::Interior) m.bottom_ = bot;

  for (const IntVector& g : m.omega_) {
    bool minimal = true;
    for (const IntVector& o : m.omega_)
      if (o != g && leq_componentwise(o, g)) {
        minimal = false;
        break;
      }
    if (minimal) m.minimal_omega_.push_back(g);
  }
  return m;
}

bool SemigroupModel::contains(const IntVector& z) const {
  return cone_position(z, rs_) != ConePosition::Outside;
}

bool SemigroupModel::contains_shifted(const IntVector& base,
                                      const IntVector& z) const {
  return contains(z - base);
}

bool SemigroupModel::interior_contains(const IntVector& z) const {
  return cone_position(z, rs_) == ConePosition::Interior;
}

}  // namespace affsemi
