#include "affsemi/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "affsemi/errors.hpp"

namespace affsemi::oracle {

namespace {

struct V2 {
  long long x = 0, y = 0;
};

long long narrow_entry(const Int& v) {
  if (!v.fits_slong_p())
    throw LimitExceededError("oracle input entry " + v.get_str() +
                             " exceeds the 64-bit working range");
  return v.get_si();
}

V2 narrow2(const IntVector& v) {
  if (v.dim() != 2)
    throw DimensionMismatchError("oracle expects 2-dimensional vectors, got " +
                                 v.str());
  return V2{narrow_entry(v[0]), narrow_entry(v[1])};
}

long long det2(const V2& a, const V2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace

std::vector<IntVector> h_star_brute(const IntVector& bottom,
                                    const IntVector& ray) {
  V2 b = narrow2(bottom), r = narrow2(ray);
  long long d = det2(b, r);
  if (d == 0)
    throw InapplicableError("parallelogram scan requires independent vectors");
  long long sgn = d > 0 ? 1 : -1;
  long long vol = d * sgn;

  std::vector<IntVector> out;
  for (long long x = 0; x <= b.x + r.x; ++x)
    for (long long y = 0; y <= b.y + r.y; ++y) {
      V2 p{x, y};
      long long s = det2(p, r) * sgn;  // bottom-direction coefficient * vol
      long long t = det2(b, p) * sgn;  // ray-direction coefficient * vol
      if (0 < s && s < vol && 0 < t && t < vol)
        out.push_back(IntVector{static_cast<long>(x), static_cast<long>(y)});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool closure_generates(const std::vector<IntVector>& basis,
                       const std::vector<IntVector>& targets,
                       const IntVector& bound) {
  const std::size_t dim = bound.dim();
  std::vector<long long> hi(dim);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    hi[j] = narrow_entry(bound[j]);
    if (hi[j] < 0)
      throw InapplicableError("closure bound must be componentwise >= 0");
    total *= static_cast<std::uint64_t>(hi[j]) + 1;
    if (total > (1ull << 26))
      throw LimitExceededError("closure grid exceeds the working range");
  }

  std::vector<std::vector<long long>> steps;
  for (const IntVector& f : basis) {
    if (f.dim() != dim)
      throw DimensionMismatchError("closure basis entry " + f.str());
    std::vector<long long> s(dim);
    for (std::size_t j = 0; j < dim; ++j) s[j] = narrow_entry(f[j]);
    steps.push_back(std::move(s));
  }

  auto encode = [&](const std::vector<long long>& p) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < dim; ++j)
      idx = idx * (static_cast<std::uint64_t>(hi[j]) + 1) +
            static_cast<std::uint64_t>(p[j]);
    return idx;
  };

  std::vector<char> seen(total, 0);
  std::vector<std::vector<long long>> queue;
  queue.emplace_back(dim, 0);
  seen[0] = 1;
  while (!queue.empty()) {
    std::vector<long long> v = std::move(queue.back());
    queue.pop_back();
    for (const auto& s : steps) {
      std::vector<long long> w(dim);
      bool inside = true;
      for (std::size_t j = 0; j < dim; ++j) {
        w[j] = v[j] + s[j];
        if (w[j] < 0 || w[j] > hi[j]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      std::uint64_t idx = encode(w);
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back(std::move(w));
      }
    }
  }

  for (const IntVector& t : targets) {
    if (t.dim() != dim)
      throw DimensionMismatchError("closure target entry " + t.str());
    std::vector<long long> p(dim);
    bool inside = true;
    for (std::size_t j = 0; j < dim; ++j) {
      p[j] = narrow_entry(t[j]);
      if (p[j] < 0 || p[j] > hi[j]) {
        inside = false;
        break;
      }
    }
    if (!inside || !seen[encode(p)]) return false;
  }
  return true;
}

bool ulrich_pairwise_brute(const OrientedModel& om, const IntVector& b) {
  const std::vector<IntVector>& basis = om.base().hilbert_basis();
  if (!std::binary_search(basis.begin(), basis.end(), b) || b == om.a1() ||
      b == om.a2())
    throw InapplicableError(
        "pairwise oracle is defined for non-ray basis elements only");

  V2 a1 = narrow2(om.a1()), a2 = narrow2(om.a2()), bb = narrow2(b);
  std::vector<V2> cs;
  for (const IntVector& c : basis) cs.push_back(narrow2(c));

  // z in H iff z sits weakly between the oriented rays
  auto in_H = [&](V2 z) { return det2(a1, z) >= 0 && det2(z, a2) >= 0; };

  for (const V2& c1 : cs)
    for (const V2& c2 : cs) {
      V2 s{c1.x + c2.x, c1.y + c2.y};
      if (in_H(V2{s.x - bb.x, s.y - bb.y})) continue;
      if (in_H(V2{s.x - a1.x, s.y - a1.y})) continue;
      if (in_H(V2{s.x - a2.x, s.y - a2.y})) continue;
      return false;
    }
  return true;
}

}  // namespace affsemi::oracle
