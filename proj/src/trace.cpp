#include "affsemi/trace.hpp"

#include <algorithm>

#include "affsemi/errors.hpp"

namespace affsemi {

namespace {

// componentwise maximum over the omega generators
IntVector generator_ceiling(const SemigroupModel& m) {
  const std::vector<IntVector>& gens = m.omega_generators();
  std::vector<Int> hi(m.dim(), Int(0));
  for (const IntVector& g : gens)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (g[j] > hi[j]) hi[j] = g[j];
  return IntVector(std::move(hi));
}

bool valid_shift(const SemigroupModel& m, const IntVector& c) {
  for (const IntVector& g : m.omega_generators())
    if (!m.contains(c + g)) return false;
  return true;
}

std::optional<TraceCertificate> zero_slack_certificate(const SemigroupModel& m,
                                                       const IntVector& a) {
  for (const IntVector& g : m.omega_generators()) {
    IntVector c = a - g;
    if (valid_shift(m, c))
      return TraceCertificate{a, std::move(c), g, IntVector::zeros(m.dim())};
  }
  return std::nullopt;
}

std::optional<TraceCertificate> box_certificate(const SemigroupModel& m,
                                                const IntVector& a,
                                                const IntVector& ceiling) {
  Int cap = 16 * m.build_budget().limit;
  for (const IntVector& g : m.omega_generators()) {
    // slack beyond a - g + ceiling forces some shifted generator below zero
    std::vector<Int> hi(m.dim());
    bool empty = false;
    Int cells(1);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      hi[j] = a[j] - g[j] + ceiling[j];
      if (hi[j] < 0) {
        empty = true;
        break;
      }
      cells *= hi[j] + 1;
    }
    if (empty) continue;
    if (cells > cap)
      throw LimitExceededError("trace search box of " + cells.get_str() +
                               " cells exceeds the budget of " +
                               cap.get_str());

    std::vector<Int> h(m.dim(), Int(0));
    bool more = true;
    while (more) {
      IntVector slack{std::vector<Int>(h)};
      if (m.contains(slack)) {
        IntVector c = a - g - slack;
        if (valid_shift(m, c))
          return TraceCertificate{a, std::move(c), g, std::move(slack)};
      }
      more = false;
      std::size_t j = m.dim();
      while (j > 0) {
        --j;
        if (h[j] < hi[j]) {
          h[j] += 1;
          more = true;
          break;
        }
        h[j] = 0;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<IntVector> NearlyGorensteinResult::failing_targets(
    const SemigroupModel& m) const {
  std::vector<IntVector> out;
  const std::vector<IntVector>& basis = m.hilbert_basis();
  for (std::size_t i = 0; i < certificates.size() && i < basis.size(); ++i)
    if (!certificates[i].has_value()) out.push_back(basis[i]);
  return out;
}

NearlyGorensteinResult is_nearly_gorenstein(const SemigroupModel& m) {
  NearlyGorensteinResult out;
  out.nearly = true;
  IntVector ceiling = generator_ceiling(m);
  for (const IntVector& a : m.hilbert_basis()) {
    std::optional<TraceCertificate> cert = zero_slack_certificate(m, a);
    if (!cert) cert = box_certificate(m, a, ceiling);
    if (!cert) out.nearly = false;
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

bool nearly_fast_path(const SemigroupModel& m) {
  for (const IntVector& a : m.hilbert_basis())
    if (!zero_slack_certificate(m, a).has_value()) return false;
  return true;
}

}  // namespace affsemi
