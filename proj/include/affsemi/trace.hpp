#pragma once

#include <optional>
#include <vector>

#include "affsemi/semigroup.hpp"

// Nearly-Gorenstein decision, any dimension. The trace ideal of the
// canonical module is generated by monomials x^(c+g+h) where the shift c
// keeps every omega generator inside H, g is an omega generator and h runs
// over H. The ring is nearly Gorenstein exactly when every Hilbert-basis
// element is reachable that way; the certificate stores one witness
// decomposition per element.

namespace affsemi {

struct TraceCertificate {
  IntVector target;     // the basis element a
  IntVector shift;      // c with c + g' in H for every omega generator g'
  IntVector generator;  // g in G(omega)
  IntVector slack;      // h in H with a = c + g + h
};

struct NearlyGorensteinResult {
  bool nearly = false;
  // parallel to SemigroupModel::hilbert_basis(); disengaged entries are the
  // elements with no certificate
  std::vector<std::optional<TraceCertificate>> certificates;

  std::vector<IntVector> failing_targets(const SemigroupModel& m) const;
};

NearlyGorensteinResult is_nearly_gorenstein(const SemigroupModel& m);

// Zero-slack screen: only shifts of the form a - g are tried. A true answer
// is conclusive; false just means the full search has to run.
bool nearly_fast_path(const SemigroupModel& m);

}  // namespace affsemi
