#pragma once

#include <optional>
#include <vector>

#include "affsemi/lattice.hpp"

// Semigroup model for H = C ∩ Z^d: Hilbert basis, membership, the interior
// ideal (canonical ideal) with its minimal generators, slimness, bottom
// element, Gorenstein test. All cached sequences are sorted lexicographically
// and the model is immutable after build, so instances can be shared freely.

namespace affsemi {

// slim = true iff every Hilbert basis element outside the cone interior has
// barycentric coordinate sum >= 1. The witness, if any, is the
// lexicographically first violating basis element.
struct SlimVerdict {
  bool slim = true;
  std::optional<IntVector> witness;
};

class SemigroupModel {
 public:
  static SemigroupModel build(std::vector<IntVector> rays,
                              const EnumerationBudget& budget = {});

  const RaySystem& ray_system() const { return rs_; }
  std::size_t dim() const { return rs_.dim(); }
  const Int& det_abs() const { return rs_.det_abs(); }
  bool is_regular() const { return rs_.det_abs() == 1; }

  // Minimal generating set of H; contains the rays.
  const std::vector<IntVector>& hilbert_basis() const { return hilbert_; }

  // Minimal generating set of the interior ideal as an H-module. Every
  // element is interior. Singleton iff Gorenstein.
  const std::vector<IntVector>& omega_generators() const { return omega_; }

  bool contains(const IntVector& z) const;
  // z - base in H; base and z in Z^d.
  bool contains_shifted(const IntVector& base, const IntVector& z) const;
  bool interior_contains(const IntVector& z) const;

  SlimVerdict is_slim() const { return slim_; }

  // Componentwise meet of the omega generators when that meet is itself
  // interior; in that case it is the least interior element. Always present
  // in dimension 2.
  const std::optional<IntVector>& bottom_element() const { return bottom_; }

  // Componentwise-minimal omega generators; singleton exactly when the
  // bottom element exists.
  const std::vector<IntVector>& minimal_omega_elements() const {
    return minimal_omega_;
  }

  bool is_gorenstein() const { return omega_.size() == 1; }

  // Budget the model was built under; downstream searches reuse it.
  const EnumerationBudget& build_budget() const { return budget_; }

 private:
  RaySystem rs_;
  std::vector<IntVector> hilbert_;
  std::vector<IntVector> omega_;
  SlimVerdict slim_;
  std::optional<IntVector> bottom_;
  std::vector<IntVector> minimal_omega_;
  EnumerationBudget budget_;
};

// Minimal generating set of C ∩ Z^d: the rays plus the nonzero parallelotope
// points that no other candidate divides. Sorted lexicographically.
std::vector<IntVector> hilbert_basis(const RaySystem& rs,
                                     const EnumerationBudget& budget = {});

namespace detail {

// Generic any-dimension search for the minimal interior-ideal generators:
// scan the box [0, sum of rays], keep interior points g with g - c not
// interior for every basis element c. Reference path for the d=2 shortcut.
std::vector<IntVector> omega_generators_scan(const RaySystem& rs,
                                             const std::vector<IntVector>& basis,
                                             const EnumerationBudget& budget);

}  // namespace detail

}  // namespace affsemi
