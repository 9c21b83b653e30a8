#pragma once

#include <vector>

#include "affsemi/ulrich.hpp"

// Brute-force reference implementations for tests and the oracle-diff
// command. Nothing here shares membership code with the fast paths: all
// geometry is done with raw 64-bit determinant sign tests, so a bug in the
// adjugate or barycentric code cannot hide itself.

namespace affsemi::oracle {

// Lattice points strictly inside the parallelogram spanned by bottom and
// ray, found by scanning the box [0, bottom + ray]. Sorted.
std::vector<IntVector> h_star_brute(const IntVector& bottom,
                                    const IntVector& ray);

// True iff every target is reachable as a sum of basis elements through
// partial sums that stay componentwise within [0, bound].
bool closure_generates(const std::vector<IntVector>& basis,
                       const std::vector<IntVector>& targets,
                       const IntVector& bound);

// Literal pairwise covering test for b in B_H \ {a1, a2}: every sum of two
// basis elements must lie in (b+H) u (a1+H) u (a2+H).
bool ulrich_pairwise_brute(const OrientedModel& om, const IntVector& b);

}  // namespace affsemi::oracle
