#pragma once

#include "diffpow/diffpower.hpp"

namespace diffpow {

/// Differential closure of a proper monomial ideal. Over a polynomial
/// ring in characteristic zero the closure coincides with the radical,
/// which is what this computes.
MonomialIdeal differential_closure(const MonomialIdeal& ideal);

/// Certificate that a monomial r in sqrt(I) lies in the differential
/// closure: the multiplier c = r^k (k least with r^k in I) satisfies
/// c * r^n in the n-th differential power for every checked n.
struct ClosureWitness {
  ExponentVector r;
  std::int64_t k = 0;
  ExponentVector c;  // the exponent vector of r^k
  std::int64_t n_checked = 0;
};

/// Builds and verifies the certificate for r up to n_max, using the fast
/// differential-power path for every level and the brute-force engine as
/// a second opinion for n <= 4. Throws PreconditionError when r is not
/// in the radical; a verification failure is a fatal internal error.
ClosureWitness witness_probe(const MonomialIdeal& ideal, const ExponentVector& r,
                             std::int64_t n_max);

/// Closure-operation axioms, with closure realized as the radical.
struct ClosureAxiomReport {
  bool extensive = false;       // I inside closure(I)
  bool monotone = false;        // I inside J implies closure(I) inside closure(J)
  bool absorbs_products = false;  // r * g in closure(I) for generators g
  bool respects_intersection = false;  // closure(I cap J) = closure(I) cap closure(J)
  bool idempotent = false;      // closure(closure(I)) = closure(I)

  bool all() const {
    return extensive && monotone && absorbs_products && respects_intersection && idempotent;
  }
};

ClosureAxiomReport closure_axiom_suite(const MonomialIdeal& i, const MonomialIdeal& j,
                                       const ExponentVector& r);

}  // namespace diffpow
