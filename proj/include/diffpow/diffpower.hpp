#pragma once

#include "diffpow/decompose.hpp"

namespace diffpow {

/// n-th differential power of a pure-power ideal Q = (x_i^{a_i} : i in S),
/// from its closed-form generator description: for every nonempty T
/// subseteq S with |T| <= n, all exponent vectors supported on T with
/// entries >= a_i summing to sum_{i in T}(a_i - 1) + n. The result is the
/// canonical antichain of those generators.
MonomialIdeal diffpower_pure(const PurePowerIdeal& q, std::int64_t n);

/// n-th differential power of the principal ideal (x^g): the principal
/// ideal on g with every supported entry raised by n - 1.
MonomialIdeal diffpower_principal(const ExponentVector& g, std::int64_t n);

/// n-th differential power of an arbitrary proper monomial ideal:
/// principal ideals use the closed form; everything else decomposes into
/// pure-power components, powers each one, and intersects the results
/// (differential powers commute with finite intersections).
MonomialIdeal diffpower(const MonomialIdeal& ideal, std::int64_t n);

/// Same computation reusing a decomposition (for repeated powers of one
/// ideal, e.g. principality searches).
MonomialIdeal diffpower(const Decomposition& dec, std::int64_t n);

/// Full intermediate record for diagnostic output.
struct DiffPowerTrace {
  Decomposition decomposition;
  std::vector<MonomialIdeal> component_powers;
  MonomialIdeal result;
};

DiffPowerTrace diffpower_trace(const MonomialIdeal& ideal, std::int64_t n);

}  // namespace diffpow
