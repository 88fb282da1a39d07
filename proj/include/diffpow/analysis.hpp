#pragma once

#include <optional>
#include <utility>

#include "diffpow/diffpower.hpp"

namespace diffpow {

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_integer() const { return den == 1; }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// Power index at which the differential powers of an ideal become
/// principal: the closed-form bound plus, where available, the searched
/// exact minimum.
struct PrincipalityReport {
  MonomialIdeal ideal;
  std::int64_t n_bound = 0;                         // the closed-form N
  ExponentVector gen_at_bound;                      // generator of the N-th power
  std::optional<std::int64_t> n_min;                // least n with a principal power
  std::optional<ExponentVector> principal_gen_at_n_min;
  std::int64_t search_cap = 0;
};

/// Exact principality index for two variables. Requires d = 2, a
/// non-principal ideal, and every generator divisible by both x and y
/// (radical (x y)). The returned bound is exact: the n-th power is
/// principal iff n >= N, so n_min == n_bound.
PrincipalityReport principality_2d(const MonomialIdeal& ideal);

/// Principality bound for three variables. Requires d = 3, a
/// non-principal ideal, and radical (x y z). The bound need not be
/// optimal; when `search_cap` is set (default: the bound itself) the
/// exact minimum is located by search and reported alongside.
PrincipalityReport principality_3d(const MonomialIdeal& ideal,
                                   std::optional<std::int64_t> search_cap = std::nullopt);

enum class SearchMode { Binary, Linear };

/// Least n <= cap whose differential power is principal, with its
/// generator; nullopt when no power up to the cap is principal. Once a
/// power is principal all later ones are, so binary search applies;
/// linear scan is available as a cross-check.
std::optional<std::pair<std::int64_t, ExponentVector>> nmin_search(
    const MonomialIdeal& ideal, std::int64_t cap, SearchMode mode = SearchMode::Binary);

/// Containment between an ordinary and a differential power.
struct ContainmentReport {
  MonomialIdeal ideal;
  std::int64_t n = 0;
  Rational c;
  enum class Direction { OrdinaryInDifferential, DifferentialInOrdinary } direction;
  std::int64_t diff_level = 0;  // the differential power index actually compared
  bool verified = false;
};

/// Smallest shift c with Q^n inside the (n+c)-th differential power of Q:
/// minimizes sum_{i in supp(w)} (a_i - 1)(w_i - 1) over compositions w of
/// n on supp(a). Returns the shift, a minimizing composition, and the
/// verified containment report.
struct LowerContainment {
  std::int64_t c = 0;
  ExponentVector omega;  // a composition attaining the minimum
  ContainmentReport report;
};

LowerContainment lower_containment_c(const PurePowerIdeal& q, std::int64_t n);

/// Verifies the cn-th differential power of Q inside Q^n with the integer
/// multiplier c = max(max_i a_i, |supp(a)| + 1).
ContainmentReport upper_containment_check(const PurePowerIdeal& q, std::int64_t n);

/// Verifies the (a_max n)-th differential power of (x^g) inside (x^g)^n;
/// records the rational multiplier c = ((n-1) a_max + 1) / n.
ContainmentReport principal_containment_check(const ExponentVector& g, std::int64_t n);

/// Constructive refutation of a uniform containment polynomial: for the
/// given p (coefficients low to high, p(n) >= 1 on n >= 1), builds
/// I = (x^c) with c = p(2) and finds the least n whose p(n)-th
/// differential power escapes I^n, returning the witness monomial.
struct NoUniformDemo {
  std::vector<std::int64_t> p_coeffs;
  std::int64_t c = 0;
  MonomialIdeal ideal;
  std::int64_t n = 0;
  std::int64_t p_at_n = 0;
  ExponentVector witness;
  bool witness_in_diffpower = false;
  bool witness_in_ordinary_power = false;
};

NoUniformDemo no_uniform_polynomial_demo(const std::vector<std::int64_t>& p_coeffs);

}  // namespace diffpow
