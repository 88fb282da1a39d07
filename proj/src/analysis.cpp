#include "diffpow/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace diffpow {

namespace {

void require_nonprincipal_proper(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("ideal must be proper (not zero, not unit)");
  if (ideal.principal_generator())
    throw PreconditionError("ideal must not be principal");
}

/// Enumerates compositions w >= 0 of n on the given support set.
void compositions_of(std::int64_t n, const std::vector<int>& support, std::size_t pos,
                     ExponentVector current,
                     const std::function<void(const ExponentVector&)>& fn) {
  if (pos + 1 == support.size()) {
    fn(current.with_entry(support[pos], n));
    return;
  }
  for (std::int64_t v = 0; v <= n; ++v)
    compositions_of(n - v, support, pos + 1, current.with_entry(support[pos], v), fn);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

PrincipalityReport principality_2d(const MonomialIdeal& ideal) {
  if (ideal.dim() != 2) throw PreconditionError("exact principality index needs d = 2");
  require_nonprincipal_proper(ideal);
  // Canonical lex order sorts an antichain in 2 variables by strictly
  // increasing x-exponent and strictly decreasing y-exponent.
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  if (gens[0][0] < 1 || gens[m - 1][1] < 1)
    throw PreconditionError("every generator must be divisible by x and by y (radical (x y))");

  // Largest staircase gap: max over adjacent generators of the inner
  // corner degree x-exp(next) + y-exp(current); ties take the first index.
  std::int64_t corner = 0;
  for (std::size_t j = 0; j + 1 < m; ++j)
    corner = std::max(corner, gens[j + 1][0] + gens[j][1]);

  const std::int64_t n_bound = corner - gens[m - 1][1] - gens[0][0];
  const ExponentVector gen({corner - gens[m - 1][1] - 1, corner - gens[0][0] - 1});
  PrincipalityReport report{ideal, n_bound, gen, n_bound, gen, n_bound};
  return report;
}

PrincipalityReport principality_3d(const MonomialIdeal& ideal,
                                   std::optional<std::int64_t> search_cap) {
  if (ideal.dim() != 3) throw PreconditionError("principality bound needs d = 3");
  require_nonprincipal_proper(ideal);
  const auto& gens = ideal.generators();

  std::int64_t lo[3], hi[3];
  for (int v = 0; v < 3; ++v) {
    lo[v] = gens[0][v];
    hi[v] = gens[0][v];
    for (const ExponentVector& g : gens) {
      lo[v] = std::min(lo[v], g[v]);
      hi[v] = std::max(hi[v], g[v]);
    }
  }
  if (lo[0] < 1 || lo[1] < 1 || lo[2] < 1)
    throw PreconditionError("every generator must be divisible by x, y and z (radical (x y z))");

  const std::int64_t n_xy = hi[0] + hi[1] - lo[0] - lo[1];
  const std::int64_t n_yz = hi[1] + hi[2] - lo[1] - lo[2];
  const std::int64_t n_xz = hi[0] + hi[2] - lo[0] - lo[2];
  const std::int64_t n_bound = std::max({n_xy, n_yz, n_xz});
  const ExponentVector gen({n_bound - 1 + lo[0], n_bound - 1 + lo[1], n_bound - 1 + lo[2]});

  PrincipalityReport report{ideal, n_bound, gen, std::nullopt, std::nullopt,
                            search_cap.value_or(n_bound)};
  if (auto found = nmin_search(ideal, report.search_cap)) {
    report.n_min = found->first;
    report.principal_gen_at_n_min = found->second;
  }
  return report;
}

std::optional<std::pair<std::int64_t, ExponentVector>> nmin_search(const MonomialIdeal& ideal,
                                                                   std::int64_t cap,
                                                                   SearchMode mode) {
  if (cap < 1) throw PreconditionError("search cap must be >= 1");
  require_nonprincipal_proper(ideal);
  const Decomposition dec = decompose(ideal);
  auto principal_at = [&](std::int64_t n) { return diffpower(dec, n).principal_generator(); };

  if (mode == SearchMode::Linear) {
    for (std::int64_t n = 1; n <= cap; ++n)
      if (auto g = principal_at(n)) return std::make_pair(n, *g);
    return std::nullopt;
  }

  // Principality is upward closed in n, so binary search for the least
  // principal power works once any power up to the cap is principal.
  if (!principal_at(cap)) return std::nullopt;
  std::int64_t lo = 1, hi = cap;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (principal_at(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return std::make_pair(lo, *principal_at(lo));
}

LowerContainment lower_containment_c(const PurePowerIdeal& q, std::int64_t n) {
  if (n < 1) throw PreconditionError("containment level must be >= 1");
  if (q.is_zero_ideal()) throw PreconditionError("pure-power ideal must be nonzero");

  const ExponentVector& alpha = q.profile();
  const std::vector<int> support = alpha.support();
  std::optional<std::int64_t> best;
  ExponentVector best_omega = ExponentVector::zero(q.dim());
  compositions_of(n, support, 0, ExponentVector::zero(q.dim()),
                  [&](const ExponentVector& omega) {
                    std::int64_t value = 0;
                    for (int i : omega.support()) value += (alpha[i] - 1) * (omega[i] - 1);
                    if (!best || value < *best ||
                        (value == *best && omega < best_omega)) {
                      best = value;
                      best_omega = omega;
                    }
                  });

  const MonomialIdeal source = q.to_ideal();
  ContainmentReport report{source,
                           n,
                           make_rational(*best, 1),
                           ContainmentReport::Direction::OrdinaryInDifferential,
                           n + *best,
                           false};
  report.verified = diffpower(source, n + *best).contains(ordinary_power(source, n));
  return LowerContainment{*best, best_omega, report};
}

ContainmentReport upper_containment_check(const PurePowerIdeal& q, std::int64_t n) {
  if (n < 1) throw PreconditionError("containment level must be >= 1");
  if (q.is_zero_ideal()) throw PreconditionError("pure-power ideal must be nonzero");

  const ExponentVector& alpha = q.profile();
  std::int64_t c = static_cast<std::int64_t>(alpha.support_size()) + 1;
  for (int i : alpha.support()) c = std::max(c, alpha[i]);

  const MonomialIdeal source = q.to_ideal();
  ContainmentReport report{source,
                           n,
                           make_rational(c, 1),
                           ContainmentReport::Direction::DifferentialInOrdinary,
                           c * n,
                           false};
  report.verified = ordinary_power(source, n).contains(diffpower(source, c * n));
  return report;
}

ContainmentReport principal_containment_check(const ExponentVector& g, std::int64_t n) {
  if (n < 1) throw PreconditionError("containment level must be >= 1");
  if (g.is_zero()) throw PreconditionError("monomial must be nonzero");

  std::int64_t alpha_max = 0;
  for (int i = 0; i < g.dim(); ++i) alpha_max = std::max(alpha_max, g[i]);

  const MonomialIdeal source = MonomialIdeal::principal(g);
  ContainmentReport report{source,
                           n,
                           make_rational((n - 1) * alpha_max + 1, n),
                           ContainmentReport::Direction::DifferentialInOrdinary,
                           alpha_max * n,
                           false};
  report.verified =
      ordinary_power(source, n).contains(diffpower_principal(g, alpha_max * n));
  return report;
}

NoUniformDemo no_uniform_polynomial_demo(const std::vector<std::int64_t>& p_coeffs) {
  if (p_coeffs.empty()) throw PreconditionError("polynomial needs at least one coefficient");
  for (std::int64_t a : p_coeffs)
    if (a < 0) throw PreconditionError("polynomial coefficients must be non-negative");

  auto eval = [&](std::int64_t x) {
    std::int64_t acc = 0;
    for (std::size_t k = p_coeffs.size(); k-- > 0;) {
      if (acc > (kMaxExponent - p_coeffs[k]) / std::max<std::int64_t>(x, 1))
        throw OverflowError("polynomial value exceeds exponent cap");
      acc = acc * x + p_coeffs[k];
    }
    return acc;
  };
  if (eval(1) < 1) throw PreconditionError("polynomial must satisfy p(n) >= 1 for n >= 1");

  const std::int64_t c = eval(2);
  const MonomialIdeal ideal = MonomialIdeal::principal(ExponentVector({c}));

  // In one variable the p(n)-th differential power of (x^c) is generated
  // by x^{c-1+p(n)} and I^n by x^{cn}; containment fails exactly when
  // c - 1 + p(n) < c n. Search a bounded range for the first failure.
  for (std::int64_t n = 1; n <= 10 * c; ++n) {
    const std::int64_t pn = eval(n);
    if (c - 1 + pn < c * n) {
      const ExponentVector witness({c - 1 + pn});
      return NoUniformDemo{p_coeffs,
                           c,
                           ideal,
                           n,
                           pn,
                           witness,
                           diffpower(ideal, pn).contains(witness),
                           ordinary_power(ideal, n).contains(witness)};
    }
  }
  throw PreconditionError("no containment failure found for n up to 10 * p(2)");
}

}  // namespace diffpow
