#include "diffpow/closure.hpp"

#include <stdexcept>

#include "diffpow/oracle.hpp"

namespace diffpow {

MonomialIdeal differential_closure(const MonomialIdeal& ideal) {
  if (!ideal.is_proper())
    throw PreconditionError("differential closure needs a proper ideal");
  return radical(ideal);
}

ClosureWitness witness_probe(const MonomialIdeal& ideal, const ExponentVector& r,
                             std::int64_t n_max) {
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
  if (!ideal.is_proper()) throw PreconditionError("witness probe needs a proper ideal");
  if (r.is_zero()) throw PreconditionError("element must be a nonzero monomial");
  if (!radical(ideal).contains(r))
    throw PreconditionError("element is not in the radical of the ideal");

  // r in sqrt(I) means supp(r) covers the support of some generator g,
  // so r^k lands in I no later than k = max entry of g.
  std::int64_t k_limit = 1;
  for (const ExponentVector& g : ideal.generators())
    for (int i = 0; i < g.dim(); ++i) k_limit = std::max(k_limit, g[i]);
  std::int64_t k = 0;
  for (std::int64_t cand = 1; cand <= k_limit; ++cand) {
    if (ideal.contains(r.scaled(cand))) {
      k = cand;
      break;
    }
  }
  if (k == 0) throw std::logic_error("no power of a radical element landed in the ideal");

  const ExponentVector c = r.scaled(k);
  const auto principal = ideal.principal_generator();
  std::optional<Decomposition> dec;
  if (!principal) dec = decompose(ideal);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const ExponentVector probe = c + r.scaled(n);
    const MonomialIdeal power =
        principal ? diffpower_principal(*principal, n) : diffpower(*dec, n);
    if (!power.contains(probe))
      throw std::logic_error("closure witness failed differential-power verification");
    if (n <= 4) {
      if (!oracle::bruteforce_membership(oracle::Polynomial::monomial(probe), ideal, n))
        throw std::logic_error("closure witness failed the brute-force cross-check");
    }
  }
  return ClosureWitness{r, k, c, n_max};
}

ClosureAxiomReport closure_axiom_suite(const MonomialIdeal& i, const MonomialIdeal& j,
                                       const ExponentVector& r) {
  if (i.dim() != j.dim() || r.dim() != i.dim())
    throw DimensionMismatchError("closure axiom suite needs matching dimensions");
  if (!i.is_proper() || !j.is_proper())
    throw PreconditionError("closure axiom suite needs proper ideals");

  const MonomialIdeal ci = differential_closure(i);
  const MonomialIdeal cj = differential_closure(j);
  const MonomialIdeal meet = intersect(i, j);
  const MonomialIdeal cmeet = differential_closure(meet);

  ClosureAxiomReport report;
  report.extensive = ci.contains(i);
  // Monotonicity: checked on (i, j) when comparable, and always on the
  // comparable pairs (i cap j, i) and (i cap j, j).
  report.monotone = (!j.contains(i) || cj.contains(ci)) && ci.contains(cmeet) &&
                    cj.contains(cmeet);
  report.absorbs_products = true;
  for (const ExponentVector& g : ci.generators())
    report.absorbs_products = report.absorbs_products && ci.contains(r + g);
  report.respects_intersection = cmeet == intersect(ci, cj);
  report.idempotent = differential_closure(ci) == ci;
  return report;
}

}  // namespace diffpow
