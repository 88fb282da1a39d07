#include "diffpow/diffpower.hpp"

#include <algorithm>
#include <exception>

namespace diffpow {

namespace {

/// Appends every vector supported on `support` whose entries are
/// profile[i] + delta_i with delta >= 0 summing to `slack`.
void compositions_on_support(const ExponentVector& profile, const std::vector<int>& support,
                             std::int64_t slack, std::size_t pos, ExponentVector current,
                             std::vector<ExponentVector>& out) {
  if (pos + 1 == support.size()) {
    const int var = support[pos];
    out.push_back(current.with_entry(var, profile[var] + slack));
    return;
  }
  const int var = support[pos];
  for (std::int64_t delta = 0; delta <= slack; ++delta)
    compositions_on_support(profile, support, slack - delta, pos + 1,
                            current.with_entry(var, profile[var] + delta), out);
}

void subsets_by_size(const std::vector<int>& vars, std::size_t size, std::size_t start,
                     std::vector<int>& current, const std::function<void(const std::vector<int>&)>& fn) {
  if (current.size() == size) {
    fn(current);
    return;
  }
  for (std::size_t i = start; i < vars.size(); ++i) {
    current.push_back(vars[i]);
    subsets_by_size(vars, size, i + 1, current, fn);
    current.pop_back();
  }
}

}  // namespace

MonomialIdeal diffpower_pure(const PurePowerIdeal& q, std::int64_t n) {
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  if (q.is_zero_ideal()) throw PreconditionError("differential power needs a nonzero ideal");

  const std::vector<int> vars = q.support();
  const ExponentVector& profile = q.profile();
  std::vector<ExponentVector> gens;
  // Generators live on subsets T of supp(alpha); entries on T start at
  // alpha and share n - |T| extra units (so |T| <= n).
  const std::size_t max_size = std::min<std::size_t>(vars.size(), static_cast<std::size_t>(n));
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<int> current;
    subsets_by_size(vars, size, 0, current, [&](const std::vector<int>& subset) {
      ExponentVector base = ExponentVector::zero(q.dim());
      compositions_on_support(profile, subset, n - static_cast<std::int64_t>(size), 0, base,
                              gens);
    });
  }
  return MonomialIdeal::from_generators(q.dim(), std::move(gens));
}

MonomialIdeal diffpower_principal(const ExponentVector& g, std::int64_t n) {
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  if (g.is_zero()) throw PreconditionError("principal differential power needs a nonzero monomial");
  ExponentVector out = g;
  for (int i : g.support()) {
    const std::int64_t raised = g[i] + n - 1;
    if (raised > kMaxExponent) throw OverflowError("exponent cap exceeded in differential power");
    out = out.with_entry(i, raised);
  }
  return MonomialIdeal::principal(out);
}

MonomialIdeal diffpower(const Decomposition& dec, std::int64_t n) {
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  if (n == 1) return dec.source;
  std::vector<MonomialIdeal> powers(dec.components.size(), MonomialIdeal::zero(dec.source.dim()));
  std::exception_ptr failure;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(dec.components.size()); ++i) {
    try {
      powers[static_cast<std::size_t>(i)] =
          diffpower_pure(dec.components[static_cast<std::size_t>(i)], n);
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical
#endif
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return intersect_all(powers);
}

MonomialIdeal diffpower(const MonomialIdeal& ideal, std::int64_t n) {
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  if (!ideal.is_proper()) throw PreconditionError("differential power needs a proper ideal");
  if (n == 1) return ideal;
  if (const auto g = ideal.principal_generator()) return diffpower_principal(*g, n);
  return diffpower(decompose(ideal), n);
}

DiffPowerTrace diffpower_trace(const MonomialIdeal& ideal, std::int64_t n) {
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  if (!ideal.is_proper()) throw PreconditionError("differential power needs a proper ideal");
  DiffPowerTrace trace{decompose(ideal), {}, MonomialIdeal::zero(ideal.dim())};
  for (const PurePowerIdeal& q : trace.decomposition.components)
    trace.component_powers.push_back(diffpower_pure(q, n));
  trace.result = intersect_all(trace.component_powers);
  return trace;
}

}  // namespace diffpow
