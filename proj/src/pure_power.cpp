#include "diffpow/pure_power.hpp"

namespace diffpow {

PurePowerIdeal::PurePowerIdeal(int d, const std::vector<std::pair<int, std::int64_t>>& powers)
    : profile_(ExponentVector::zero(d)) {
  for (const auto& [var, e] : powers) {
    if (var < 0 || var >= d) throw DimensionMismatchError("variable index out of range");
    if (e < 1) throw PreconditionError("pure-power exponent must be >= 1");
    if (profile_[var] != 0) throw PreconditionError("duplicate variable in pure-power ideal");
    profile_ = profile_.with_entry(var, e);
  }
}

PurePowerIdeal PurePowerIdeal::from_profile(ExponentVector profile) {
  return PurePowerIdeal(std::move(profile));
}

std::optional<PurePowerIdeal> PurePowerIdeal::from_ideal(const MonomialIdeal& ideal) {
  ExponentVector profile = ExponentVector::zero(ideal.dim());
  for (const ExponentVector& g : ideal.generators()) {
    if (g.support_size() != 1) return std::nullopt;
    const int var = g.support()[0];
    // canonical antichain => at most one pure power per variable
    profile = profile.with_entry(var, g[var]);
  }
  return PurePowerIdeal(std::move(profile));
}

MonomialIdeal PurePowerIdeal::to_ideal() const {
  std::vector<ExponentVector> gens;
  for (int i : profile_.support())
    gens.push_back(ExponentVector::axis(dim(), i, profile_[i]));
  return MonomialIdeal::from_generators(dim(), std::move(gens));
}

}  // namespace diffpow
