#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diffpow/monomial_ideal.hpp"

namespace diffpow {

/// An ideal generated by pure powers of variables: (x_i^{a_i} : i in S).
/// Stored as the profile vector alpha with a_i on S and 0 elsewhere.
/// These are exactly the irreducible monomial ideals, the components of
/// the pure-power decomposition. An all-zero profile denotes the zero
/// ideal; operations that need a proper ideal reject it.
class PurePowerIdeal {
 public:
  /// powers: pairs (variable index, exponent >= 1).
  PurePowerIdeal(int d, const std::vector<std::pair<int, std::int64_t>>& powers);

  /// From a profile vector directly (entry 0 = variable absent).
  static PurePowerIdeal from_profile(ExponentVector profile);

  /// Succeeds iff every minimal generator is a power of a single variable.
  static std::optional<PurePowerIdeal> from_ideal(const MonomialIdeal& ideal);

  int dim() const { return profile_.dim(); }
  /// The profile alpha: exponent per variable, 0 where absent.
  const ExponentVector& profile() const { return profile_; }
  std::vector<int> support() const { return profile_.support(); }
  bool is_zero_ideal() const { return profile_.is_zero(); }

  MonomialIdeal to_ideal() const;

  bool operator==(const PurePowerIdeal&) const = default;
  auto operator<=>(const PurePowerIdeal&) const = default;

 private:
  explicit PurePowerIdeal(ExponentVector profile) : profile_(std::move(profile)) {}

  ExponentVector profile_;
};

}  // namespace diffpow
