#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "diffpow/monomial_ideal.hpp"
#include "diffpow/pure_power.hpp"

namespace diffpow::testing {

/// Deterministic generator for random test instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  ExponentVector vector(int d, std::int64_t max_exp, bool nonzero = true) {
    while (true) {
      std::vector<std::int64_t> entries(static_cast<std::size_t>(d));
      for (auto& e : entries) e = uniform(0, max_exp);
      ExponentVector v(std::move(entries));
      if (!nonzero || !v.is_zero()) return v;
    }
  }

  /// A proper monomial ideal: 1..max_gens nonzero generators.
  MonomialIdeal ideal(int d, std::int64_t max_exp, int max_gens) {
    const int count = static_cast<int>(uniform(1, max_gens));
    std::vector<ExponentVector> gens;
    for (int i = 0; i < count; ++i) gens.push_back(vector(d, max_exp));
    return MonomialIdeal::from_generators(d, std::move(gens));
  }

  MonomialIdeal ideal_any_dim(int max_d, std::int64_t max_exp, int max_gens) {
    return ideal(static_cast<int>(uniform(1, max_d)), max_exp, max_gens);
  }

  /// A nonzero pure-power ideal on a random nonempty support set.
  PurePowerIdeal pure_power(int d, std::int64_t max_alpha) {
    while (true) {
      std::vector<std::int64_t> profile(static_cast<std::size_t>(d));
      for (auto& e : profile) e = uniform(0, 1) ? uniform(1, max_alpha) : 0;
      ExponentVector p(std::move(profile));
      if (!p.is_zero()) return PurePowerIdeal::from_profile(p);
    }
  }

 private:
  std::mt19937_64 eng_;
};

/// Independent minimalization: quadratic dominance scan, no sorting
/// tricks shared with the library kernels.
inline std::vector<ExponentVector> naive_minimal(const std::vector<ExponentVector>& vecs) {
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < vecs.size() && keep; ++j) {
      if (j == i) continue;
      if (vecs[j].divides(vecs[i]) && (vecs[j] != vecs[i] || j < i)) keep = false;
    }
    if (keep) out.push_back(vecs[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diffpow::testing
