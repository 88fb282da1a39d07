#pragma once

#include <optional>
#include <span>
#include <vector>

#include "diffpow/exponent_vector.hpp"
#include "diffpow/kernels.hpp"

namespace diffpow {

/// A monomial ideal in d variables, stored as the canonical antichain of
/// its minimal generators (lex-sorted). Structural equality therefore
/// coincides with ideal equality. The zero ideal has no generators; the
/// unit ideal has the single all-zeros generator.
class MonomialIdeal {
 public:
  /// Canonicalizes: drops divisible generators, sorts lexicographically.
  static MonomialIdeal from_generators(int d, std::vector<ExponentVector> gens,
                                       kernels::Exec exec = kernels::Exec::Auto);
  static MonomialIdeal zero(int d);
  static MonomialIdeal unit(int d);
  static MonomialIdeal principal(const ExponentVector& g);

  int dim() const { return d_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }
  bool is_proper() const { return !is_zero() && !is_unit(); }

  /// x^m in I, i.e. some generator divides m.
  bool contains(const ExponentVector& m) const;

  /// other subseteq this (every generator of `other` lies in `this`).
  bool contains(const MonomialIdeal& other) const;

  /// The unique generator when there is exactly one, else nullopt.
  std::optional<ExponentVector> principal_generator() const;

  /// Componentwise maxima of the generator entries (all zero for the
  /// zero ideal); a bounding corner for the staircase's minimal corners.
  ExponentVector generator_extent() const;

  bool operator==(const MonomialIdeal&) const = default;
  /// Lex order on (d, generator list); gives ideals a canonical total order.
  bool operator<(const MonomialIdeal& other) const;

 private:
  MonomialIdeal(int d, std::vector<ExponentVector> canonical_gens)
      : d_(d), gens_(std::move(canonical_gens)) {}

  int d_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Antichain of <=-minimal elements, i.e. the canonical minimal
/// generating set of the ideal spanned by `gens`.
MonomialIdeal minimalize(int d, std::vector<ExponentVector> gens,
                         kernels::Exec exec = kernels::Exec::Auto);

/// I cap J via pairwise componentwise maxima of generators.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        kernels::Exec exec = kernels::Exec::Auto);

/// n-ary intersection. Semantically a pairwise fold; when the ambient
/// box of all generators is small enough this switches to a dense-grid
/// AND-fold, which is much faster for long folds in low dimension.
MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals,
                            kernels::Exec exec = kernels::Exec::Auto);

/// Reference pairwise fold, kept independent of the grid fast path.
MonomialIdeal intersect_all_pairwise(std::span<const MonomialIdeal> ideals,
                                     kernels::Exec exec = kernels::Exec::Auto);

/// I^n: sums of n generators with repetition, minimalized. Requires n >= 1.
MonomialIdeal ordinary_power(const MonomialIdeal& ideal, std::int64_t n,
                             kernels::Exec exec = kernels::Exec::Auto);

/// sqrt(I): squarefree parts of the generators, minimalized.
MonomialIdeal radical(const MonomialIdeal& ideal);

}  // namespace diffpow
