#pragma once

#include <vector>

#include "diffpow/pure_power.hpp"

namespace diffpow {

/// A presentation of a monomial ideal as an intersection of pure-power
/// (irreducible) ideals. decompose() produces the canonical irredundant
/// presentation; the struct itself can hold any candidate presentation,
/// which is what is_irredundant() inspects.
struct Decomposition {
  MonomialIdeal source;
  std::vector<PurePowerIdeal> components;
};

/// Irredundant decomposition into pure-power components, canonically
/// sorted. Splits the first generator with two or more variables in its
/// support on its lowest-index variable, recurses, deduplicates, and
/// drops components that contain the intersection of the others.
/// Requires a proper ideal (neither zero nor unit).
Decomposition decompose(const MonomialIdeal& ideal);

/// True iff no component contains the intersection of the others.
bool is_irredundant(const Decomposition& dec);

/// Intersection of all components (unit ideal for an empty list).
MonomialIdeal intersection_of(const std::vector<PurePowerIdeal>& components, int d);

}  // namespace diffpow
