#include "diffpow/decompose.hpp"

#include <algorithm>
#include <set>

namespace diffpow {

namespace {

/// First generator (in canonical order) with at least two variables in
/// its support, or -1 when all generators are pure powers.
int first_mixed_generator(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].support_size() >= 2) return static_cast<int>(i);
  return -1;
}

}  // namespace

MonomialIdeal intersection_of(const std::vector<PurePowerIdeal>& components, int d) {
  if (components.empty()) return MonomialIdeal::unit(d);
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(components.size());
  for (const PurePowerIdeal& q : components) ideals.push_back(q.to_ideal());
  return intersect_all(ideals);
}

Decomposition decompose(const MonomialIdeal& ideal) {
  if (!ideal.is_proper())
    throw PreconditionError("decomposition needs a proper ideal (not zero, not unit)");

  // Splitting recursion: x_i^a * m and the rest G generate the same ideal
  // as (G, x_i^a) cap (G, m) when x_i does not divide m. Nodes are kept
  // canonical so the visited-set prunes the exponentially many duplicates.
  std::set<ExponentVector> leaf_profiles;
  std::set<MonomialIdeal> visited;
  std::vector<MonomialIdeal> stack{ideal};
  while (!stack.empty()) {
    MonomialIdeal node = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(node).second) continue;
    const int mixed = first_mixed_generator(node);
    if (mixed < 0) {
      leaf_profiles.insert(PurePowerIdeal::from_ideal(node)->profile());
      continue;
    }
    const ExponentVector g = node.generators()[static_cast<std::size_t>(mixed)];
    const int var = g.support()[0];
    std::vector<ExponentVector> rest;
    for (std::size_t i = 0; i < node.generators().size(); ++i)
      if (static_cast<int>(i) != mixed) rest.push_back(node.generators()[i]);

    std::vector<ExponentVector> left = rest;
    left.push_back(ExponentVector::axis(node.dim(), var, g[var]));
    std::vector<ExponentVector> right = rest;
    right.push_back(g.with_entry(var, 0));

    stack.push_back(MonomialIdeal::from_generators(node.dim(), std::move(left)));
    stack.push_back(MonomialIdeal::from_generators(node.dim(), std::move(right)));
  }

  std::vector<PurePowerIdeal> components;
  components.reserve(leaf_profiles.size());
  for (const ExponentVector& profile : leaf_profiles)
    components.push_back(PurePowerIdeal::from_profile(profile));
  std::sort(components.begin(), components.end());

  // Irredundancy: greedily drop any component that contains the
  // intersection of the remaining ones. The irredundant presentation is
  // unique, so the scan order does not affect the final set.
  for (std::size_t j = 0; j < components.size();) {
    if (components.size() == 1) break;
    std::vector<PurePowerIdeal> others;
    others.reserve(components.size() - 1);
    for (std::size_t k = 0; k < components.size(); ++k)
      if (k != j) others.push_back(components[k]);
    const MonomialIdeal inter = intersection_of(others, ideal.dim());
    if (components[j].to_ideal().contains(inter)) {
      components.erase(components.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
      ++j;
    }
  }

  return Decomposition{ideal, std::move(components)};
}

bool is_irredundant(const Decomposition& dec) {
  const int d = dec.source.dim();
  for (std::size_t j = 0; j < dec.components.size(); ++j) {
    std::vector<PurePowerIdeal> others;
    for (std::size_t k = 0; k < dec.components.size(); ++k)
      if (k != j) others.push_back(dec.components[k]);
    if (dec.components[j].to_ideal().contains(intersection_of(others, d))) return false;
  }
  return true;
}

}  // namespace diffpow
