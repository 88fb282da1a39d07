#include "diffpow/monomial_ideal.hpp"

#include <algorithm>
#include <string>

namespace diffpow {

namespace {

void require_dim(int d) {
  if (d < 1) throw DimensionMismatchError("dimension must be positive");
}

void require_same_ideal_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("ideal dimension mismatch: " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(int d, std::vector<ExponentVector> gens,
                                             kernels::Exec exec) {
  require_dim(d);
  for (const ExponentVector& g : gens)
    if (g.dim() != d) throw DimensionMismatchError("generator dimension differs from ideal");
  return MonomialIdeal(d, kernels::minimal_elements(std::move(gens), exec));
}

MonomialIdeal MonomialIdeal::zero(int d) {
  require_dim(d);
  return MonomialIdeal(d, {});
}

MonomialIdeal MonomialIdeal::unit(int d) {
  require_dim(d);
  return MonomialIdeal(d, {ExponentVector::zero(d)});
}

MonomialIdeal MonomialIdeal::principal(const ExponentVector& g) {
  return MonomialIdeal(g.dim(), {g});
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  if (m.dim() != d_) throw DimensionMismatchError("monomial dimension differs from ideal");
  for (const ExponentVector& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ideal_dim(*this, other);
  for (const ExponentVector& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::optional<ExponentVector> MonomialIdeal::principal_generator() const {
  if (gens_.size() == 1) return gens_[0];
  return std::nullopt;
}

ExponentVector MonomialIdeal::generator_extent() const {
  ExponentVector ext = ExponentVector::zero(d_);
  for (const ExponentVector& g : gens_) ext = component_max(ext, g);
  return ext;
}

bool MonomialIdeal::operator<(const MonomialIdeal& other) const {
  if (d_ != other.d_) return d_ < other.d_;
  return gens_ < other.gens_;
}

MonomialIdeal minimalize(int d, std::vector<ExponentVector> gens, kernels::Exec exec) {
  return MonomialIdeal::from_generators(d, std::move(gens), exec);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, kernels::Exec exec) {
  require_same_ideal_dim(a, b);
  auto lcms = kernels::pairwise_lcms(a.generators(), b.generators(), exec);
  return MonomialIdeal::from_generators(a.dim(), std::move(lcms), exec);
}

MonomialIdeal intersect_all_pairwise(std::span<const MonomialIdeal> ideals,
                                     kernels::Exec exec) {
  if (ideals.empty()) throw PreconditionError("empty intersection has no ambient dimension");
  MonomialIdeal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i], exec);
  return acc;
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals, kernels::Exec exec) {
  if (ideals.empty()) throw PreconditionError("empty intersection has no ambient dimension");
  const int d = ideals[0].dim();
  for (const MonomialIdeal& ideal : ideals) {
    require_same_ideal_dim(ideals[0], ideal);
    if (ideal.is_zero()) return MonomialIdeal::zero(d);
  }
  if (ideals.size() == 1) return ideals[0];

  // Minimal generators of the intersection are lcms of generators, so the
  // componentwise generator maximum bounds the whole computation. When
  // that box is small, fold dense staircase bitmaps instead of antichains.
  ExponentVector ext = ExponentVector::zero(d);
  for (const MonomialIdeal& ideal : ideals) ext = component_max(ext, ideal.generator_extent());
  if (kernels::box_volume(ext, kernels::kGridVolumeLimit)) {
    kernels::ExponentGrid acc(ext);
    acc.seed(ideals[0].generators());
    acc.upward_close(exec);
    for (std::size_t i = 1; i < ideals.size(); ++i) {
      kernels::ExponentGrid g(ext);
      g.seed(ideals[i].generators());
      g.upward_close(exec);
      acc.intersect_with(g, exec);
    }
    return MonomialIdeal::from_generators(d, acc.minimal_true_cells(), exec);
  }
  return intersect_all_pairwise(ideals, exec);
}

MonomialIdeal ordinary_power(const MonomialIdeal& ideal, std::int64_t n, kernels::Exec exec) {
  if (n < 1) throw PreconditionError("ordinary power requires n >= 1");
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  if (n == 1) return ideal;

  const auto& gens = ideal.generators();
  std::vector<ExponentVector> sums;
  // Multisets of n generators, enumerated as non-decreasing index tuples.
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    ExponentVector s = gens[pick[0]];
    for (std::size_t k = 1; k < pick.size(); ++k) s = s + gens[pick[k]];
    sums.push_back(std::move(s));
    // advance to the next non-decreasing tuple
    std::size_t pos = pick.size();
    while (pos > 0 && pick[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    const std::size_t next = pick[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < pick.size(); ++k) pick[k] = next;
  }
  return MonomialIdeal::from_generators(ideal.dim(), std::move(sums), exec);
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> parts;
  parts.reserve(ideal.generators().size());
  for (const ExponentVector& g : ideal.generators()) parts.push_back(g.squarefree_part());
  return MonomialIdeal::from_generators(ideal.dim(), std::move(parts));
}

}  // namespace diffpow
