#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "diffpow/errors.hpp"

namespace diffpow {

/// Per-entry cap on exponents. Arithmetic that would push an entry past
/// this value throws OverflowError instead of wrapping.
inline constexpr std::int64_t kMaxExponent = 2147483647;

/// A point of Z_{>=0}^d: the exponent vector of a monomial in d variables.
/// Immutable after construction; all arithmetic is overflow-checked.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<std::int64_t> entries);

  static ExponentVector zero(int d);
  /// The vector e * axis_i (a pure power of one variable).
  static ExponentVector axis(int d, int var, std::int64_t e);

  int dim() const { return static_cast<int>(entries_.size()); }
  std::int64_t operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t total_degree() const;
  std::vector<int> support() const;
  int support_size() const;
  bool is_zero() const;
  bool is_squarefree() const;

  /// True iff this <= other componentwise, i.e. the monomial divides.
  bool divides(const ExponentVector& other) const;

  /// Entries capped at 1 (exponent vector of the squarefree part).
  ExponentVector squarefree_part() const;

  /// Componentwise k * this, k >= 0.
  ExponentVector scaled(std::int64_t k) const;

  /// Componentwise difference, or nullopt when any entry would go negative.
  std::optional<ExponentVector> minus(const ExponentVector& other) const;

  ExponentVector with_entry(int i, std::int64_t value) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  /// Componentwise maximum: the exponent vector of lcm(x^a, x^b).
  friend ExponentVector component_max(const ExponentVector& a, const ExponentVector& b);

  /// Lexicographic order on entries; equal dims compare entry by entry.
  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

void require_same_dim(const ExponentVector& a, const ExponentVector& b);

}  // namespace diffpow
