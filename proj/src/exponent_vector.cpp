#include "diffpow/exponent_vector.hpp"

#include <algorithm>
#include <string>

namespace diffpow {

namespace {

std::int64_t checked_entry(std::int64_t v) {
  if (v < 0) throw OverflowError("exponent entry is negative");
  if (v > kMaxExponent)
    throw OverflowError("exponent entry " + std::to_string(v) + " exceeds cap " +
                        std::to_string(kMaxExponent));
  return v;
}

}  // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionMismatchError("exponent vector needs d >= 1");
  for (std::int64_t v : entries_) checked_entry(v);
}

ExponentVector ExponentVector::zero(int d) {
  if (d < 1) throw DimensionMismatchError("dimension must be positive");
  return ExponentVector(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
}

ExponentVector ExponentVector::axis(int d, int var, std::int64_t e) {
  ExponentVector v = zero(d);
  if (var < 0 || var >= d) throw DimensionMismatchError("variable index out of range");
  v.entries_[static_cast<std::size_t>(var)] = checked_entry(e);
  return v;
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t sum = 0;
  for (std::int64_t v : entries_) {
    if (sum > INT64_MAX - v) throw OverflowError("total degree overflows");
    sum += v;
  }
  return sum;
}

std::vector<int> ExponentVector::support() const {
  std::vector<int> s;
  for (int i = 0; i < dim(); ++i)
    if ((*this)[i] > 0) s.push_back(i);
  return s;
}

int ExponentVector::support_size() const {
  int n = 0;
  for (std::int64_t v : entries_)
    if (v > 0) ++n;
  return n;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

bool ExponentVector::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v <= 1; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_dim(*this, other);
  for (int i = 0; i < dim(); ++i)
    if ((*this)[i] > other[i]) return false;
  return true;
}

ExponentVector ExponentVector::squarefree_part() const {
  std::vector<std::int64_t> out(entries_);
  for (std::int64_t& v : out) v = std::min<std::int64_t>(v, 1);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  if (k < 0) throw OverflowError("scale factor is negative");
  if (k > kMaxExponent) throw OverflowError("scale factor exceeds cap");
  std::vector<std::int64_t> out(entries_);
  for (std::int64_t& v : out) v = checked_entry(v * k);
  return ExponentVector(std::move(out));
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector& other) const {
  require_same_dim(*this, other);
  std::vector<std::int64_t> out(entries_);
  for (int i = 0; i < dim(); ++i) {
    out[static_cast<std::size_t>(i)] -= other[i];
    if (out[static_cast<std::size_t>(i)] < 0) return std::nullopt;
  }
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::with_entry(int i, std::int64_t value) const {
  if (i < 0 || i >= dim()) throw DimensionMismatchError("entry index out of range");
  std::vector<std::int64_t> out(entries_);
  out[static_cast<std::size_t>(i)] = checked_entry(value);
  return ExponentVector(std::move(out));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a, b);
  std::vector<std::int64_t> out(a.entries_);
  for (int i = 0; i < a.dim(); ++i)
    out[static_cast<std::size_t>(i)] = checked_entry(out[static_cast<std::size_t>(i)] + b[i]);
  return ExponentVector(std::move(out));
}

ExponentVector component_max(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a, b);
  std::vector<std::int64_t> out(a.entries_);
  for (int i = 0; i < a.dim(); ++i)
    out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], b[i]);
  return ExponentVector(std::move(out));
}

void require_same_dim(const ExponentVector& a, const ExponentVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
}

}  // namespace diffpow
