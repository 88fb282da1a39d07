#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "diffpow/exponent_vector.hpp"

namespace diffpow::kernels {

/// Execution policy for the data-parallel kernels. Every kernel has a
/// serial reference implementation and an OpenMP implementation that
/// produce bit-identical results; Auto picks by input size.
enum class Exec { Auto, Serial, Parallel };

bool parallel_available();
int max_threads();

/// Process-wide default used when a kernel is called with Exec::Auto.
/// Exec::Auto here means "parallel for large inputs when OpenMP is
/// available". Setting DIFFPOW_SERIAL=1 in the environment forces the
/// serial reference path.
void set_default_exec(Exec exec);
Exec default_exec();

/// Antichain of componentwise-minimal vectors (duplicates collapsed),
/// sorted lexicographically. The serial and parallel variants use
/// different algorithms and are cross-checked in the test suite.
std::vector<ExponentVector> minimal_elements_serial(std::vector<ExponentVector> vecs);
std::vector<ExponentVector> minimal_elements_parallel(std::vector<ExponentVector> vecs);
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> vecs,
                                             Exec exec = Exec::Auto);

/// All componentwise maxima max(u, v) for u in a, v in b.
std::vector<ExponentVector> pairwise_lcms_serial(std::span<const ExponentVector> a,
                                                 std::span<const ExponentVector> b);
std::vector<ExponentVector> pairwise_lcms_parallel(std::span<const ExponentVector> a,
                                                   std::span<const ExponentVector> b);
std::vector<ExponentVector> pairwise_lcms(std::span<const ExponentVector> a,
                                          std::span<const ExponentVector> b,
                                          Exec exec = Exec::Auto);

/// Number of lattice points in the box [0, extent], or nullopt when it
/// exceeds `limit` (guards against absurd allocations).
std::optional<std::size_t> box_volume(const ExponentVector& extent, std::size_t limit);

/// Upper bound on grid volume used by the fast intersection path.
inline constexpr std::size_t kGridVolumeLimit = std::size_t{1} << 24;

/// Dense bitmap over the lattice box [0, extent] in Z_{>=0}^d. Used to
/// represent truncated upward-closed exponent sets (staircases): ideal
/// membership within the box, brute-force membership scans, and the
/// AND-fold that realizes ideal intersection.
class ExponentGrid {
 public:
  explicit ExponentGrid(ExponentVector extent);

  const ExponentVector& extent() const { return extent_; }
  std::size_t volume() const { return cells_.size(); }
  int dim() const { return extent_.dim(); }

  bool test(const ExponentVector& p) const { return cells_[index_of(p)] != 0; }
  void set(const ExponentVector& p) { cells_[index_of(p)] = 1; }

  /// Marks the given points; each must lie inside the box.
  void seed(std::span<const ExponentVector> points);

  /// Closes the true set upward: p true and p <= q <= extent makes q true.
  /// One prefix-OR sweep per axis; fibers are independent and run in
  /// parallel under the OpenMP path.
  void upward_close(Exec exec = Exec::Auto);

  /// Cellwise AND with another grid of identical extent.
  void intersect_with(const ExponentGrid& other, Exec exec = Exec::Auto);

  /// Evaluates `pred` on every lattice point of the box.
  void fill(const std::function<bool(const ExponentVector&)>& pred, Exec exec = Exec::Auto);

  bool is_upward_closed() const;

  /// Lex-sorted minimal points of the true set. Only meaningful when the
  /// set is upward closed.
  std::vector<ExponentVector> minimal_true_cells() const;

  std::size_t count_true() const;

  bool operator==(const ExponentGrid& other) const = default;

 private:
  std::size_t index_of(const ExponentVector& p) const;
  ExponentVector decode(std::size_t index) const;

  ExponentVector extent_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace diffpow::kernels
