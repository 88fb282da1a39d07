#include "diffpow/kernels.hpp"

#include <algorithm>
#include <cstdlib>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace diffpow::kernels {

namespace {

// Auto thresholds: below these sizes the serial path wins outright.
constexpr std::size_t kMinParallelCandidates = 2048;
constexpr std::size_t kMinParallelCells = 1 << 14;

Exec g_default_exec = Exec::Auto;

bool env_forces_serial() {
  static const bool forced = [] {
    const char* v = std::getenv("DIFFPOW_SERIAL");
    return v != nullptr && v[0] != '\0' && v[0] != '0';
  }();
  return forced;
}

bool run_parallel(Exec exec, std::size_t work) {
  if (!parallel_available()) return false;
  if (exec == Exec::Auto) exec = g_default_exec;
  switch (exec) {
    case Exec::Serial:
      return false;
    case Exec::Parallel:
      return true;
    case Exec::Auto:
      return !env_forces_serial() && work >= kMinParallelCandidates;
  }
  return false;
}

}  // namespace

bool parallel_available() {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_default_exec(Exec exec) { g_default_exec = exec; }

Exec default_exec() { return g_default_exec; }

std::vector<ExponentVector> minimal_elements_serial(std::vector<ExponentVector> vecs) {
  if (vecs.empty()) return vecs;
  // A strictly dominated vector has strictly larger total degree, so a
  // degree-ascending scan only needs to test against elements already kept.
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const ExponentVector& a, const ExponentVector& b) {
                     return a.total_degree() < b.total_degree();
                   });
  std::vector<ExponentVector> kept;
  for (ExponentVector& v : vecs) {
    bool dominated = false;
    for (const ExponentVector& u : kept) {
      if (u.divides(v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(v));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<ExponentVector> minimal_elements_parallel(std::vector<ExponentVector> vecs) {
  const std::size_t n = vecs.size();
  if (n == 0) return vecs;
  std::vector<std::uint8_t> keep(n, 1);
  // keep[i] iff no j dominates i; duplicates keep the lowest index.
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const ExponentVector& v = vecs[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == static_cast<std::size_t>(i)) continue;
      const ExponentVector& u = vecs[j];
      if (!u.divides(v)) continue;
      if (u != v || j < static_cast<std::size_t>(i)) {
        keep[static_cast<std::size_t>(i)] = 0;
        break;
      }
    }
  }
  std::vector<ExponentVector> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) kept.push_back(std::move(vecs[i]));
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> vecs, Exec exec) {
  return run_parallel(exec, vecs.size()) ? minimal_elements_parallel(std::move(vecs))
                                         : minimal_elements_serial(std::move(vecs));
}

std::vector<ExponentVector> pairwise_lcms_serial(std::span<const ExponentVector> a,
                                                 std::span<const ExponentVector> b) {
  std::vector<ExponentVector> out;
  out.reserve(a.size() * b.size());
  for (const ExponentVector& u : a)
    for (const ExponentVector& v : b) out.push_back(component_max(u, v));
  return out;
}

std::vector<ExponentVector> pairwise_lcms_parallel(std::span<const ExponentVector> a,
                                                   std::span<const ExponentVector> b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<ExponentVector> out(na * nb, ExponentVector::zero(a.empty() ? 1 : a[0].dim()));
  if (na == 0 || nb == 0) return {};
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(na * nb); ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / nb;
    const std::size_t j = static_cast<std::size_t>(k) % nb;
    out[static_cast<std::size_t>(k)] = component_max(a[i], b[j]);
  }
  return out;
}

std::vector<ExponentVector> pairwise_lcms(std::span<const ExponentVector> a,
                                          std::span<const ExponentVector> b, Exec exec) {
  if (a.empty() || b.empty()) return {};
  return run_parallel(exec, a.size() * b.size()) ? pairwise_lcms_parallel(a, b)
                                                 : pairwise_lcms_serial(a, b);
}

std::optional<std::size_t> box_volume(const ExponentVector& extent, std::size_t limit) {
  std::size_t vol = 1;
  for (int i = 0; i < extent.dim(); ++i) {
    const std::size_t side = static_cast<std::size_t>(extent[i]) + 1;
    if (vol > limit / side) return std::nullopt;
    vol *= side;
  }
  if (vol > limit) return std::nullopt;
  return vol;
}

ExponentGrid::ExponentGrid(ExponentVector extent) : extent_(std::move(extent)) {
  const auto vol = box_volume(extent_, kGridVolumeLimit);
  if (!vol) throw OverflowError("grid volume exceeds limit");
  strides_.resize(static_cast<std::size_t>(extent_.dim()));
  std::size_t stride = 1;
  for (int i = 0; i < extent_.dim(); ++i) {
    strides_[static_cast<std::size_t>(i)] = stride;
    stride *= static_cast<std::size_t>(extent_[i]) + 1;
  }
  cells_.assign(stride, 0);
}

std::size_t ExponentGrid::index_of(const ExponentVector& p) const {
  require_same_dim(p, extent_);
  std::size_t idx = 0;
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] > extent_[i]) throw DimensionMismatchError("point outside grid extent");
    idx += static_cast<std::size_t>(p[i]) * strides_[static_cast<std::size_t>(i)];
  }
  return idx;
}

ExponentVector ExponentGrid::decode(std::size_t index) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(extent_.dim()));
  for (int i = 0; i < extent_.dim(); ++i) {
    const std::size_t side = static_cast<std::size_t>(extent_[i]) + 1;
    out[static_cast<std::size_t>(i)] =
        static_cast<std::int64_t>((index / strides_[static_cast<std::size_t>(i)]) % side);
  }
  return ExponentVector(std::move(out));
}

void ExponentGrid::seed(std::span<const ExponentVector> points) {
  for (const ExponentVector& p : points) set(p);
}

void ExponentGrid::upward_close(Exec exec) {
  const bool parallel = run_parallel(exec, volume());
  for (int axis = 0; axis < dim(); ++axis) {
    const std::size_t side = static_cast<std::size_t>(extent_[axis]) + 1;
    if (side == 1) continue;
    const std::size_t stride = strides_[static_cast<std::size_t>(axis)];
    const std::size_t fibers = volume() / side;
    // base(f): index whose digit along `axis` is zero and whose other
    // digits enumerate f in mixed radix.
    auto sweep_fiber = [&](std::size_t f) {
      std::size_t base = 0, rem = f;
      for (int i = 0; i < dim(); ++i) {
        if (i == axis) continue;
        const std::size_t s = static_cast<std::size_t>(extent_[i]) + 1;
        base += (rem % s) * strides_[static_cast<std::size_t>(i)];
        rem /= s;
      }
      for (std::size_t j = 1; j < side; ++j)
        cells_[base + j * stride] =
            static_cast<std::uint8_t>(cells_[base + j * stride] | cells_[base + (j - 1) * stride]);
    };
    if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
      for (std::int64_t f = 0; f < static_cast<std::int64_t>(fibers); ++f)
        sweep_fiber(static_cast<std::size_t>(f));
    } else {
      for (std::size_t f = 0; f < fibers; ++f) sweep_fiber(f);
    }
  }
}

void ExponentGrid::intersect_with(const ExponentGrid& other, Exec exec) {
  if (other.extent_ != extent_)
    throw DimensionMismatchError("grid extents differ in intersection");
  if (run_parallel(exec, volume())) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(volume()); ++k)
      cells_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(
          cells_[static_cast<std::size_t>(k)] & other.cells_[static_cast<std::size_t>(k)]);
  } else {
    for (std::size_t k = 0; k < volume(); ++k)
      cells_[k] = static_cast<std::uint8_t>(cells_[k] & other.cells_[k]);
  }
}

void ExponentGrid::fill(const std::function<bool(const ExponentVector&)>& pred, Exec exec) {
  if (run_parallel(exec, volume())) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(volume()); ++k)
      cells_[static_cast<std::size_t>(k)] = pred(decode(static_cast<std::size_t>(k))) ? 1 : 0;
  } else {
    for (std::size_t k = 0; k < volume(); ++k) cells_[k] = pred(decode(k)) ? 1 : 0;
  }
}

bool ExponentGrid::is_upward_closed() const {
  for (std::size_t k = 0; k < volume(); ++k) {
    if (!cells_[k]) continue;
    const ExponentVector p = decode(k);
    for (int i = 0; i < dim(); ++i) {
      if (p[i] < extent_[i] && !cells_[k + strides_[static_cast<std::size_t>(i)]]) return false;
    }
  }
  return true;
}

std::vector<ExponentVector> ExponentGrid::minimal_true_cells() const {
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < volume(); ++k) {
    if (!cells_[k]) continue;
    const ExponentVector p = decode(k);
    bool minimal = true;
    for (int i = 0; i < dim() && minimal; ++i)
      if (p[i] > 0 && cells_[k - strides_[static_cast<std::size_t>(i)]]) minimal = false;
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ExponentGrid::count_true() const {
  std::size_t n = 0;
  for (std::uint8_t c : cells_) n += c;
  return n;
}

}  // namespace diffpow::kernels
