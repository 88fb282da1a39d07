// Benchmark comparing the serial reference kernels against the OpenMP
// kernels on the workloads that dominate real runs: antichain
// minimalization, staircase-grid sweeps, brute-force membership scans,
// and an end-to-end principality search. Results are checked for
// equality before timings are reported.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "diffpow/analysis.hpp"
#include "diffpow/ideal_io.hpp"
#include "diffpow/oracle.hpp"

using namespace diffpow;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  fn();  // warm up
  const auto start = Clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(2) << std::setw(12) << serial_ms << std::setw(12)
            << parallel_ms << std::setw(10) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "   "
            << (equal ? "results equal" : "RESULTS DIFFER") << "\n";
}

std::vector<ExponentVector> random_vectors(std::size_t count, int d, std::int64_t max_exp,
                                           std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, max_exp);
  std::vector<ExponentVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> entries(static_cast<std::size_t>(d));
    for (auto& e : entries) e = dist(eng);
    out.push_back(ExponentVector(std::move(entries)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const bool smoke = argc > 1 && std::string(argv[1]) == "--smoke";
  const std::size_t n_vectors = smoke ? 2000 : 60000;
  const std::int64_t scan_n = smoke ? 3 : 5;
  const int repeats = smoke ? 1 : 3;

  std::cout << "threads available: " << kernels::max_threads() << "\n";
  std::cout << std::left << std::setw(34) << "workload" << std::right << std::setw(12)
            << "serial ms" << std::setw(12) << "openmp ms" << std::setw(10) << "speedup"
            << "\n";

  {
    auto vecs = random_vectors(n_vectors, 4, 30, 42);
    std::vector<ExponentVector> rs, rp;
    const double ts =
        time_ms([&] { rs = kernels::minimal_elements_serial(vecs); }, repeats);
    const double tp =
        time_ms([&] { rp = kernels::minimal_elements_parallel(vecs); }, repeats);
    report("minimal_elements " + std::to_string(n_vectors) + " pts", ts, tp, rs == rp);
  }

  {
    const std::int64_t side = smoke ? 40 : 120;
    const ExponentVector extent({side, side, side});
    auto seeds = random_vectors(64, 3, side, 7);
    kernels::ExponentGrid gs(extent), gp(extent);
    const double ts = time_ms(
        [&] {
          gs = kernels::ExponentGrid(extent);
          gs.seed(seeds);
          gs.upward_close(kernels::Exec::Serial);
        },
        repeats);
    const double tp = time_ms(
        [&] {
          gp = kernels::ExponentGrid(extent);
          gp.seed(seeds);
          gp.upward_close(kernels::Exec::Parallel);
        },
        repeats);
    report("grid upward close " + std::to_string(side) + "^3", ts, tp, gs == gp);
  }

  {
    const IdealExpression in = parse_ideal("(x y, z^2)");
    const ExponentVector box = oracle::default_box(in.ideal, scan_n);
    MonomialIdeal rs = MonomialIdeal::zero(3), rp = MonomialIdeal::zero(3);
    const double ts = time_ms(
        [&] { rs = oracle::bruteforce_diffpower(in.ideal, scan_n, box, kernels::Exec::Serial); },
        repeats);
    const double tp = time_ms(
        [&] {
          rp = oracle::bruteforce_diffpower(in.ideal, scan_n, box, kernels::Exec::Parallel);
        },
        repeats);
    report("oracle scan n=" + std::to_string(scan_n), ts, tp, rs == rp);
  }

  {
    const IdealExpression in = parse_ideal("(x^5 y^4 z, x^2 y z^10, x y^7 z^3)");
    std::optional<std::pair<std::int64_t, ExponentVector>> rs, rp;
    const double ts = time_ms(
        [&] {
          kernels::set_default_exec(kernels::Exec::Serial);
          rs = nmin_search(in.ideal, 15);
        },
        repeats);
    const double tp = time_ms(
        [&] {
          kernels::set_default_exec(kernels::Exec::Parallel);
          rp = nmin_search(in.ideal, 15);
        },
        repeats);
    kernels::set_default_exec(kernels::Exec::Auto);
    report("principality search to n=15", ts, tp, rs == rp);
  }

  return 0;
}
