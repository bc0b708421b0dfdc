// Compares the OpenMP kernels against their serial references:
//   - pairwise negacyclic row products (the ideal_product inner batch)
//   - experiment sampling sweeps
// Results must match exactly; the table reports wall times.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "svplab/cyclo_ideal.hpp"
#include "svplab/experiments.hpp"

using namespace svplab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_products(unsigned n) {
    CycloParams params(n);
    IdealLattice a = IdealLattice::from_two_element(params, 5, {2, 0, 1});
    IdealLattice b = IdealLattice::from_two_element(params, 13, {5, 1});

    auto t0 = std::chrono::steady_clock::now();
    IntMat serial = pairwise_ring_products_serial(a.lattice().basis(), b.lattice().basis());
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    IntMat parallel = pairwise_ring_products(a.lattice().basis(), b.lattice().basis());
    double tp = seconds_since(t0);

    bool match = serial == parallel;
    std::cout << "row-products n=" << n << " (" << serial.size() << " rows)  serial " << ts << "s  openmp "
              << tp << "s  match=" << (match ? "yes" : "NO") << "\n";
}

void bench_experiment(std::size_t samples) {
    ExperimentConfig config{Distribution::D2, 4, mpz_class(100000), samples, 42};

    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport serial = run_experiment_serial(config);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    ExperimentReport parallel = run_experiment(config);
    double tp = seconds_since(t0);

    bool match = experiment_report_to_json(serial) == experiment_report_to_json(parallel);
    std::cout << "experiment D2 samples=" << samples << "  serial " << ts << "s  openmp " << tp
              << "s  match=" << (match ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp; both columns run serially\n";
#endif
    for (unsigned n : {5u, 6u, 7u}) bench_products(n);
    for (std::size_t samples : {2000ul, 10000ul}) bench_experiment(samples);
    return 0;
}
