#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "svplab/cyclo_factor.hpp"
#include "svplab/rng.hpp"
#include "svplab/svp_reduce.hpp"

namespace svplab {

enum class Distribution { D1 = 1, D2 = 2 };

struct ExperimentConfig {
    Distribution distribution;
    unsigned n;
    mpz_class m_bound;  // primes drawn below this bound
    std::size_t samples;
    std::uint64_t seed;
};

struct SampleRecord {
    std::size_t index;
    mpz_class p;
    unsigned long factor_index;  // 0 under D1
    unsigned long g;
    unsigned r;
    bool easy;
};

// Aggregates over the sampled classifications. Fractions are exact; the
// without-2 variants drop p = 2 samples from numerator and denominator the
// way the density proposition disregards the ramified prime.
struct ExperimentReport {
    ExperimentConfig config;
    std::vector<SampleRecord> rows;
    std::size_t easy_count = 0;
    std::size_t reducible_count = 0;  // r < n
    std::size_t two_count = 0;
    std::size_t easy_count_no2 = 0;
    std::map<unsigned, std::size_t> class_histogram;

    mpq_class easy_fraction() const;
    mpq_class easy_fraction_no2() const;
    mpq_class reducible_fraction() const;
    // 1/(1+2^{n-1}), the proven floor for the D2 easy fraction.
    mpq_class bound_d2() const;
    // 2^{n-1} * ln(M) / sqrt(M); the norm-bounded distribution is reported
    // analytically only, never sampled.
    double d3_density_formula() const;
};

// Uniform over {p prime : p < M} by rejection sampling. M >= 3.
mpz_class sample_distribution1(const mpz_class& m_bound, Rng& rng);

// Uniform over prime-ideal pairs {(p, i) : p < M, 0 <= i < g(p)}: draw p as
// in distribution 1, accept with probability g(p)/2^n, then pick the factor
// index uniformly.
std::pair<mpz_class, unsigned long> sample_distribution2(const mpz_class& m_bound, unsigned n, Rng& rng);

// Runs the configured experiment. Per-sample seeds are derived from the
// master seed, so the parallel sweep and the serial reference produce
// byte-identical reports regardless of thread count.
ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment_serial(const ExperimentConfig& config);

nlohmann::json experiment_report_to_json(const ExperimentReport& report);
// Columns: sample_index, p, g, r, easy.
void experiment_report_to_csv(const ExperimentReport& report, std::ostream& os);

}  // namespace svplab
