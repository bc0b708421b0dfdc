#include "svplab/experiments.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"

using namespace svplab;

TEST_CASE("distribution 1 is uniform over primes below the bound") {
    Rng rng(1);
    // M = 4: support {2, 3}, each about half
    std::map<unsigned long, int> counts;
    for (int i = 0; i < 10000; ++i) {
        mpz_class p = sample_distribution1(4, rng);
        ++counts[mpz_get_ui(p.get_mpz_t())];
    }
    CHECK(counts.size() == 2);
    CHECK(counts[2] + counts[3] == 10000);
    CHECK(counts[2] > 4600);
    CHECK(counts[3] > 4600);

    // M = 100: all 25 primes below 100 show up
    std::map<unsigned long, int> support;
    for (int i = 0; i < 20000; ++i) {
        mpz_class p = sample_distribution1(100, rng);
        CHECK(p < 100);
        CHECK(is_prime(p));
        ++support[mpz_get_ui(p.get_mpz_t())];
    }
    CHECK(support.size() == 25);

    CHECK_THROWS_AS(sample_distribution1(2, rng), InputError);
}

TEST_CASE("distribution 2 is uniform over prime ideals") {
    const unsigned n = 2;
    const unsigned long m = 20;
    // support: (p, index) for p in {2,3,5,7,11,13,17,19} with g ideals each
    std::size_t total_ideals = 0;
    for (unsigned long pv : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul}) {
        total_ideals += factor_count(n, PrimeModulus(pv));
    }
    CHECK(total_ideals == 17);
    CHECK(factor_count(n, PrimeModulus(11u)) == 2);  // 11 = 8k+3: exactly two ideals
    CHECK(factor_count(n, PrimeModulus(5u)) == 2);   // 5 = 8k-3: exactly two ideals
    CHECK(factor_count(n, PrimeModulus(17u)) == 4);  // split completely: 2^n ideals

    Rng rng(2);
    std::map<std::pair<unsigned long, unsigned long>, int> counts;
    const int draws = 17000;
    for (int i = 0; i < draws; ++i) {
        auto [p, idx] = sample_distribution2(m, n, rng);
        unsigned long pv = mpz_get_ui(p.get_mpz_t());
        CHECK(idx < factor_count(n, PrimeModulus(pv)));
        ++counts[{pv, idx}];
    }
    CHECK(counts.size() == total_ideals);
    // each ideal expects draws/17 = 1000 hits; allow ~6 sigma
    for (const auto& [key, count] : counts) {
        CAPTURE(key.first);
        CAPTURE(key.second);
        CHECK(count > 800);
        CHECK(count < 1200);
    }
}

TEST_CASE("experiment reports are deterministic and scheduler independent") {
    ExperimentConfig config{Distribution::D2, 3, mpz_class(2000), 400, 1234567};
    ExperimentReport a = run_experiment(config);
    ExperimentReport b = run_experiment(config);
    ExperimentReport serial = run_experiment_serial(config);
    CHECK(experiment_report_to_json(a).dump() == experiment_report_to_json(b).dump());
    CHECK(experiment_report_to_json(a).dump() == experiment_report_to_json(serial).dump());

    std::ostringstream csv_a, csv_serial;
    experiment_report_to_csv(a, csv_a);
    experiment_report_to_csv(serial, csv_serial);
    CHECK(csv_a.str() == csv_serial.str());
}

TEST_CASE("report aggregates are consistent") {
    ExperimentConfig config{Distribution::D1, 4, mpz_class(50000), 600, 98765};
    ExperimentReport rep = run_experiment(config);

    std::size_t hist_total = 0;
    for (const auto& [r, count] : rep.class_histogram) {
        CHECK(r <= config.n);
        hist_total += count;
    }
    CHECK(hist_total == rep.rows.size());
    CHECK(rep.rows.size() == 600);

    for (std::size_t i = 0; i < 50; ++i) {
        const SampleRecord& rec = rep.rows[i];
        PrimeModulus p(rec.p);
        CHECK(rec.g == factor_count(config.n, p));
        CHECK(rec.r == class_r(p, config.n));
        CHECK(rec.easy == classify(config.n, p).easy);
    }

    CHECK(rep.easy_fraction() >= 0);
    CHECK(rep.easy_fraction() <= 1);
    // every +-3 mod 8 prime has r <= 2 < n = 4
    CHECK(rep.reducible_fraction() >= rep.easy_fraction_no2());

    // samples = 1 edge
    ExperimentConfig single{Distribution::D1, 4, mpz_class(100), 1, 5};
    ExperimentReport one = run_experiment(single);
    std::size_t total = 0;
    for (const auto& [r, count] : one.class_histogram) total += count;
    CHECK(total == 1);
}

TEST_CASE("analytic echoes") {
    ExperimentConfig config{Distribution::D2, 4, mpz_class(100000), 1, 7};
    ExperimentReport rep = run_experiment(config);

    CHECK(rep.bound_d2() == mpq_class(1, 9));
    double expected = std::ldexp(1.0, 3) * std::log(100000.0) / std::sqrt(100000.0);
    CHECK(std::abs(rep.d3_density_formula() - expected) < 1e-12);

    nlohmann::json j = experiment_report_to_json(rep);
    CHECK(j["bound_d2"] == "1/9");
    CHECK(j["level"] == "ideal");
    CHECK(j["samples"] == 1);
}

TEST_CASE("csv layout") {
    ExperimentConfig config{Distribution::D1, 3, mpz_class(100), 3, 11};
    ExperimentReport rep = run_experiment(config);
    std::ostringstream os;
    experiment_report_to_csv(rep, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "sample_index,p,g,r,easy");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(line.find(',') != std::string::npos);
    }
    CHECK(rows == 3);
}
