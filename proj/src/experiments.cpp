#include "svplab/experiments.hpp"

#include <cmath>

namespace svplab {

namespace {

SampleRecord classify_sample(std::size_t index, const ExperimentConfig& config, Rng& rng) {
    SampleRecord rec{};
    rec.index = index;
    if (config.distribution == Distribution::D1) {
        rec.p = sample_distribution1(config.m_bound, rng);
        rec.factor_index = 0;
    } else {
        auto [p, fi] = sample_distribution2(config.m_bound, config.n, rng);
        rec.p = p;
        rec.factor_index = fi;
    }
    PrimeModulus p(rec.p);
    Classification cls = classify(config.n, p);
    rec.g = factor_count(config.n, p);
    rec.r = cls.r;
    rec.easy = cls.easy;
    return rec;
}

void aggregate(ExperimentReport& report) {
    for (const SampleRecord& rec : report.rows) {
        if (rec.easy) ++report.easy_count;
        if (rec.r < report.config.n) ++report.reducible_count;
        if (rec.p == 2) {
            ++report.two_count;
        } else if (rec.easy) {
            ++report.easy_count_no2;
        }
        ++report.class_histogram[rec.r];
    }
}

}  // namespace

namespace {

mpq_class make_fraction(std::size_t num, std::size_t den) {
    mpq_class q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

}  // namespace

mpq_class ExperimentReport::easy_fraction() const { return make_fraction(easy_count, rows.size()); }

mpq_class ExperimentReport::easy_fraction_no2() const {
    std::size_t denom = rows.size() - two_count;
    if (denom == 0) return 0;
    return make_fraction(easy_count_no2, denom);
}

mpq_class ExperimentReport::reducible_fraction() const {
    return make_fraction(reducible_count, rows.size());
}

mpq_class ExperimentReport::bound_d2() const {
    mpz_class denom = (mpz_class(1) << (config.n - 1)) + 1;
    return mpq_class(1) / mpq_class(denom);
}

double ExperimentReport::d3_density_formula() const {
    double m = mpz_get_d(config.m_bound.get_mpz_t());
    return std::ldexp(1.0, static_cast<int>(config.n) - 1) * std::log(m) / std::sqrt(m);
}

mpz_class sample_distribution1(const mpz_class& m_bound, Rng& rng) {
    if (m_bound < 3) throw InputError("sample_distribution1: bound must be >= 3");
    for (;;) {
        mpz_class candidate = rng.below(m_bound);
        if (candidate >= 2 && is_prime(candidate)) return candidate;
    }
}

std::pair<mpz_class, unsigned long> sample_distribution2(const mpz_class& m_bound, unsigned n, Rng& rng) {
    if (m_bound < 3) throw InputError("sample_distribution2: bound must be >= 3");
    unsigned long full = 1ul << n;
    for (;;) {
        mpz_class p = sample_distribution1(m_bound, rng);
        unsigned long g = factor_count(n, PrimeModulus(p));
        // accept with probability g / 2^n so ideals are uniform, not primes
        if (rng.u64_below(full) < g) {
            return {p, rng.u64_below(g)};
        }
    }
}

ExperimentReport run_experiment_serial(const ExperimentConfig& config) {
    if (config.samples < 1) throw InputError("run_experiment: need at least one sample");
    ExperimentReport report;
    report.config = config;
    report.rows.resize(config.samples);
    for (std::size_t i = 0; i < config.samples; ++i) {
        Rng rng(derive_seed(config.seed, i));
        report.rows[i] = classify_sample(i, config, rng);
    }
    aggregate(report);
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.samples < 1) throw InputError("run_experiment: need at least one sample");
    ExperimentReport report;
    report.config = config;
    report.rows.resize(config.samples);
    const long long total = static_cast<long long>(config.samples);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < total; ++i) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(i)));
        report.rows[i] = classify_sample(static_cast<std::size_t>(i), config, rng);
    }
    aggregate(report);
    return report;
}

nlohmann::json experiment_report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["distribution"] = report.config.distribution == Distribution::D1 ? 1 : 2;
    j["level"] = report.config.distribution == Distribution::D1 ? "prime" : "ideal";
    j["n"] = report.config.n;
    j["m_bound"] = report.config.m_bound.get_str();
    j["samples"] = report.rows.size();
    j["seed"] = report.config.seed;

    j["easy_count"] = report.easy_count;
    j["easy_fraction"] = report.easy_fraction().get_str();
    j["easy_fraction_value"] = report.easy_fraction().get_d();
    j["two_count"] = report.two_count;
    j["easy_fraction_excluding_two"] = report.easy_fraction_no2().get_str();
    j["easy_fraction_excluding_two_value"] = report.easy_fraction_no2().get_d();
    j["reducible_count"] = report.reducible_count;
    j["reducible_fraction"] = report.reducible_fraction().get_str();
    j["reducible_fraction_value"] = report.reducible_fraction().get_d();

    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [r, count] : report.class_histogram) hist[std::to_string(r)] = count;
    j["class_histogram"] = hist;

    j["bound_d2"] = report.bound_d2().get_str();
    j["bound_d2_value"] = report.bound_d2().get_d();
    j["d3_density_formula"] = report.d3_density_formula();
    return j;
}

void experiment_report_to_csv(const ExperimentReport& report, std::ostream& os) {
    os << "sample_index,p,g,r,easy\n";
    for (const SampleRecord& rec : report.rows) {
        os << rec.index << "," << rec.p.get_str() << "," << rec.g << "," << rec.r << ","
           << (rec.easy ? 1 : 0) << "\n";
    }
}

}  // namespace svplab
