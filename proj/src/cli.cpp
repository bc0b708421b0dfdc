#include "svplab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "svplab/experiments.hpp"

namespace svplab {

namespace {

constexpr const char* kSchema = "ideal-svp-lab/1";

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw InputError("not a decimal integer: '" + s + "'");
    }
}

std::vector<mpz_class> parse_poly(const std::string& s) {
    std::vector<mpz_class> coeffs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(parse_mpz(tok));
    if (coeffs.empty()) throw InputError("empty polynomial");
    return coeffs;
}

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("IDEAL_SVP_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) {
            throw InputError("IDEAL_SVP_ENUM_CAP must be a positive integer");
        }
        return v;
    }
    return 32;
}

void emit(std::ostream& out, nlohmann::json j) {
    j["schema"] = kSchema;
    out << j.dump(2) << "\n";
}

struct Args {
    unsigned n = 0;
    std::string p;
    unsigned long factor_index = 0;
    std::string basis_file;
    std::string gens;
    std::string f_poly;
    int dist = 0;
    std::string m_bound;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    unsigned long degree = 0;
    unsigned long g = 0;
    std::string disc_l;
    std::string disc_k;
};

int dispatch(CLI::App& app, const Args& a, std::ostream& out) {
    SolveOptions opts;
    opts.dimension_cap = enumeration_cap();

    if (app.got_subcommand("factor")) {
        FactorizationResult res = factor_cyclotomic(a.n, PrimeModulus(parse_mpz(a.p)));
        emit(out, factorization_to_json(res));
        return 0;
    }
    if (app.got_subcommand("classify")) {
        PrimeModulus p(parse_mpz(a.p));
        Classification cls = classify(a.n, p);
        nlohmann::json j;
        j["n"] = a.n;
        j["p"] = p.value().get_str();
        j["r"] = cls.r;
        j["easy"] = cls.easy;
        j["g"] = factor_count(a.n, p);
        j["enum_dimension"] = 1ull << cls.r;
        if (!p.is_two()) {
            SplitParams sp = split_params(p);
            j["sign"] = sp.sign;
            j["A"] = sp.A;
            j["m"] = sp.m.get_str();
        }
        emit(out, j);
        return 0;
    }
    if (app.got_subcommand("svp-prime")) {
        PrimeModulus p(parse_mpz(a.p));
        SvpResult res = [&] {
            if (p.is_two()) {
                if (a.factor_index != 0) throw InputError("p = 2 has a single prime ideal");
                return ramified_two_svp(a.n);
            }
            FactorizationResult fact = factor_cyclotomic(a.n, p);
            if (a.factor_index >= fact.factors.size()) {
                throw InputError("factor index " + std::to_string(a.factor_index) + " out of range; g = " +
                                 std::to_string(fact.factors.size()));
            }
            return solve_prime_svp(a.n, p, fact.factors[a.factor_index], opts);
        }();
        emit(out, svp_result_to_json(res));
        return 0;
    }
    if (app.got_subcommand("svp-ideal")) {
        CycloParams params(a.n);
        int forms = (!a.basis_file.empty()) + (!a.gens.empty()) + (!a.f_poly.empty() || !a.p.empty());
        if (forms != 1) {
            throw InputError("svp-ideal needs exactly one of --basis, --gens, or --p with --f");
        }
        IdealLattice ideal = [&] {
            if (!a.basis_file.empty()) {
                std::ifstream in(a.basis_file);
                if (!in) throw InputError("cannot open basis file '" + a.basis_file + "'");
                return IdealLattice::from_basis_rows(params, read_basis(in));
            }
            if (!a.gens.empty()) {
                std::vector<RingElement> gens;
                std::stringstream ss(a.gens);
                std::string tok;
                while (std::getline(ss, tok, ';')) {
                    gens.push_back(RingElement::from_poly(params, parse_poly(tok)));
                }
                return IdealLattice::from_generators(params, gens);
            }
            if (a.p.empty() || a.f_poly.empty()) {
                throw InputError("the two-element form needs both --p and --f");
            }
            return IdealLattice::from_two_element(params, parse_mpz(a.p), parse_poly(a.f_poly));
        }();
        SvpResult res = solve_ideal_svp(ideal, opts);
        nlohmann::json j = svp_result_to_json(res);
        j["norm"] = ideal_norm(ideal).get_str();
        emit(out, j);
        return 0;
    }
    if (app.got_subcommand("experiment")) {
        ExperimentConfig config{a.dist == 1 ? Distribution::D1 : Distribution::D2, a.n, parse_mpz(a.m_bound),
                                a.samples, a.seed};
        ExperimentReport report = run_experiment(config);
        if (a.format == "csv") {
            experiment_report_to_csv(report, out);
        } else {
            emit(out, experiment_report_to_json(report));
        }
        return 0;
    }
    if (app.got_subcommand("hermite-bound")) {
        HermiteFactorReport report =
            hermite_reduction_factor(a.degree, a.g, parse_mpz(a.disc_l), parse_mpz(a.disc_k));
        emit(out, hermite_report_to_json(report));
        return 0;
    }
    throw CLI::CallForHelp();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ideal-svp-lab: ideal lattices in power-of-two cyclotomic rings"};
    app.require_subcommand(0, 1);
    Args a;

    CLI::App* factor = app.add_subcommand("factor", "factor x^{2^n}+1 over F_p");
    factor->add_option("--n", a.n, "log2 of the ring rank")->required();
    factor->add_option("--p", a.p, "prime")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "hardness class of prime ideals over p");
    classify_cmd->add_option("--n", a.n)->required();
    classify_cmd->add_option("--p", a.p)->required();

    CLI::App* svp_prime = app.add_subcommand("svp-prime", "shortest vector in a prime ideal");
    svp_prime->add_option("--n", a.n)->required();
    svp_prime->add_option("--p", a.p)->required();
    svp_prime->add_option("--factor-index", a.factor_index, "which factor of x^{2^n}+1 (default 0)");

    CLI::App* svp_ideal = app.add_subcommand("svp-ideal", "shortest vector in a general ideal");
    svp_ideal->add_option("--n", a.n)->required();
    svp_ideal->add_option("--basis", a.basis_file, "basis file (plain-text matrix format)");
    svp_ideal->add_option("--gens", a.gens, "generators c0,c1,...;c0,c1,... (coefficients, ascending)");
    svp_ideal->add_option("--p", a.p, "two-element form: the prime");
    svp_ideal->add_option("--f", a.f_poly, "two-element form: polynomial c0,c1,...");

    CLI::App* experiment = app.add_subcommand("experiment", "sample random prime ideals and classify them");
    experiment->add_option("--dist", a.dist, "1 = uniform primes, 2 = uniform prime ideals")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    experiment->add_option("--n", a.n)->required();
    experiment->add_option("--m-bound", a.m_bound, "sample primes below this bound")->required();
    experiment->add_option("--samples", a.samples)->required()->check(CLI::PositiveNumber);
    experiment->add_option("--seed", a.seed)->required();
    experiment->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* hermite = app.add_subcommand("hermite-bound", "subfield Hermite-SVP loss factor");
    hermite->add_option("--degree", a.degree, "field degree N")->required()->check(CLI::PositiveNumber);
    hermite->add_option("--g", a.g, "number of primes above p")->required()->check(CLI::PositiveNumber);
    hermite->add_option("--disc-l", a.disc_l, "discriminant of L")->required();
    hermite->add_option("--disc-k", a.disc_k, "discriminant of the subfield K")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        return dispatch(app, a, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const DimensionCapError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivisibilityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FactorError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RankError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace svplab
