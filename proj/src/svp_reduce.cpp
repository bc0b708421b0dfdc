#include "svplab/svp_reduce.hpp"

#include <algorithm>
#include <cmath>

namespace svplab {

namespace {

// Canonical representative of f in the factor list of x^{2^n}+1 mod p.
// Throws FactorError when f does not project to one of the factors.
FpPoly validated_factor(unsigned n, const PrimeModulus& p, const FpPoly& factor) {
    if (!(factor.modulus() == p)) throw InputError("factor carries a different modulus");
    FactorizationResult fact = factor_cyclotomic(n, p);
    for (const FpPoly& f : fact.factors) {
        if (f == factor) return f;
    }
    throw FactorError("polynomial is not an irreducible factor of x^{2^" + std::to_string(n) + "}+1 mod " +
                      p.value().get_str());
}

EnumOptions enum_options(const SolveOptions& opts) {
    return EnumOptions{opts.dimension_cap, opts.cancelled};
}

SvpResult lift_subfield_result(const CycloParams& params, unsigned r, const LatticeVector& v,
                               SvpMethod method) {
    RingElement lifted = embed_subfield_vector(params, r, v.coords);
    return SvpResult{lifted, v.squared_length, v.coords.size(), r, method};
}

}  // namespace

const char* to_string(SvpMethod method) {
    switch (method) {
        case SvpMethod::FastPm3: return "fast_pm3";
        case SvpMethod::Algorithm1: return "algorithm1";
        case SvpMethod::Algorithm2: return "algorithm2";
        case SvpMethod::FullEnumeration: return "full_enumeration";
        case SvpMethod::Ramified2: return "ramified_2";
    }
    return "?";
}

Classification classify(unsigned n, const PrimeModulus& p) {
    unsigned r = class_r(p, n);
    bool easy = p.is_two();
    if (!easy) {
        unsigned long residue = mpz_fdiv_ui(p.value().get_mpz_t(), 8);
        easy = residue == 3 || residue == 5;
    }
    return Classification{r, easy};
}

IntLattice prime_subfield_ideal_direct(unsigned n, const PrimeModulus& p, const FpPoly& factor, unsigned r) {
    std::size_t stride = std::size_t(1) << (n - r);
    std::vector<mpz_class> f_eta(factor.coeffs().size() / stride + 1, 0);
    for (std::size_t e = 0; e < factor.coeffs().size(); ++e) {
        if (factor.coeff(e) == 0) continue;
        if (e % stride != 0) throw InputError("factor exponents incompatible with the class-r subfield");
        f_eta[e / stride] = factor.coeff(e);
    }
    CycloParams sub(r);
    return IdealLattice::from_two_element(sub, p.value(), f_eta).lattice();
}

IntLattice prime_subfield_ideal_via_intersection(unsigned n, const PrimeModulus& p, const FpPoly& factor,
                                                 unsigned r) {
    CycloParams params(n);
    IdealLattice full = IdealLattice::from_two_element(params, p.value(), factor.coeffs());
    return subfield_intersection(full, r).lattice;
}

SvpResult solve_prime_svp(unsigned n, const PrimeModulus& p, const FpPoly& factor, const SolveOptions& opts) {
    if (p.is_two()) throw InputError("solve_prime_svp: p must be odd; the prime over 2 is ramified_two_svp");
    FpPoly f = validated_factor(n, p, factor);
    unsigned r = class_r(p, n);
    if ((std::size_t(1) << r) > opts.dimension_cap) {
        throw CapError("solve_prime_svp: class r=" + std::to_string(r) + " needs a 2^" + std::to_string(r) +
                       "-dimensional enumeration, above the cap of " + std::to_string(opts.dimension_cap));
    }
    IntLattice c = prime_subfield_ideal_direct(n, p, f, r);
    LatticeVector v = svp_exact(c, enum_options(opts));
    SvpMethod method = r == n ? SvpMethod::FullEnumeration : SvpMethod::Algorithm1;
    return lift_subfield_result(CycloParams(n), r, v, method);
}

SvpResult solve_prime_svp(unsigned n, const PrimeModulus& p, const std::vector<mpz_class>& factor,
                          const SolveOptions& opts) {
    return solve_prime_svp(n, p, FpPoly(factor, p), opts);
}

SvpResult fast_svp_pm3(unsigned n, const PrimeModulus& p, const FpPoly& factor, const SolveOptions& opts) {
    if (p.is_two()) throw InputError("fast_svp_pm3: p must be odd");
    unsigned long residue = mpz_fdiv_ui(p.value().get_mpz_t(), 8);
    if (residue != 3 && residue != 5) {
        throw InputError("fast_svp_pm3: p = " + p.value().get_str() + " is not +-3 mod 8");
    }
    if (residue == 3 && n < 2) {
        throw InputError("fast_svp_pm3: the trinomial split needs n >= 2 for p = 3 mod 8");
    }
    FpPoly f = validated_factor(n, p, factor);
    unsigned r = residue == 5 ? 1 : 2;
    IntLattice lat = prime_subfield_ideal_direct(n, p, f, r);
    LatticeVector v = svp_exact(lat, enum_options(opts));
    if (v.squared_length != p.value()) {
        throw std::logic_error("fast_svp_pm3: enumerated squared length differs from p");
    }
    return lift_subfield_result(CycloParams(n), r, v, SvpMethod::FastPm3);
}

SvpResult solve_ideal_svp(const IdealLattice& ideal, const SolveOptions& opts) {
    const CycloParams& params = ideal.params();
    for (unsigned r_bar = 1; r_bar <= params.n; ++r_bar) {
        SubfieldIdeal c = subfield_intersection(ideal, r_bar);
        if (!direct_sum_check(ideal, c)) continue;
        if ((std::size_t(1) << r_bar) > opts.dimension_cap) {
            throw CapError("solve_ideal_svp: decomposition first succeeds at r_bar=" + std::to_string(r_bar) +
                           ", above the cap of " + std::to_string(opts.dimension_cap));
        }
        LatticeVector v = svp_exact(c.lattice, enum_options(opts));
        SvpMethod method = r_bar == params.n ? SvpMethod::FullEnumeration : SvpMethod::Algorithm2;
        return lift_subfield_result(params, r_bar, v, method);
    }
    throw std::logic_error("solve_ideal_svp: loop fell through r_bar = n");  // unreachable
}

SvpResult ramified_two_svp(unsigned n) {
    CycloParams params(n);
    RingElement v = RingElement::constant(params, 1) + RingElement::zeta_pow(params, 1);
    return SvpResult{v, 2, 0, n, SvpMethod::Ramified2};
}

HermiteFactorReport hermite_reduction_factor(unsigned long N, unsigned long g, const mpz_class& disc_L,
                                             const mpz_class& disc_K) {
    if (N == 0 || g == 0 || N % g != 0) {
        throw DivisibilityError("hermite_reduction_factor: g must divide N");
    }
    if (disc_L <= 0 || disc_K <= 0) throw InputError("hermite_reduction_factor: discriminants must be positive");
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), disc_K.get_mpz_t(), N / g);
    if (!mpz_divisible_p(disc_L.get_mpz_t(), denom.get_mpz_t())) {
        throw DivisibilityError("hermite_reduction_factor: disc_K^(N/g) does not divide disc_L");
    }
    mpz_class rel = disc_L / denom;

    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, rel.get_mpz_t());
    double log_rel = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    double bound = std::sqrt(static_cast<double>(N) / static_cast<double>(g));
    double factor = bound * std::exp(-log_rel / (2.0 * static_cast<double>(N)));
    return HermiteFactorReport{N, g, disc_L, disc_K, rel, factor, bound};
}

namespace {

nlohmann::json int_or_string(const mpz_class& v) {
    if (v.fits_slong_p()) return nlohmann::json(v.get_si());
    return nlohmann::json(v.get_str());
}

}  // namespace

nlohmann::json svp_result_to_json(const SvpResult& result) {
    nlohmann::json j;
    j["method"] = to_string(result.method);
    j["r"] = result.class_r;
    j["enum_dimension"] = result.enum_dimension;
    j["squared_length"] = int_or_string(result.squared_length);
    nlohmann::json vec = nlohmann::json::array();
    for (const mpz_class& c : result.vector.coeffs()) vec.push_back(int_or_string(c));
    j["vector"] = vec;
    return j;
}

nlohmann::json hermite_report_to_json(const HermiteFactorReport& report) {
    nlohmann::json j;
    j["degree"] = report.N;
    j["g"] = report.g;
    j["disc_l"] = report.disc_L.get_str();
    j["disc_k"] = report.disc_K.get_str();
    j["relative_norm"] = report.relative_norm.get_str();
    j["factor"] = report.factor;
    j["bound"] = report.bound;
    return j;
}

}  // namespace svplab
