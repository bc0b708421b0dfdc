#include "svplab/cyclo_factor.hpp"

#include <algorithm>

namespace svplab {

namespace {

bool coeff_tuple_less(const FpPoly& a, const FpPoly& b) {
    std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

// The 2^{k-1} primitive 2^k-th roots of unity mod p: odd powers of one.
std::vector<mpz_class> primitive_root_set(const PrimeModulus& p, unsigned k) {
    mpz_class u = primitive_root_of_unity(p, k);
    mpz_class u2 = (u * u) % p.value();
    std::vector<mpz_class> set;
    set.reserve(1ull << (k - 1));
    mpz_class cur = u;
    for (unsigned long j = 0; j < (1ull << (k - 1)); ++j) {
        set.push_back(cur);
        cur = (cur * u2) % p.value();
    }
    return set;
}

}  // namespace

const char* to_string(FactorFamily family) {
    switch (family) {
        case FactorFamily::LinearRoots: return "linear_roots";
        case FactorFamily::Binomial: return "binomial";
        case FactorFamily::TrinomialSmall: return "trinomial_small";
        case FactorFamily::TrinomialLarge: return "trinomial_large";
        case FactorFamily::Ramified2: return "ramified_2";
    }
    return "?";
}

SplitParams split_params(const PrimeModulus& p) {
    if (p.is_two()) throw InputError("split_params: p = 2 has no 2^A*m +/- 1 normal form");
    int sign = mpz_fdiv_ui(p.value().get_mpz_t(), 4) == 1 ? +1 : -1;
    mpz_class shifted = p.value() - sign;
    unsigned long A = mpz_scan1(shifted.get_mpz_t(), 0);
    mpz_class m = shifted >> A;
    return SplitParams{sign, static_cast<unsigned>(A), m, p};
}

unsigned class_r(const PrimeModulus& p, unsigned n) {
    if (p.is_two()) return n;
    SplitParams sp = split_params(p);
    unsigned base = sp.sign > 0 ? sp.A - 1 : sp.A;
    return std::min(base, n);
}

unsigned long factor_count(unsigned n, const PrimeModulus& p) {
    if (p.is_two()) return 1;
    SplitParams sp = split_params(p);
    if (sp.sign > 0) {
        return n < sp.A ? (1ull << n) : (1ull << (sp.A - 1));
    }
    return n < sp.A ? (1ull << (n - 1)) : (1ull << (sp.A - 1));
}

FactorizationResult factor_cyclotomic(unsigned n, const PrimeModulus& p) {
    if (n < 1) throw InputError("factor_cyclotomic: n must be >= 1");
    if (n > 24) throw InputError("factor_cyclotomic: n too large for a dense factor table");
    FactorizationResult res{n, p, 1, 1, 1, FactorFamily::Ramified2, {}};

    if (p.is_two()) {
        res.e = 1ull << n;
        res.g = 1;
        res.degree = 1;
        res.family = FactorFamily::Ramified2;
        res.factors.push_back(FpPoly::from_coeffs({1, 1}, p));
        return res;
    }

    SplitParams sp = split_params(p);
    res.e = 1;
    if (sp.sign > 0) {
        if (n < sp.A) {
            res.family = FactorFamily::LinearRoots;
            res.degree = 1;
            for (const mpz_class& u : primitive_root_set(p, n + 1)) {
                res.factors.push_back(FpPoly({u, 1}, p));
            }
        } else {
            res.family = FactorFamily::Binomial;
            unsigned long d = 1ull << (n - sp.A + 1);
            res.degree = d;
            for (const mpz_class& u : primitive_root_set(p, sp.A)) {
                std::vector<mpz_class> cs(d + 1, 0);
                cs[0] = u;
                cs[d] = 1;
                res.factors.push_back(FpPoly(std::move(cs), p));
            }
        }
    } else {
        if (n < sp.A) {
            res.family = FactorFamily::TrinomialSmall;
            res.degree = 2;
            FpPoly dick = dickson_poly(1ull << (n - 1), 1, p);
            for (const mpz_class& gamma : poly_roots(dick)) {
                res.factors.push_back(FpPoly({1, gamma, 1}, p));
            }
        } else {
            res.family = FactorFamily::TrinomialLarge;
            unsigned long d = 1ull << (n - sp.A + 1);
            res.degree = d;
            FpPoly dick = dickson_poly(1ull << (sp.A - 1), -1, p);
            for (const mpz_class& delta : poly_roots(dick)) {
                std::vector<mpz_class> cs(d + 1, 0);
                cs[0] = -1;
                cs[d / 2] = delta;
                cs[d] = 1;
                res.factors.push_back(FpPoly(std::move(cs), p));
            }
        }
    }
    res.g = res.factors.size();
    if (res.g != factor_count(n, p)) {
        throw std::logic_error("factor_cyclotomic: root set smaller than the split pattern's count");
    }
    std::sort(res.factors.begin(), res.factors.end(), coeff_tuple_less);
    return res;
}

bool verify_factorization(const FactorizationResult& result) {
    const PrimeModulus& p = result.p;
    unsigned long N = 1ull << result.n;

    if (result.g != result.factors.size()) return false;
    if (result.g * result.degree * result.e != N) return false;
    for (const FpPoly& f : result.factors) {
        if (f.degree() != static_cast<long>(result.degree)) return false;
        if (f.leading() != 1) return false;
    }
    switch (result.family) {
        case FactorFamily::Ramified2:
            if (!p.is_two() || result.e != N || result.g != 1 || result.degree != 1) return false;
            break;
        case FactorFamily::LinearRoots:
            if (result.e != 1 || result.degree != 1) return false;
            break;
        case FactorFamily::Binomial:
        case FactorFamily::TrinomialSmall:
        case FactorFamily::TrinomialLarge:
            if (result.e != 1) return false;
            break;
    }

    // product identity (prod f_i)^e = x^N + 1 mod p
    FpPoly prod = FpPoly::constant(1, p);
    for (const FpPoly& f : result.factors) prod = prod * f;
    if (result.e > 1) {
        FpPoly acc = FpPoly::constant(1, p);
        FpPoly base = prod;
        unsigned long e = result.e;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        prod = acc;
    }
    std::vector<mpz_class> target(N + 1, 0);
    target[0] = 1;
    target[N] = 1;
    if (!(prod == FpPoly(std::move(target), p))) return false;

    // pairwise coprime (distinct irreducible factors for odd p)
    for (std::size_t i = 0; i < result.factors.size(); ++i) {
        for (std::size_t j = i + 1; j < result.factors.size(); ++j) {
            if (poly_gcd(result.factors[i], result.factors[j]).degree() != 0) return false;
        }
    }
    return true;
}

nlohmann::json factorization_to_json(const FactorizationResult& result) {
    nlohmann::json j;
    j["n"] = result.n;
    j["p"] = result.p.value().get_str();
    if (result.p.is_two()) {
        j["sign"] = 0;
        j["A"] = 0;
        j["m"] = "0";
    } else {
        SplitParams sp = split_params(result.p);
        j["sign"] = sp.sign;
        j["A"] = sp.A;
        j["m"] = sp.m.get_str();
    }
    j["e"] = result.e;
    j["g"] = result.g;
    j["degree"] = result.degree;
    j["family"] = to_string(result.family);
    nlohmann::json factors = nlohmann::json::array();
    for (const FpPoly& f : result.factors) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const mpz_class& c : f.coeffs()) coeffs.push_back(c.get_str());
        factors.push_back(coeffs);
    }
    j["factors"] = factors;
    return j;
}

}  // namespace svplab
