#pragma once

#include <vector>

#include "json.hpp"
#include "svplab/modp.hpp"

namespace svplab {

// Normal form p = 2^A * m +/- 1 of an odd prime, sign fixed by p mod 4
// (+1 for p = 1 mod 4, -1 for p = 3 mod 4). m odd, A >= 2.
struct SplitParams {
    int sign;
    unsigned A;
    mpz_class m;
    PrimeModulus p;
};

// Which branch of the explicit factorization produced the factor list.
enum class FactorFamily {
    LinearRoots,     // p = 1 mod 4, n < A: 2^n linear factors x+u
    Binomial,        // p = 1 mod 4, n >= A: 2^{A-1} binomials x^{2^{n-A+1}}+u
    TrinomialSmall,  // p = 3 mod 4, n < A: 2^{n-1} trinomials x^2+gx+1
    TrinomialLarge,  // p = 3 mod 4, n >= A: 2^{A-1} trinomials x^{2^{n-A+1}}+dx^{2^{n-A}}-1
    Ramified2,       // p = 2: (x+1)^{2^n}
};

const char* to_string(FactorFamily family);

// Split pattern of x^{2^n}+1 mod p: e copies each of g irreducible factors
// of a common degree, with g*degree*e = 2^n.
struct FactorizationResult {
    unsigned n;
    PrimeModulus p;
    unsigned long e;
    unsigned long g;
    unsigned long degree;
    FactorFamily family;
    std::vector<FpPoly> factors;  // sorted by ascending coefficient tuple
};

// Decompose an odd prime as 2^A*m +/- 1. Throws InputError for p = 2.
SplitParams split_params(const PrimeModulus& p);

// Hardness-class parameter r: min{A-1, n} for p = 1 mod 4, min{A, n} for
// p = 3 mod 4, and n for p = 2. Prime-ideal SVP over p reduces to a
// 2^r-dimensional enumeration.
unsigned class_r(const PrimeModulus& p, unsigned n);

// Number of distinct prime ideals over p (factor count g), by the closed
// form counts; no polynomial work.
unsigned long factor_count(unsigned n, const PrimeModulus& p);

// Explicit factorization of x^{2^n}+1 over F_p. Requires n >= 1.
// For p = 3 mod 4 with n = 1 the Dickson formula degenerates to the single
// irreducible factor x^2+1 (gamma = 0), which the split-pattern checks
// accept as the TrinomialSmall family.
FactorizationResult factor_cyclotomic(unsigned n, const PrimeModulus& p);

// Independent oracle: recomputes (prod factors)^e mod p and compares with
// x^{2^n}+1, checks the family's count/degree pattern, and checks pairwise
// coprimality for odd p.
bool verify_factorization(const FactorizationResult& result);

// Record form {n, p, sign, A, m, e, g, degree, factors}, big integers as
// decimal strings.
nlohmann::json factorization_to_json(const FactorizationResult& result);

}  // namespace svplab
