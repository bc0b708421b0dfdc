#pragma once

#include <functional>

#include "json.hpp"
#include "svplab/cyclo_factor.hpp"
#include "svplab/cyclo_ideal.hpp"

namespace svplab {

enum class SvpMethod {
    FastPm3,          // explicit 2-dim / 4-dim construction for p = +-3 mod 8
    Algorithm1,       // prime-ideal reduction to the class-r subfield, r < n
    Algorithm2,       // general-ideal loop, succeeded at some r_bar < n
    FullEnumeration,  // either path when the enumerated dimension is 2^n
    Ramified2,        // closed form for the unique prime over 2
};

const char* to_string(SvpMethod method);

// A shortest vector with its exact squared length. enum_dimension is the
// dimension actually enumerated (0 for the closed-form Ramified2 path);
// class_r is the hierarchy parameter r, or the r_bar Algorithm 2 found.
struct SvpResult {
    RingElement vector;
    mpz_class squared_length;
    std::size_t enum_dimension;
    unsigned class_r;
    SvpMethod method;
};

struct SolveOptions {
    std::size_t dimension_cap = 32;
    std::function<bool()> cancelled;
};

struct Classification {
    unsigned r;
    bool easy;  // p = +-3 mod 8, or p = 2
};

Classification classify(unsigned n, const PrimeModulus& p);

// The class-r subfield ideal (p, f(eta)) built directly in Z[eta] by
// rewriting f's exponents, possible whenever they are multiples of 2^{n-r}.
IntLattice prime_subfield_ideal_direct(unsigned n, const PrimeModulus& p, const FpPoly& factor, unsigned r);
// The same sublattice obtained by intersecting the full 2^n-dimensional
// ideal lattice with the subfield coordinates; kept as a cross-check route.
IntLattice prime_subfield_ideal_via_intersection(unsigned n, const PrimeModulus& p, const FpPoly& factor,
                                                 unsigned r);

// Shortest vector in the prime ideal (p, f(zeta)) for odd p: reduces to a
// 2^r-dimensional enumeration in the decomposition subfield and lifts the
// k = 0 representative. The factor is checked against the explicit
// factorization (FactorError if it does not appear); CapError when 2^r
// exceeds the cap, naming the class.
SvpResult solve_prime_svp(unsigned n, const PrimeModulus& p, const FpPoly& factor,
                          const SolveOptions& opts = {});
// Integer-lift convenience overload; coefficients are reduced mod p.
SvpResult solve_prime_svp(unsigned n, const PrimeModulus& p, const std::vector<mpz_class>& factor,
                          const SolveOptions& opts = {});

// The p = +-3 mod 8 fast path: builds the explicit 2-dim lattice
// {(u,1),(p,0)} (p = 5 mod 8) or the 4-dim trinomial lattice (p = 3 mod 8,
// n >= 2), enumerates it, and asserts squared length exactly p; a mismatch
// is a defect and throws logic_error.
SvpResult fast_svp_pm3(unsigned n, const PrimeModulus& p, const FpPoly& factor,
                       const SolveOptions& opts = {});

// Shortest vector in a general nonzero ideal: for r_bar = 1..n intersect
// with the ascending subfield chain and enumerate the first subfield whose
// lifted basis spans the ideal exactly. Needs no factorization of the
// ideal; terminates at r_bar = n at the latest.
SvpResult solve_ideal_svp(const IdealLattice& ideal, const SolveOptions& opts = {});

// Shortest vector 1 + zeta of the unique prime over 2, squared length 2.
SvpResult ramified_two_svp(unsigned n);

// The multiplicative loss factor sqrt(N/g) / relative_norm^(1/(2N)) a
// subfield Hermite-SVP solution incurs when lifted to the full field, with
// relative_norm = disc_L / disc_K^(N/g) (must be a positive integer).
struct HermiteFactorReport {
    unsigned long N;
    unsigned long g;
    mpz_class disc_L;
    mpz_class disc_K;
    mpz_class relative_norm;
    double factor;
    double bound;  // sqrt(N/g), always >= factor
};

HermiteFactorReport hermite_reduction_factor(unsigned long N, unsigned long g, const mpz_class& disc_L,
                                             const mpz_class& disc_K);

// {method, r, enum_dimension, squared_length, vector}
nlohmann::json svp_result_to_json(const SvpResult& result);
nlohmann::json hermite_report_to_json(const HermiteFactorReport& report);

}  // namespace svplab
