#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svplab/errors.hpp"
#include "svplab/rng.hpp"

namespace svplab {

// Miller-Rabin primality test. Deterministic witness set below 2^64,
// 40 random rounds above.
bool is_prime(const mpz_class& n);

// A certified prime modulus. Construction runs the primality test and
// throws InputError on composites, so downstream code may assume p prime.
class PrimeModulus {
  public:
    explicit PrimeModulus(mpz_class p);
    explicit PrimeModulus(unsigned long p) : PrimeModulus(mpz_class(p)) {}

    const mpz_class& value() const { return p_; }
    bool is_two() const { return p_ == 2; }
    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }

  private:
    mpz_class p_;
};

// base^exp mod p by square-and-multiply. Requires 0 <= base < p.
mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const PrimeModulus& p);

// x reduced to [0, p).
mpz_class normalize_mod(const mpz_class& x, const PrimeModulus& p);

// Signed representative in (-p/2, p/2]; the view used when pulling residues
// back into lattice coordinates.
mpz_class signed_residue(const mpz_class& x, const PrimeModulus& p);

// Inverse of x mod p; x must be nonzero mod p.
mpz_class inv_mod(const mpz_class& x, const PrimeModulus& p);

// An element u of multiplicative order exactly 2^k mod p, found by powering
// random bases to (p-1)/2^k and retrying until the order is exact. The full
// set of primitive 2^k-th roots is {u^j : j odd, 1 <= j < 2^k}.
// Throws DivisibilityError if 2^k does not divide p-1.
mpz_class primitive_root_of_unity(const PrimeModulus& p, unsigned k, Rng& rng);

// Deterministic convenience overload: seeds the sampler from (p, k).
mpz_class primitive_root_of_unity(const PrimeModulus& p, unsigned k);

// Dense polynomial over F_p, coefficients ascending, leading coefficient
// nonzero unless the polynomial is zero (empty coefficient vector).
class FpPoly {
  public:
    FpPoly(std::vector<mpz_class> coeffs, PrimeModulus p);

    static FpPoly zero(const PrimeModulus& p) { return FpPoly({}, p); }
    static FpPoly constant(const mpz_class& c, const PrimeModulus& p);
    // x^deg + ... from ascending coefficient list, reducing mod p.
    static FpPoly from_coeffs(const std::vector<long>& coeffs, const PrimeModulus& p);
    // x^k
    static FpPoly monomial(unsigned long k, const PrimeModulus& p);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const PrimeModulus& modulus() const { return p_; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& coeff(std::size_t i) const;
    mpz_class leading() const;

    bool operator==(const FpPoly& o) const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(const mpz_class& c) const;

    // Monic associate (unit multiple with leading coefficient 1).
    FpPoly monic() const;

    mpz_class eval(const mpz_class& x) const;

    // Euclidean division: *this = q*divisor + r with deg r < deg divisor.
    // The inner loop walks only the divisor's nonzero coefficients, so
    // division by sparse binomials/trinomials stays cheap at high degree.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
    FpPoly rem(const FpPoly& divisor) const { return divmod(divisor).second; }

    std::string to_string() const;

  private:
    void require_same_modulus(const FpPoly& o) const;
    void trim();
    std::vector<mpz_class> coeffs_;
    PrimeModulus p_;
};

// Monic gcd; gcd(0, 0) = 0.
FpPoly poly_gcd(FpPoly a, FpPoly b);

// base^exp reduced mod modpoly (modpoly nonconstant).
FpPoly poly_pow_mod(const FpPoly& base, const mpz_class& exp, const FpPoly& modpoly);

// f*g, reduced mod modpoly when supplied.
FpPoly poly_mul_mod(const FpPoly& f, const FpPoly& g, const std::optional<FpPoly>& modpoly = std::nullopt);

// Dickson polynomial D_s(x, a) mod p from the closed form
//   sum_{i<=s/2} s/(s-i) * C(s-i, i) * (-a)^i * x^{s-2i}.
FpPoly dickson_poly(unsigned long s, const mpz_class& a, const PrimeModulus& p);

// All roots of f in F_p, each once, ascending. Linear factors are isolated
// by gcd with x^p - x, then split by randomized equal-degree gcds with
// (x+c)^{(p-1)/2} - 1 (Cantor-Zassenhaus).
std::vector<mpz_class> poly_roots(const FpPoly& f, Rng& rng);

// Deterministic convenience overload: seeds the splitter from f.
std::vector<mpz_class> poly_roots(const FpPoly& f);

}  // namespace svplab
