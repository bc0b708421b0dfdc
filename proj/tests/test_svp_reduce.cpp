#include "svplab/svp_reduce.hpp"

#include <cmath>

#include "doctest.h"

using namespace svplab;

namespace {

IdealLattice prime_ideal(unsigned n, unsigned long p, const FpPoly& f) {
    return IdealLattice::from_two_element(CycloParams(n), p, f.coeffs());
}

}  // namespace

TEST_CASE("classification") {
    Classification c1 = classify(10, PrimeModulus(5u));
    CHECK(c1.r == 1);
    CHECK(c1.easy);

    Classification c2 = classify(10, PrimeModulus(7u));
    CHECK(c2.r == 3);
    CHECK_FALSE(c2.easy);

    Classification c3 = classify(3, PrimeModulus(17u));
    CHECK(c3.r == 3);
    CHECK_FALSE(c3.easy);

    Classification c4 = classify(6, PrimeModulus(2u));
    CHECK(c4.r == 6);
    CHECK(c4.easy);

    CHECK(classify(4, PrimeModulus(11u)).easy);  // 11 = 3 mod 8
    CHECK(classify(4, PrimeModulus(13u)).easy);  // 13 = 5 mod 8
    CHECK_FALSE(classify(4, PrimeModulus(23u)).easy);
}

TEST_CASE("solve_prime_svp on the worked examples") {
    // (5, zeta^2+2) at n = 2: class r = 1, 2-dim enumeration
    {
        PrimeModulus p(5u);
        FpPoly f = FpPoly::from_coeffs({2, 0, 1}, p);
        SvpResult res = solve_prime_svp(2, p, f);
        CHECK(res.squared_length == 5);
        CHECK(res.enum_dimension == 2);
        CHECK(res.class_r == 1);
        CHECK(res.method == SvpMethod::Algorithm1);
        CHECK(prime_ideal(2, 5, f).contains(res.vector));
        CHECK(res.vector.squared_norm() == 5);
    }
    // (3, x^2+x-1) at n = 2: class r = 2 = n, full enumeration
    {
        PrimeModulus p(3u);
        FpPoly f = FpPoly::from_coeffs({-1, 1, 1}, p);
        SvpResult res = solve_prime_svp(2, p, f);
        CHECK(res.squared_length == 3);
        CHECK(res.enum_dimension == 4);
        CHECK(res.method == SvpMethod::FullEnumeration);
        CHECK(prime_ideal(2, 3, f).contains(res.vector));
    }
    // (17, x+2) at n = 2: split completely, no reduction
    {
        PrimeModulus p(17u);
        FpPoly f = FpPoly::from_coeffs({2, 1}, p);
        SvpResult res = solve_prime_svp(2, p, f);
        CHECK(res.enum_dimension == 4);
        CHECK(res.class_r == 2);
        CHECK(res.method == SvpMethod::FullEnumeration);
        LatticeVector full = svp_exact(prime_ideal(2, 17, f).lattice());
        CHECK(res.squared_length == full.squared_length);
    }
}

TEST_CASE("solve_prime_svp input validation") {
    PrimeModulus p5(5u);
    CHECK_THROWS_AS(solve_prime_svp(2, p5, FpPoly::from_coeffs({1, 0, 1}, p5)), FactorError);
    CHECK_THROWS_AS(solve_prime_svp(2, PrimeModulus(2u), FpPoly::from_coeffs({1, 1}, PrimeModulus(2u))),
                    InputError);

    // 257 = 2^8 + 1: class r = 7 at n = 10 wants a 128-dim enumeration
    PrimeModulus p257(257u);
    FactorizationResult fact = factor_cyclotomic(10, p257);
    CHECK_THROWS_AS(solve_prime_svp(10, p257, fact.factors[0]), CapError);
}

TEST_CASE("direct subfield construction agrees with intersection") {
    for (unsigned long pv : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul}) {
        PrimeModulus p(pv);
        for (unsigned n : {2u, 3u, 4u}) {
            unsigned r = class_r(p, n);
            FactorizationResult fact = factor_cyclotomic(n, p);
            for (const FpPoly& f : fact.factors) {
                CAPTURE(pv);
                CAPTURE(n);
                IntLattice direct = prime_subfield_ideal_direct(n, p, f, r);
                IntLattice generic = prime_subfield_ideal_via_intersection(n, p, f, r);
                CHECK(direct == generic);
            }
        }
    }
}

TEST_CASE("fast path for p = +-3 mod 8") {
    {
        PrimeModulus p(5u);
        SvpResult res = fast_svp_pm3(2, p, FpPoly::from_coeffs({2, 0, 1}, p));
        CHECK(res.squared_length == 5);
        CHECK(res.method == SvpMethod::FastPm3);
        CHECK(res.enum_dimension == 2);
    }
    {
        PrimeModulus p(3u);
        SvpResult res = fast_svp_pm3(2, p, FpPoly::from_coeffs({-1, 1, 1}, p));
        CHECK(res.squared_length == 3);
        CHECK(res.enum_dimension == 4);
    }
    {
        // n = 5, p = 11: trinomial x^16 + d*x^8 - 1 with d^2 = -2 mod 11
        PrimeModulus p(11u);
        FactorizationResult fact = factor_cyclotomic(5, p);
        SvpResult res = fast_svp_pm3(5, p, fact.factors[0]);
        CHECK(res.squared_length == 11);
        CHECK(res.enum_dimension == 4);
        CHECK(prime_ideal(5, 11, fact.factors[0]).contains(res.vector));
    }
    {
        // n = 1 with p = 5 mod 8 linear factors still gives sqrt(p)
        PrimeModulus p(13u);
        FactorizationResult fact = factor_cyclotomic(1, p);
        SvpResult res = fast_svp_pm3(1, p, fact.factors[0]);
        CHECK(res.squared_length == 13);
    }

    PrimeModulus p7(7u);
    CHECK_THROWS_AS(fast_svp_pm3(3, p7, FpPoly::from_coeffs({1, 1}, p7)), InputError);
    PrimeModulus p17(17u);
    CHECK_THROWS_AS(fast_svp_pm3(2, p17, FpPoly::from_coeffs({2, 1}, p17)), InputError);
    PrimeModulus p3(3u);
    CHECK_THROWS_AS(fast_svp_pm3(1, p3, FpPoly::from_coeffs({1, 0, 1}, p3)), InputError);
}

TEST_CASE("squared lengths in the +-3 sublattices vanish mod p") {
    Rng rng(61);
    for (unsigned long pv : {5ul, 11ul, 13ul, 19ul, 29ul, 37ul}) {
        PrimeModulus p(pv);
        unsigned n = 4;
        unsigned r = class_r(p, n);
        FpPoly f = factor_cyclotomic(n, p).factors[0];
        IntLattice lat = prime_subfield_ideal_direct(n, p, f, r);
        for (int trial = 0; trial < 50; ++trial) {
            IntVec v(lat.dim(), 0);
            for (std::size_t i = 0; i < lat.dim(); ++i) {
                long c = static_cast<long>(rng.u64_below(7)) - 3;
                for (std::size_t j = 0; j < lat.dim(); ++j) v[j] += c * lat.basis()[i][j];
            }
            mpz_class sq = 0;
            for (const mpz_class& x : v) sq += x * x;
            CHECK(sq % p.value() == 0);
        }
    }
}

TEST_CASE("algorithm 2 on principal and product ideals") {
    CycloParams p2(2);
    // (5) at n = 2 decomposes at r_bar = 1
    IdealLattice five = IdealLattice::from_generators(p2, {RingElement::constant(p2, 5)});
    SvpResult res = solve_ideal_svp(five);
    CHECK(res.squared_length == 25);
    CHECK(res.enum_dimension == 2);
    CHECK(res.class_r == 1);
    CHECK(res.method == SvpMethod::Algorithm2);
    CHECK(five.contains(res.vector));

    // the coprime product over 5 collapses to (5)
    IdealLattice prod = ideal_product(IdealLattice::from_two_element(p2, 5, {2, 0, 1}),
                                      IdealLattice::from_two_element(p2, 5, {3, 0, 1}));
    SvpResult res2 = solve_ideal_svp(prod);
    CHECK(res2.squared_length == 25);
    CHECK(res2.enum_dimension == 2);

    // product of classes r = 1 and r = 2 at n = 3 succeeds at r_bar = 2
    CycloParams p3(3);
    IdealLattice a = IdealLattice::from_two_element(p3, 5, {2, 0, 0, 0, 1});
    IdealLattice b = IdealLattice::from_two_element(p3, 3, {-1, 0, 1, 0, 1});
    IdealLattice ab = ideal_product(a, b);
    SvpResult res3 = solve_ideal_svp(ab);
    CHECK(res3.enum_dimension == 4);
    CHECK(res3.class_r == 2);
    LatticeVector full = svp_exact(ab.lattice());
    CHECK(res3.squared_length == full.squared_length);
    CHECK(ab.contains(res3.vector));
}

TEST_CASE("algorithm 2 improves on the max-class bound for (2, zeta-1)^2") {
    for (unsigned n : {3u, 4u}) {
        CycloParams params(n);
        IdealLattice ram = IdealLattice::from_two_element(params, 2, {-1, 1});
        IdealLattice sq = ideal_product(ram, ram);
        SvpResult res = solve_ideal_svp(sq);
        CHECK(res.class_r == n - 1);
        CHECK(res.enum_dimension == (std::size_t(1) << (n - 1)));
        CHECK(res.squared_length == 2);
        CHECK(sq.contains(res.vector));
    }
}

TEST_CASE("algorithm 2 matches algorithm 1 on prime ideals") {
    for (unsigned long pv : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        PrimeModulus p(pv);
        for (unsigned n : {2u, 3u}) {
            FactorizationResult fact = factor_cyclotomic(n, p);
            unsigned r = class_r(p, n);
            for (const FpPoly& f : fact.factors) {
                SvpResult direct = solve_prime_svp(n, p, f);
                SvpResult generic = solve_ideal_svp(prime_ideal(n, pv, f));
                CAPTURE(pv);
                CAPTURE(n);
                CHECK(direct.squared_length == generic.squared_length);
                CHECK(generic.enum_dimension <= (std::size_t(1) << r));
            }
        }
    }
}

TEST_CASE("algorithm 2 cap error names the failing class") {
    // 257 splits completely at n = 6; the loop first succeeds at r_bar = 6
    CycloParams params(6);
    FpPoly f = factor_cyclotomic(6, PrimeModulus(257u)).factors[0];
    IdealLattice split = IdealLattice::from_two_element(params, 257, f.coeffs());
    CHECK_THROWS_AS(solve_ideal_svp(split), CapError);
}

TEST_CASE("ramified prime over two") {
    SvpResult r2 = ramified_two_svp(2);
    CHECK(r2.squared_length == 2);
    CHECK(r2.vector.coeffs() == IntVec{mpz_class(1), mpz_class(1), mpz_class(0), mpz_class(0)});
    CHECK(r2.enum_dimension == 0);
    CHECK(r2.method == SvpMethod::Ramified2);

    SvpResult r5 = ramified_two_svp(5);
    CHECK(r5.squared_length == 2);

    CycloParams p5(5);
    IdealLattice ideal = IdealLattice::from_generators(
        p5, {RingElement::constant(p5, 2),
             RingElement::constant(p5, 1) + RingElement::zeta_pow(p5, 1)});
    CHECK(ideal.contains(r5.vector));
}

TEST_CASE("hermite reduction factor") {
    HermiteFactorReport unitnorm = hermite_reduction_factor(8, 2, 81, 3);  // 3^4 * 1
    CHECK(unitnorm.relative_norm == 1);
    CHECK(unitnorm.factor == doctest::Approx(2.0));

    // adjacent cyclotomic subfield: disc_L = 2^{n 2^n}, disc_K = 2^{(n-1)2^{n-1}}
    for (unsigned n = 2; n <= 8; ++n) {
        unsigned long N = 1ul << n;
        mpz_class disc_l = CycloParams(n).discriminant();
        mpz_class disc_k = CycloParams(n - 1).discriminant();
        HermiteFactorReport rep = hermite_reduction_factor(N, N / 2, disc_l, disc_k);
        CHECK(rep.relative_norm == mpz_class(1) << N);
        CHECK(std::abs(rep.factor - 1.0) < 1e-12);
    }

    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned long g = 1ul << rng.u64_below(3);
        unsigned long N = g * (1ul << (1 + rng.u64_below(3)));
        mpz_class disc_k = rng.below(50) + 1;
        mpz_class rel = rng.below(1000) + 1;
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), disc_k.get_mpz_t(), N / g);
        HermiteFactorReport rep = hermite_reduction_factor(N, g, denom * rel, disc_k);
        CHECK(rep.relative_norm == rel);
        CHECK(rep.factor <= rep.bound + 1e-15);
    }

    CHECK_THROWS_AS(hermite_reduction_factor(8, 3, 100, 2), DivisibilityError);
    CHECK_THROWS_AS(hermite_reduction_factor(8, 2, 100, 3), DivisibilityError);
}

TEST_CASE("svp result serialization") {
    PrimeModulus p(5u);
    SvpResult res = solve_prime_svp(2, p, FpPoly::from_coeffs({2, 0, 1}, p));
    nlohmann::json j = svp_result_to_json(res);
    CHECK(j["method"] == "algorithm1");
    CHECK(j["r"] == 1);
    CHECK(j["enum_dimension"] == 2);
    CHECK(j["squared_length"] == 5);
    CHECK(j["vector"].size() == 4);

    nlohmann::json h = hermite_report_to_json(hermite_reduction_factor(4, 2, 256, 4));
    CHECK(h["degree"] == 4);
    CHECK(h["relative_norm"] == "16");
    CHECK(h["factor"].get<double>() == doctest::Approx(1.0));
}
