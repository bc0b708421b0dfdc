#include "svplab/cyclo_factor.hpp"

#include "doctest.h"

using namespace svplab;

namespace {

// Exhaustive irreducibility check for small p and degree <= 4: no roots,
// and no monic quadratic divisor.
bool irreducible_by_search(const FpPoly& f) {
    const PrimeModulus& p = f.modulus();
    for (mpz_class a = 0; a < p.value(); ++a) {
        if (f.eval(a) == 0) return false;
    }
    if (f.degree() <= 3) return true;
    for (mpz_class c1 = 0; c1 < p.value(); ++c1) {
        for (mpz_class c0 = 0; c0 < p.value(); ++c0) {
            FpPoly q({c0, c1, 1}, p);
            if (f.rem(q).is_zero()) return false;
        }
    }
    return f.degree() <= 5;
}

FpPoly poly(std::vector<long> cs, unsigned long p) { return FpPoly::from_coeffs(cs, PrimeModulus(p)); }

}  // namespace

TEST_CASE("split_params normal form") {
    SplitParams s5 = split_params(PrimeModulus(5u));
    CHECK(s5.sign == 1);
    CHECK(s5.A == 2);
    CHECK(s5.m == 1);

    SplitParams s7 = split_params(PrimeModulus(7u));
    CHECK(s7.sign == -1);
    CHECK(s7.A == 3);
    CHECK(s7.m == 1);

    SplitParams s17 = split_params(PrimeModulus(17u));
    CHECK(s17.sign == 1);
    CHECK(s17.A == 4);
    CHECK(s17.m == 1);

    SplitParams s11 = split_params(PrimeModulus(11u));  // 11 = 4*3 - 1
    CHECK(s11.sign == -1);
    CHECK(s11.A == 2);
    CHECK(s11.m == 3);

    CHECK_THROWS_AS(split_params(PrimeModulus(2u)), InputError);
}

TEST_CASE("class parameter r") {
    CHECK(class_r(PrimeModulus(5u), 2) == 1);
    CHECK(class_r(PrimeModulus(3u), 4) == 2);
    CHECK(class_r(PrimeModulus(17u), 3) == 3);
    CHECK(class_r(PrimeModulus(2u), 6) == 6);
    CHECK(class_r(PrimeModulus(7u), 10) == 3);
    CHECK(class_r(PrimeModulus(97u), 2) == 2);  // A = 5 > n
}

TEST_CASE("factorization follows the split patterns") {
    FactorizationResult f5 = factor_cyclotomic(2, PrimeModulus(5u));
    CHECK(f5.family == FactorFamily::Binomial);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0] == poly({2, 0, 1}, 5));
    CHECK(f5.factors[1] == poly({3, 0, 1}, 5));

    FactorizationResult f3 = factor_cyclotomic(2, PrimeModulus(3u));
    CHECK(f3.family == FactorFamily::TrinomialLarge);
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0] == poly({2, 1, 1}, 3));
    CHECK(f3.factors[1] == poly({2, 2, 1}, 3));

    FactorizationResult f17 = factor_cyclotomic(2, PrimeModulus(17u));
    CHECK(f17.family == FactorFamily::LinearRoots);
    REQUIRE(f17.factors.size() == 4);
    CHECK(f17.factors[0] == poly({2, 1}, 17));
    CHECK(f17.factors[1] == poly({8, 1}, 17));
    CHECK(f17.factors[2] == poly({9, 1}, 17));
    CHECK(f17.factors[3] == poly({15, 1}, 17));
}

TEST_CASE("ramified and boundary cases") {
    FactorizationResult f2 = factor_cyclotomic(3, PrimeModulus(2u));
    CHECK(f2.family == FactorFamily::Ramified2);
    CHECK(f2.e == 8);
    CHECK(f2.g == 1);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == poly({1, 1}, 2));
    CHECK(verify_factorization(f2));

    // n = 1 with p = 3 mod 4: x^2+1 stays irreducible; the Dickson formula
    // degenerates to the single trinomial with gamma = 0
    FactorizationResult f1 = factor_cyclotomic(1, PrimeModulus(7u));
    CHECK(f1.family == FactorFamily::TrinomialSmall);
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0] == poly({1, 0, 1}, 7));
    CHECK(verify_factorization(f1));

    // n = 1 with p = 1 mod 4 splits
    FactorizationResult f13 = factor_cyclotomic(1, PrimeModulus(13u));
    CHECK(f13.family == FactorFamily::LinearRoots);
    CHECK(f13.factors.size() == 2);
    CHECK(verify_factorization(f13));
}

TEST_CASE("verification oracle accepts the real thing and rejects tampering") {
    FactorizationResult res = factor_cyclotomic(2, PrimeModulus(5u));
    CHECK(verify_factorization(res));

    FactorizationResult tampered = res;
    tampered.factors[0] = poly({1, 0, 1}, 5);  // wrong constant
    CHECK_FALSE(verify_factorization(tampered));

    FactorizationResult wrong_count = res;
    wrong_count.factors.push_back(res.factors[0]);
    CHECK_FALSE(verify_factorization(wrong_count));
}

TEST_CASE("factorization verifies across a small grid") {
    for (unsigned long pv : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul,
                             47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul, 89ul, 97ul}) {
        PrimeModulus p(pv);
        for (unsigned n = 1; n <= 4; ++n) {
            FactorizationResult res = factor_cyclotomic(n, p);
            CAPTURE(pv);
            CAPTURE(n);
            CHECK(verify_factorization(res));
            CHECK(res.g == factor_count(n, p));
            CHECK(res.g * res.degree * res.e == (1ull << n));
            unsigned r = class_r(p, n);
            if (split_params(p).sign > 0) {
                CHECK(res.degree == (1ull << (n - r)));
            } else {
                CHECK(res.degree == (1ull << (n - r + 1)));
            }
        }
    }
}

TEST_CASE("emitted factors are irreducible at small scale") {
    // pick n so the common degree is 4, then search for divisors exhaustively
    for (unsigned long pv : {3ul, 5ul, 7ul, 11ul, 13ul, 19ul, 23ul, 29ul}) {
        PrimeModulus p(pv);
        unsigned A = split_params(p).A;
        unsigned n = A + 1;  // degree 2^{n-A+1} = 4
        FactorizationResult res = factor_cyclotomic(n, p);
        REQUIRE(res.degree == 4);
        for (const FpPoly& f : res.factors) {
            CAPTURE(pv);
            CHECK(irreducible_by_search(f));
        }
    }
    // degree-2 factors: no roots
    for (unsigned long pv : {3ul, 7ul, 11ul, 23ul, 31ul, 43ul, 47ul, 59ul}) {
        PrimeModulus p(pv);
        unsigned A = split_params(p).A;
        FactorizationResult res = factor_cyclotomic(A, p);
        REQUIRE(res.degree == 2);
        for (const FpPoly& f : res.factors) CHECK(irreducible_by_search(f));
    }
}

TEST_CASE("factorization rank guards") {
    CHECK_THROWS_AS(factor_cyclotomic(0, PrimeModulus(5u)), InputError);
    CHECK_THROWS_AS(factor_cyclotomic(70, PrimeModulus(2u)), InputError);
}

TEST_CASE("factorization record serialization") {
    FactorizationResult res = factor_cyclotomic(2, PrimeModulus(5u));
    nlohmann::json j = factorization_to_json(res);
    CHECK(j["n"] == 2);
    CHECK(j["p"] == "5");
    CHECK(j["sign"] == 1);
    CHECK(j["A"] == 2);
    CHECK(j["m"] == "1");
    CHECK(j["e"] == 1);
    CHECK(j["g"] == 2);
    CHECK(j["degree"] == 2);
    CHECK(j["factors"].size() == 2);
    CHECK(j["factors"][0] == nlohmann::json::array({"2", "0", "1"}));
}
