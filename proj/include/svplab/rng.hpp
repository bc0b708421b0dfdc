#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace svplab {

// Seeded Mersenne-Twister stream over GMP integers. Every randomized routine
// takes one of these explicitly, so runs are reproducible and independent
// streams can be derived per work item.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        gmp_randinit_mt(state_);
        mpz_class s;
        mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
        gmp_randseed(state_, s.get_mpz_t());
    }
    ~Rng() { gmp_randclear(state_); }
    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;

    // Uniform in [0, bound). bound must be positive.
    mpz_class below(const mpz_class& bound) {
        mpz_class r;
        mpz_urandomm(r.get_mpz_t(), state_, bound.get_mpz_t());
        return r;
    }

    std::uint64_t u64_below(std::uint64_t bound) {
        mpz_class r = below(mpz_class(static_cast<unsigned long>(bound)));
        return mpz_get_ui(r.get_mpz_t());
    }

  private:
    gmp_randstate_t state_;
};

// splitmix64 step; used to derive independent per-item seeds from a master
// seed so that a parallel sweep is invariant to scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace svplab
