#pragma once

#include <vector>

#include "json.hpp"
#include "svplab/lattice.hpp"
#include "svplab/modp.hpp"

namespace svplab {

// The ring Z[zeta_{2^{n+1}}] ~ Z[x]/(x^N + 1) with N = 2^n, under the
// coefficient embedding.
struct CycloParams {
    unsigned n;
    std::size_t N;

    explicit CycloParams(unsigned n_) : n(n_), N(std::size_t(1) << n_) {
        if (n_ < 1) throw InputError("CycloParams: n must be >= 1");
        if (n_ > 24) throw InputError("CycloParams: n too large for dense coefficient vectors");
    }
    unsigned long conductor() const { return 1ul << (n + 1); }
    // 2^{n*2^n}
    mpz_class discriminant() const;
    bool operator==(const CycloParams& o) const { return n == o.n; }
};

// Element sum a_i zeta^i as its length-N coefficient vector.
class RingElement {
  public:
    RingElement(CycloParams params, IntVec coeffs);

    static RingElement zero(const CycloParams& params) { return {params, IntVec(params.N, 0)}; }
    static RingElement constant(const CycloParams& params, const mpz_class& c);
    static RingElement zeta_pow(const CycloParams& params, unsigned long k);
    // Integer polynomial of any degree, reduced by x^N = -1.
    static RingElement from_poly(const CycloParams& params, const std::vector<mpz_class>& poly);

    const CycloParams& params() const { return params_; }
    const IntVec& coeffs() const { return coeffs_; }
    bool is_zero() const;
    mpz_class squared_norm() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const { return params_ == o.params_ && coeffs_ == o.coeffs_; }

    // zeta^k * this: rotation with sign wrap.
    RingElement mul_zeta_pow(unsigned long k) const;

  private:
    CycloParams params_;
    IntVec coeffs_;
};

// Negacyclic convolution of coefficient vectors (zeta^N = -1).
IntVec negacyclic_mul(const IntVec& a, const IntVec& b);

RingElement ring_mul(const RingElement& a, const RingElement& b);

// All |A|*|B| negacyclic row products. The default entry point spreads the
// independent products across OpenMP threads; the serial variant is the
// reference the tests and the benchmark compare against.
IntMat pairwise_ring_products(const IntMat& a_rows, const IntMat& b_rows);
IntMat pairwise_ring_products_serial(const IntMat& a_rows, const IntMat& b_rows);

// Full-rank ideal of Z[zeta] as an N-dimensional integer lattice in HNF.
class IdealLattice {
  public:
    // HNF span of {zeta^j g : 0 <= j < N, g in gens}. RankError if zero.
    static IdealLattice from_generators(const CycloParams& params, const std::vector<RingElement>& gens);
    // (p, f(zeta)) with f an integer polynomial; rows pre-reduced mod p.
    static IdealLattice from_two_element(const CycloParams& params, const mpz_class& p,
                                         const std::vector<mpz_class>& f);
    // Raw basis rows; validated to span a lattice closed under zeta.
    static IdealLattice from_basis_rows(const CycloParams& params, const IntMat& rows);
    static IdealLattice unit_ideal(const CycloParams& params);

    const CycloParams& params() const { return params_; }
    const IntLattice& lattice() const { return lattice_; }

    bool contains(const RingElement& x) const { return lattice_.contains(x.coeffs()); }
    bool operator==(const IdealLattice& o) const { return params_ == o.params_ && lattice_ == o.lattice_; }

  private:
    IdealLattice(CycloParams params, IntLattice lattice)
        : params_(params), lattice_(std::move(lattice)) {}
    CycloParams params_;
    IntLattice lattice_;
};

IdealLattice ideal_from_generators(const CycloParams& params, const std::vector<RingElement>& gens);

// HNF span of all pairwise basis products.
IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b);

// Index [Z^N : I] = lattice determinant.
mpz_class ideal_norm(const IdealLattice& ideal);

// sigma_i : zeta -> zeta^i for odd i (any representative mod 2^{n+1}).
RingElement apply_automorphism(const RingElement& x, const mpz_class& i);
IdealLattice apply_automorphism(const IdealLattice& ideal, const mpz_class& i);

// The sublattice c = I intersect Z[eta], eta = zeta^{2^{n-r_bar}}, written
// in the subfield coordinates (powers of eta).
struct SubfieldIdeal {
    unsigned r_bar;
    CycloParams params;  // of the ambient ring
    IntLattice lattice;  // dimension 2^{r_bar}
};

// Ring coordinates {j * 2^{n-r_bar} : 0 <= j < 2^{r_bar}} spanned by the
// subfield's power basis.
std::vector<std::size_t> subfield_keep_indices(const CycloParams& params, unsigned r_bar);

SubfieldIdeal subfield_intersection(const IdealLattice& ideal, unsigned r_bar);

// Places subfield coordinate k at ring coordinate k * 2^{n-r_bar}.
RingElement embed_subfield_vector(const CycloParams& params, unsigned r_bar, const IntVec& v);

// The N elements zeta^j * embed(b_i) over the subfield basis rows b_i.
std::vector<RingElement> lift_decomposition_basis(const SubfieldIdeal& c);

// True iff the lifted subfield basis spans exactly the ideal, i.e.
// I decomposes as the direct sum of zeta^k c over 0 <= k < 2^{n-r_bar}.
bool direct_sum_check(const IdealLattice& ideal, const SubfieldIdeal& c);

struct EmbeddingNorms {
    double coeff_norm;
    double canonical_norm;
};

// Exact-integer coefficient norm next to the float canonical norm
// (evaluations at all primitive 2^{n+1}-th roots of unity). The pair
// satisfies canonical = sqrt(2^n) * coeff up to float tolerance.
EmbeddingNorms embedding_norms(const RingElement& x);

// Record {n, form, p?, f?, gens?, basis?}, integers as decimal strings,
// basis in the plain-text matrix format.
nlohmann::json ideal_to_json(const IdealLattice& ideal);
IdealLattice ideal_from_json(const nlohmann::json& j);
nlohmann::json two_element_ideal_json(const CycloParams& params, const mpz_class& p,
                                      const std::vector<mpz_class>& f);

}  // namespace svplab
