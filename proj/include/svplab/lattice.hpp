#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "svplab/errors.hpp"

namespace svplab {

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;

// A nonzero lattice member together with its exact squared Euclidean norm.
struct LatticeVector {
    IntVec coords;
    mpz_class squared_length;

    explicit LatticeVector(IntVec c);
};

// Row-echelon (Hermite normal form) span of arbitrary integer rows:
// returns one row per pivot column, rightmost-pivot-first removed -- rows
// come back ordered by pivot column ascending, pivots positive, entries
// below each pivot column reduced into [0, pivot). Rank may be < D.
IntMat hnf_rows(const IntMat& rows, std::size_t dim);

// Full-rank integer lattice, stored as the canonical lower-triangular HNF
// basis: row i has its pivot at column i, B[i][i] > 0, B[i][j] = 0 for
// j > i and 0 <= B[i][j] < B[j][j] for j < i. Canonicity makes equality of
// lattices a plain matrix comparison.
class IntLattice {
  public:
    // HNF of the row span; throws RankError if the span has rank < dim.
    static IntLattice hnf(const IntMat& rows, std::size_t dim);
    static IntLattice identity(std::size_t dim);

    const IntMat& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    mpz_class determinant() const;

    // Membership by forward substitution against the triangular basis.
    bool contains(const IntVec& v) const;
    // Coefficients x with x*B = v, if v is a member.
    std::optional<IntVec> decompose(const IntVec& v) const;

    bool operator==(const IntLattice& o) const { return basis_ == o.basis_; }

  private:
    explicit IntLattice(IntMat basis) : basis_(std::move(basis)) {}
    IntMat basis_;
};

bool lattice_equal(const IntLattice& a, const IntLattice& b);

// sqrt(D) * det^(1/D); an upper bound for the shortest-vector length.
double minkowski_bound(const IntLattice& lattice);

// Exact-arithmetic LLL (rational Gram-Schmidt, no floats). delta is given
// as a fraction in (1/4, 1); default 99/100. Returns a reduced basis of the
// same lattice.
IntMat lll_reduce(const IntLattice& lattice, const mpq_class& delta = mpq_class(99, 100));

struct EnumOptions {
    std::size_t dimension_cap = 32;
    // Optional cooperative cancellation; polled inside the search tree.
    std::function<bool()> cancelled;
};

// Exact shortest nonzero vector: LLL preprocessing, then depth-first
// Schnorr-Euchner enumeration with the Gram-Schmidt bound, all in exact
// rationals. Ties are broken deterministically: among sign-normalized
// minimizers (first nonzero coordinate positive), the lexicographically
// smallest wins. Throws DimensionCapError above the cap.
LatticeVector svp_exact(const IntLattice& lattice, const EnumOptions& opts = {});

// Generating set of the left kernel {x : x*M = 0} of an RxC matrix,
// returned in row-echelon form (possibly empty).
IntMat integer_kernel(const IntMat& m);

// Sublattice {v in L : v_j = 0 for j not in keep}, written in the kept
// coordinates. keep must be strictly ascending. Throws RankError if the
// intersection has rank < |keep|.
IntLattice intersect_coordinate_sublattice(const IntLattice& lattice, const std::vector<std::size_t>& keep);

// Plain-text basis format: first line the dimension, then one row per line,
// decimal integers separated by spaces.
void write_basis(std::ostream& os, const IntMat& basis);
IntMat read_basis(std::istream& is);

}  // namespace svplab
