#include "svplab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace svplab {

namespace {

mpz_class dot(const IntVec& a, const IntVec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// v normalized so its first nonzero coordinate is positive.
IntVec sign_normalized(IntVec v) {
    for (const mpz_class& x : v) {
        if (x == 0) continue;
        if (x < 0) {
            for (mpz_class& y : v) y = -y;
        }
        break;
    }
    return v;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// Nearest integer to a/b with b > 0, halves rounded up.
mpz_class round_to_int(const mpq_class& q) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), mpz_class(2 * num + den).get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return r;
}

}  // namespace

LatticeVector::LatticeVector(IntVec c) : coords(std::move(c)), squared_length(dot(coords, coords)) {}

IntMat hnf_rows(const IntMat& rows, std::size_t dim) {
    for (const IntVec& r : rows) {
        if (r.size() != dim) throw InputError("hnf_rows: row length mismatch");
    }
    std::vector<IntVec> active(rows.begin(), rows.end());
    // pivot_by_col[c] holds the row whose rightmost nonzero entry is at c.
    std::vector<std::optional<IntVec>> pivot_by_col(dim);

    for (std::size_t col = dim; col-- > 0;) {
        std::optional<IntVec> pivot;
        std::vector<IntVec> still_active;
        still_active.reserve(active.size());
        for (IntVec& w : active) {
            if (w[col] == 0) {
                still_active.push_back(std::move(w));
                continue;
            }
            if (!pivot) {
                pivot = std::move(w);
                continue;
            }
            // fold w into the pivot: pivot[col] <- gcd, w[col] <- 0
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), (*pivot)[col].get_mpz_t(),
                       w[col].get_mpz_t());
            mpz_class a = (*pivot)[col] / g;
            mpz_class b = w[col] / g;
            IntVec np(dim), nw(dim);
            for (std::size_t j = 0; j <= col; ++j) {
                np[j] = s * (*pivot)[j] + t * w[j];
                nw[j] = a * w[j] - b * (*pivot)[j];
            }
            pivot = std::move(np);
            still_active.push_back(std::move(nw));
        }
        if (pivot) {
            if ((*pivot)[col] < 0) {
                for (mpz_class& x : *pivot) x = -x;
            }
            pivot_by_col[col] = std::move(pivot);
        }
        active = std::move(still_active);
    }

    IntMat result;
    for (std::size_t i = 0; i < dim; ++i) {
        if (pivot_by_col[i]) result.push_back(std::move(*pivot_by_col[i]));
    }
    // reduce entries below each pivot into [0, pivot)
    for (std::size_t i = 0; i < result.size(); ++i) {
        for (std::size_t j = i; j-- > 0;) {
            // pivot column of row j
            std::size_t pc = result[j].size();
            for (std::size_t c = result[j].size(); c-- > 0;) {
                if (result[j][c] != 0) {
                    pc = c;
                    break;
                }
            }
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), result[i][pc].get_mpz_t(), result[j][pc].get_mpz_t());
            if (q != 0) {
                for (std::size_t c = 0; c <= pc; ++c) result[i][c] -= q * result[j][c];
            }
        }
    }
    return result;
}

IntLattice IntLattice::hnf(const IntMat& rows, std::size_t dim) {
    IntMat echelon = hnf_rows(rows, dim);
    if (echelon.size() != dim) {
        throw RankError("hnf: row span has rank " + std::to_string(echelon.size()) + " < " +
                        std::to_string(dim));
    }
    return IntLattice(std::move(echelon));
}

IntLattice IntLattice::identity(std::size_t dim) {
    IntMat basis(dim, IntVec(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
    return IntLattice(std::move(basis));
}

mpz_class IntLattice::determinant() const {
    mpz_class d = 1;
    for (std::size_t i = 0; i < dim(); ++i) d *= basis_[i][i];
    return d;
}

std::optional<IntVec> IntLattice::decompose(const IntVec& v) const {
    if (v.size() != dim()) throw InputError("decompose: dimension mismatch");
    IntVec rest = v;
    IntVec x(dim(), 0);
    for (std::size_t col = dim(); col-- > 0;) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest[col].get_mpz_t(), basis_[col][col].get_mpz_t());
        if (r != 0) return std::nullopt;
        x[col] = q;
        if (q != 0) {
            for (std::size_t j = 0; j <= col; ++j) rest[j] -= q * basis_[col][j];
        }
    }
    return x;
}

bool IntLattice::contains(const IntVec& v) const { return decompose(v).has_value(); }

bool lattice_equal(const IntLattice& a, const IntLattice& b) {
    if (a.dim() != b.dim()) throw InputError("lattice_equal: dimension mismatch");
    return a == b;
}

double minkowski_bound(const IntLattice& lattice) {
    mpz_class det = lattice.determinant();
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, det.get_mpz_t());
    double log_det = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    double d = static_cast<double>(lattice.dim());
    return std::sqrt(d) * std::exp(log_det / d);
}

namespace {

// Rational Gram-Schmidt state over an integer basis.
struct Gso {
    std::vector<std::vector<mpq_class>> mu;     // mu[i][j], j < i
    std::vector<mpq_class> bstar_norm;          // ||b*_i||^2
    std::vector<std::vector<mpq_class>> bstar;  // orthogonalized rows

    explicit Gso(std::size_t d)
        : mu(d, std::vector<mpq_class>(d, 0)), bstar_norm(d, 0), bstar(d, std::vector<mpq_class>(d, 0)) {}

    void recompute_row(const IntMat& b, std::size_t i) {
        std::size_t d = b.size();
        for (std::size_t c = 0; c < d; ++c) bstar[i][c] = b[i][c];
        for (std::size_t j = 0; j < i; ++j) {
            mpq_class proj = 0;
            for (std::size_t c = 0; c < d; ++c) proj += mpq_class(b[i][c]) * bstar[j][c];
            mu[i][j] = proj / bstar_norm[j];
            for (std::size_t c = 0; c < d; ++c) bstar[i][c] -= mu[i][j] * bstar[j][c];
        }
        bstar_norm[i] = 0;
        for (std::size_t c = 0; c < d; ++c) bstar_norm[i] += bstar[i][c] * bstar[i][c];
    }

    void recompute_from(const IntMat& b, std::size_t start) {
        for (std::size_t i = start; i < b.size(); ++i) recompute_row(b, i);
    }
};

}  // namespace

IntMat lll_reduce(const IntLattice& lattice, const mpq_class& delta) {
    if (delta <= mpq_class(1, 4) || delta >= 1) throw InputError("lll_reduce: delta out of (1/4, 1)");
    IntMat b = lattice.basis();
    std::size_t d = b.size();
    if (d <= 1) return b;

    Gso gso(d);
    gso.recompute_from(b, 0);

    std::size_t k = 1;
    while (k < d) {
        // Size-reduce b_k; b*_k and the mu rows above k are unaffected,
        // so only row k's mu needs in-place updates.
        for (std::size_t j = k; j-- > 0;) {
            mpz_class q = round_to_int(gso.mu[k][j]);
            if (q != 0) {
                for (std::size_t c = 0; c < d; ++c) b[k][c] -= q * b[j][c];
                for (std::size_t j2 = 0; j2 < j; ++j2) gso.mu[k][j2] -= mpq_class(q) * gso.mu[j][j2];
                gso.mu[k][j] -= q;
            }
        }
        mpq_class lhs = gso.bstar_norm[k];
        mpq_class rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.bstar_norm[k - 1];
        if (lhs < rhs) {
            std::swap(b[k], b[k - 1]);
            gso.recompute_from(b, k - 1);
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            ++k;
        }
    }
    return b;
}

namespace {

struct EnumState {
    const IntMat& basis;
    const Gso& gso;
    std::size_t d;
    const EnumOptions& opts;

    std::vector<mpz_class> x;
    mpq_class bound;  // current best squared length (inclusive)
    IntVec best;
    mpz_class best_sq;

    void consider_leaf() {
        IntVec v(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t c = 0; c < d; ++c) v[c] += x[i] * basis[i][c];
        }
        if (is_zero_vec(v)) return;
        mpz_class sq = dot(v, v);
        if (sq > best_sq) return;
        IntVec norm = sign_normalized(std::move(v));
        if (sq < best_sq || lex_less(norm, best)) {
            best = std::move(norm);
            best_sq = sq;
            bound = best_sq;
        }
    }

    // Levels run from d-1 (outermost) down to 0; rho is the cost already
    // committed by levels above.
    void descend(std::size_t level, const mpq_class& rho) {
        if (opts.cancelled && opts.cancelled()) throw CancelledError("svp_exact: cancelled");
        std::size_t i = level;
        mpq_class center = 0;
        for (std::size_t j = i + 1; j < d; ++j) center -= mpq_class(x[j]) * gso.mu[j][i];

        mpz_class r0 = round_to_int(center);
        for (int dir = 0; dir < 2; ++dir) {
            mpz_class xi = dir == 0 ? r0 : r0 - 1;
            mpz_class step = dir == 0 ? 1 : -1;
            for (;;) {
                mpq_class offset = mpq_class(xi) - center;
                mpq_class cost = rho + offset * offset * gso.bstar_norm[i];
                if (cost > bound) break;
                x[i] = xi;
                if (i == 0) {
                    consider_leaf();
                } else {
                    descend(i - 1, cost);
                }
                xi += step;
            }
        }
        x[i] = 0;
    }
};

}  // namespace

LatticeVector svp_exact(const IntLattice& lattice, const EnumOptions& opts) {
    std::size_t d = lattice.dim();
    if (d == 0) throw InputError("svp_exact: empty lattice");
    if (d > opts.dimension_cap) {
        throw DimensionCapError("svp_exact: dimension " + std::to_string(d) + " exceeds cap " +
                                std::to_string(opts.dimension_cap));
    }
    IntMat b = lll_reduce(lattice);
    Gso gso(d);
    gso.recompute_from(b, 0);

    // Seed the search with the shortest reduced row.
    IntVec seed = sign_normalized(b[0]);
    mpz_class seed_sq = dot(b[0], b[0]);
    for (std::size_t i = 1; i < d; ++i) {
        mpz_class sq = dot(b[i], b[i]);
        IntVec cand = sign_normalized(b[i]);
        if (sq < seed_sq || (sq == seed_sq && lex_less(cand, seed))) {
            seed = cand;
            seed_sq = sq;
        }
    }

    EnumState state{b, gso, d, opts, std::vector<mpz_class>(d, 0), mpq_class(seed_sq), seed, seed_sq};
    state.descend(d - 1, mpq_class(0));
    return LatticeVector(state.best);
}

IntMat integer_kernel(const IntMat& m) {
    std::size_t rows = m.size();
    if (rows == 0) return {};
    std::size_t cols = m[0].size();
    for (const IntVec& r : m) {
        if (r.size() != cols) throw InputError("integer_kernel: ragged matrix");
    }

    // Augment [M | I] and eliminate the M-part; rows whose M-part empties
    // out carry kernel combinations in their identity part.
    std::vector<IntVec> active(rows, IntVec(cols + rows, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) active[i][j] = m[i][j];
        active[i][cols + i] = 1;
    }

    for (std::size_t col = cols; col-- > 0;) {
        std::optional<IntVec> pivot;
        std::vector<IntVec> still_active;
        still_active.reserve(active.size());
        for (IntVec& w : active) {
            if (w[col] == 0) {
                still_active.push_back(std::move(w));
                continue;
            }
            if (!pivot) {
                pivot = std::move(w);
                continue;
            }
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), (*pivot)[col].get_mpz_t(),
                       w[col].get_mpz_t());
            mpz_class a = (*pivot)[col] / g;
            mpz_class b = w[col] / g;
            IntVec np(cols + rows), nw(cols + rows);
            for (std::size_t j = 0; j < cols + rows; ++j) {
                np[j] = s * (*pivot)[j] + t * w[j];
                nw[j] = a * w[j] - b * (*pivot)[j];
            }
            pivot = std::move(np);
            still_active.push_back(std::move(nw));
        }
        active = std::move(still_active);
        // pivot rows have a nonzero M-part; they cannot contribute to the
        // kernel and are dropped.
    }

    IntMat kernel;
    for (const IntVec& w : active) {
        kernel.emplace_back(w.begin() + static_cast<long>(cols), w.end());
    }
    return hnf_rows(kernel, rows);
}

IntLattice intersect_coordinate_sublattice(const IntLattice& lattice, const std::vector<std::size_t>& keep) {
    std::size_t d = lattice.dim();
    std::vector<bool> kept(d, false);
    for (std::size_t s : keep) {
        if (s >= d) throw InputError("intersect_coordinate_sublattice: index out of range");
        kept[s] = true;
    }
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < d; ++j) {
        if (!kept[j]) complement.push_back(j);
    }

    IntMat proj(d, IntVec(complement.size(), 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < complement.size(); ++c) proj[i][c] = lattice.basis()[i][complement[c]];
    }
    IntMat kernel = integer_kernel(proj);

    IntMat sub;
    for (const IntVec& x : kernel) {
        IntVec full(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t c = 0; c < d; ++c) full[c] += x[i] * lattice.basis()[i][c];
        }
        for (std::size_t j : complement) {
            if (full[j] != 0) throw std::logic_error("intersect: kernel row failed to zero the complement");
        }
        IntVec restricted;
        restricted.reserve(keep.size());
        for (std::size_t s : keep) restricted.push_back(full[s]);
        sub.push_back(std::move(restricted));
    }
    return IntLattice::hnf(sub, keep.size());
}

void write_basis(std::ostream& os, const IntMat& basis) {
    os << basis.size() << "\n";
    for (const IntVec& row : basis) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << row[j].get_str();
        }
        os << "\n";
    }
}

IntMat read_basis(std::istream& is) {
    std::size_t d = 0;
    if (!(is >> d) || d == 0) throw InputError("read_basis: missing or zero dimension");
    IntMat basis(d, IntVec(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::string tok;
            if (!(is >> tok)) throw InputError("read_basis: truncated matrix");
            try {
                basis[i][j] = mpz_class(tok);
            } catch (const std::invalid_argument&) {
                throw InputError("read_basis: bad integer '" + tok + "'");
            }
        }
    }
    return basis;
}

}  // namespace svplab
