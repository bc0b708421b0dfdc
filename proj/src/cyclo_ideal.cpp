#include "svplab/cyclo_ideal.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace svplab {

mpz_class CycloParams::discriminant() const {
    mpz_class d = 1;
    d <<= static_cast<unsigned long>(n) * N;
    return d;
}

RingElement::RingElement(CycloParams params, IntVec coeffs) : params_(params), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != params_.N) throw InputError("RingElement: coefficient vector length mismatch");
}

RingElement RingElement::constant(const CycloParams& params, const mpz_class& c) {
    IntVec v(params.N, 0);
    v[0] = c;
    return {params, std::move(v)};
}

RingElement RingElement::zeta_pow(const CycloParams& params, unsigned long k) {
    return constant(params, 1).mul_zeta_pow(k);
}

RingElement RingElement::from_poly(const CycloParams& params, const std::vector<mpz_class>& poly) {
    IntVec v(params.N, 0);
    for (std::size_t e = 0; e < poly.size(); ++e) {
        std::size_t r = e % (2 * params.N);
        if (r < params.N) {
            v[r] += poly[e];
        } else {
            v[r - params.N] -= poly[e];
        }
    }
    return {params, std::move(v)};
}

bool RingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

mpz_class RingElement::squared_norm() const {
    mpz_class s = 0;
    for (const mpz_class& c : coeffs_) s += c * c;
    return s;
}

RingElement RingElement::operator+(const RingElement& o) const {
    IntVec v(params_.N);
    for (std::size_t i = 0; i < params_.N; ++i) v[i] = coeffs_[i] + o.coeffs_[i];
    return {params_, std::move(v)};
}

RingElement RingElement::operator-(const RingElement& o) const {
    IntVec v(params_.N);
    for (std::size_t i = 0; i < params_.N; ++i) v[i] = coeffs_[i] - o.coeffs_[i];
    return {params_, std::move(v)};
}

RingElement RingElement::operator-() const {
    IntVec v(params_.N);
    for (std::size_t i = 0; i < params_.N; ++i) v[i] = -coeffs_[i];
    return {params_, std::move(v)};
}

RingElement RingElement::mul_zeta_pow(unsigned long k) const {
    std::size_t N = params_.N;
    IntVec v(N, 0);
    std::size_t shift = k % (2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t e = (i + shift) % (2 * N);
        if (e < N) {
            v[e] += coeffs_[i];
        } else {
            v[e - N] -= coeffs_[i];
        }
    }
    return {params_, std::move(v)};
}

IntVec negacyclic_mul(const IntVec& a, const IntVec& b) {
    std::size_t N = a.size();
    IntVec res(N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < N; ++j) {
            if (b[j] == 0) continue;
            std::size_t k = i + j;
            if (k < N) {
                res[k] += a[i] * b[j];
            } else {
                res[k - N] -= a[i] * b[j];
            }
        }
    }
    return res;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    if (!(a.params() == b.params())) throw InputError("ring_mul: parameter mismatch");
    return {a.params(), negacyclic_mul(a.coeffs(), b.coeffs())};
}

IntMat pairwise_ring_products_serial(const IntMat& a_rows, const IntMat& b_rows) {
    IntMat out(a_rows.size() * b_rows.size());
    for (std::size_t i = 0; i < a_rows.size(); ++i) {
        for (std::size_t j = 0; j < b_rows.size(); ++j) {
            out[i * b_rows.size() + j] = negacyclic_mul(a_rows[i], b_rows[j]);
        }
    }
    return out;
}

IntMat pairwise_ring_products(const IntMat& a_rows, const IntMat& b_rows) {
    IntMat out(a_rows.size() * b_rows.size());
    const long long total = static_cast<long long>(out.size());
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < total; ++t) {
        std::size_t i = static_cast<std::size_t>(t) / b_rows.size();
        std::size_t j = static_cast<std::size_t>(t) % b_rows.size();
        out[t] = negacyclic_mul(a_rows[i], b_rows[j]);
    }
    return out;
}

IdealLattice IdealLattice::from_generators(const CycloParams& params, const std::vector<RingElement>& gens) {
    IntMat rows;
    rows.reserve(params.N * gens.size());
    for (const RingElement& g : gens) {
        if (!(g.params() == params)) throw InputError("from_generators: parameter mismatch");
        RingElement cur = g;
        for (std::size_t j = 0; j < params.N; ++j) {
            rows.push_back(cur.coeffs());
            cur = cur.mul_zeta_pow(1);
        }
    }
    try {
        return {params, IntLattice::hnf(rows, params.N)};
    } catch (const RankError&) {
        throw RankError("ideal_from_generators: generators span a zero ideal");
    }
}

IdealLattice IdealLattice::from_two_element(const CycloParams& params, const mpz_class& p,
                                            const std::vector<mpz_class>& f) {
    if (p <= 0) throw InputError("from_two_element: p must be positive");
    RingElement fz = RingElement::from_poly(params, f);
    IntMat rows;
    rows.reserve(2 * params.N);
    for (std::size_t j = 0; j < params.N; ++j) {
        IntVec row(params.N, 0);
        row[j] = p;
        rows.push_back(std::move(row));
    }
    RingElement cur = fz;
    for (std::size_t j = 0; j < params.N; ++j) {
        IntVec row = cur.coeffs();
        // reduce mod p; the scalar rows p*e_i are already in the span
        for (mpz_class& c : row) {
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        }
        rows.push_back(std::move(row));
        cur = cur.mul_zeta_pow(1);
    }
    return {params, IntLattice::hnf(rows, params.N)};
}

IdealLattice IdealLattice::from_basis_rows(const CycloParams& params, const IntMat& rows) {
    IntLattice lat = IntLattice::hnf(rows, params.N);
    for (const IntVec& row : lat.basis()) {
        RingElement shifted = RingElement(params, row).mul_zeta_pow(1);
        if (!lat.contains(shifted.coeffs())) {
            throw InputError("from_basis_rows: lattice is not closed under multiplication by zeta");
        }
    }
    return {params, std::move(lat)};
}

IdealLattice IdealLattice::unit_ideal(const CycloParams& params) {
    return {params, IntLattice::identity(params.N)};
}

IdealLattice ideal_from_generators(const CycloParams& params, const std::vector<RingElement>& gens) {
    return IdealLattice::from_generators(params, gens);
}

IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b) {
    if (!(a.params() == b.params())) throw InputError("ideal_product: parameter mismatch");
    IntMat rows = pairwise_ring_products(a.lattice().basis(), b.lattice().basis());
    return IdealLattice::from_basis_rows(a.params(), rows);
}

mpz_class ideal_norm(const IdealLattice& ideal) { return ideal.lattice().determinant(); }

RingElement apply_automorphism(const RingElement& x, const mpz_class& i) {
    if (mpz_even_p(i.get_mpz_t())) throw InputError("apply_automorphism: index must be odd");
    const CycloParams& params = x.params();
    unsigned long two_n = 2 * params.N;
    mpz_class im = i % two_n;
    if (im < 0) im += two_n;
    unsigned long iu = mpz_get_ui(im.get_mpz_t());

    IntVec v(params.N, 0);
    for (std::size_t k = 0; k < params.N; ++k) {
        if (x.coeffs()[k] == 0) continue;
        unsigned long e = (iu * k) % two_n;
        if (e < params.N) {
            v[e] += x.coeffs()[k];
        } else {
            v[e - params.N] -= x.coeffs()[k];
        }
    }
    return {params, std::move(v)};
}

IdealLattice apply_automorphism(const IdealLattice& ideal, const mpz_class& i) {
    IntMat rows;
    rows.reserve(ideal.params().N);
    for (const IntVec& row : ideal.lattice().basis()) {
        rows.push_back(apply_automorphism(RingElement(ideal.params(), row), i).coeffs());
    }
    return IdealLattice::from_basis_rows(ideal.params(), rows);
}

std::vector<std::size_t> subfield_keep_indices(const CycloParams& params, unsigned r_bar) {
    if (r_bar > params.n) throw InputError("subfield index out of range");
    std::size_t stride = std::size_t(1) << (params.n - r_bar);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < (std::size_t(1) << r_bar); ++j) keep.push_back(j * stride);
    return keep;
}

SubfieldIdeal subfield_intersection(const IdealLattice& ideal, unsigned r_bar) {
    std::vector<std::size_t> keep = subfield_keep_indices(ideal.params(), r_bar);
    IntLattice sub = intersect_coordinate_sublattice(ideal.lattice(), keep);
    return SubfieldIdeal{r_bar, ideal.params(), std::move(sub)};
}

RingElement embed_subfield_vector(const CycloParams& params, unsigned r_bar, const IntVec& v) {
    std::vector<std::size_t> keep = subfield_keep_indices(params, r_bar);
    if (v.size() != keep.size()) throw InputError("embed_subfield_vector: length mismatch");
    IntVec full(params.N, 0);
    for (std::size_t k = 0; k < keep.size(); ++k) full[keep[k]] = v[k];
    return {params, std::move(full)};
}

std::vector<RingElement> lift_decomposition_basis(const SubfieldIdeal& c) {
    const CycloParams& params = c.params;
    std::size_t copies = std::size_t(1) << (params.n - c.r_bar);
    std::vector<RingElement> lifted;
    lifted.reserve(params.N);
    for (const IntVec& row : c.lattice.basis()) {
        RingElement base = embed_subfield_vector(params, c.r_bar, row);
        for (std::size_t j = 0; j < copies; ++j) {
            lifted.push_back(base.mul_zeta_pow(j));
        }
    }
    return lifted;
}

bool direct_sum_check(const IdealLattice& ideal, const SubfieldIdeal& c) {
    IntMat rows;
    rows.reserve(ideal.params().N);
    for (const RingElement& x : lift_decomposition_basis(c)) rows.push_back(x.coeffs());
    IntLattice spanned = IntLattice::hnf(rows, ideal.params().N);
    return spanned == ideal.lattice();
}

EmbeddingNorms embedding_norms(const RingElement& x) {
    const CycloParams& params = x.params();
    double coeff_sq = 0;
    std::vector<double> coeffs(params.N);
    for (std::size_t i = 0; i < params.N; ++i) {
        coeffs[i] = mpz_get_d(x.coeffs()[i].get_mpz_t());
        coeff_sq += coeffs[i] * coeffs[i];
    }
    double canon_sq = 0;
    const double pi = std::acos(-1.0);
    for (unsigned long k = 1; k < 2 * params.N; k += 2) {
        double theta = pi * static_cast<double>(k) / static_cast<double>(params.N);
        std::complex<double> omega(std::cos(theta), std::sin(theta));
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = params.N; i-- > 0;) acc = acc * omega + coeffs[i];
        canon_sq += std::norm(acc);
    }
    return {std::sqrt(coeff_sq), std::sqrt(canon_sq)};
}

nlohmann::json ideal_to_json(const IdealLattice& ideal) {
    nlohmann::json j;
    j["n"] = ideal.params().n;
    j["form"] = "basis";
    std::ostringstream os;
    write_basis(os, ideal.lattice().basis());
    j["basis"] = os.str();
    return j;
}

nlohmann::json two_element_ideal_json(const CycloParams& params, const mpz_class& p,
                                      const std::vector<mpz_class>& f) {
    nlohmann::json j;
    j["n"] = params.n;
    j["form"] = "two_element";
    j["p"] = p.get_str();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const mpz_class& c : f) coeffs.push_back(c.get_str());
    j["f"] = coeffs;
    return j;
}

namespace {

mpz_class mpz_from_json(const nlohmann::json& v) {
    if (v.is_string()) return mpz_class(v.get<std::string>());
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    throw InputError("ideal_from_json: expected integer or decimal string");
}

}  // namespace

IdealLattice ideal_from_json(const nlohmann::json& j) {
    CycloParams params(j.at("n").get<unsigned>());
    std::string form = j.at("form").get<std::string>();
    if (form == "two_element") {
        mpz_class p = mpz_from_json(j.at("p"));
        std::vector<mpz_class> f;
        for (const auto& c : j.at("f")) f.push_back(mpz_from_json(c));
        return IdealLattice::from_two_element(params, p, f);
    }
    if (form == "generators") {
        std::vector<RingElement> gens;
        for (const auto& g : j.at("gens")) {
            std::vector<mpz_class> poly;
            for (const auto& c : g) poly.push_back(mpz_from_json(c));
            gens.push_back(RingElement::from_poly(params, poly));
        }
        return IdealLattice::from_generators(params, gens);
    }
    if (form == "basis") {
        std::istringstream is(j.at("basis").get<std::string>());
        return IdealLattice::from_basis_rows(params, read_basis(is));
    }
    throw InputError("ideal_from_json: unknown form '" + form + "'");
}

}  // namespace svplab
