#include "svplab/modp.hpp"

#include <algorithm>
#include <sstream>

namespace svplab {

namespace {

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    // returns true if a proves n composite
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // Sinclair's deterministic base set for n < 2^64.
        for (unsigned long a : {2ul, 325ul, 9375ul, 28178ul, 450775ul, 9780504ul, 1795265022ul}) {
            mpz_class w(a);
            w %= n;
            if (w == 0) continue;
            if (miller_rabin_witness(n, w, d, s)) return false;
        }
        return true;
    }
    Rng rng(0x6d725f626173655fULL ^ mpz_get_ui(n.get_mpz_t()));
    for (int round = 0; round < 40; ++round) {
        mpz_class a = rng.below(n - 3) + 2;
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(mpz_class p) : p_(std::move(p)) {
    if (!is_prime(p_)) {
        throw InputError("modulus is not prime: " + p_.get_str());
    }
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const PrimeModulus& p) {
    if (exp < 0) throw InputError("pow_mod: negative exponent");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.value().get_mpz_t());
    return r;
}

mpz_class normalize_mod(const mpz_class& x, const PrimeModulus& p) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t());
    return r;
}

mpz_class signed_residue(const mpz_class& x, const PrimeModulus& p) {
    mpz_class r = normalize_mod(x, p);
    if (2 * r > p.value()) r -= p.value();
    return r;
}

mpz_class inv_mod(const mpz_class& x, const PrimeModulus& p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t()) == 0) {
        throw InputError("inv_mod: not invertible");
    }
    return r;
}

mpz_class primitive_root_of_unity(const PrimeModulus& p, unsigned k, Rng& rng) {
    mpz_class order = mpz_class(1) << k;
    mpz_class pm1 = p.value() - 1;
    if (!mpz_divisible_p(pm1.get_mpz_t(), order.get_mpz_t())) {
        throw DivisibilityError("2^" + std::to_string(k) + " does not divide p-1 for p=" + p.value().get_str());
    }
    if (k == 0) return 1;
    mpz_class cofactor = pm1 / order;
    for (;;) {
        mpz_class c = rng.below(pm1 - 1) + 2;  // in [2, p-1]
        mpz_class u = pow_mod(c, cofactor, p);
        // order of u divides 2^k; it is exactly 2^k iff u^{2^{k-1}} = -1
        mpz_class half = pow_mod(u, mpz_class(1) << (k - 1), p);
        if (half == pm1) return u;
    }
}

mpz_class primitive_root_of_unity(const PrimeModulus& p, unsigned k) {
    Rng rng(derive_seed(0x726f6f74ULL + k, mpz_get_ui(p.value().get_mpz_t())));
    return primitive_root_of_unity(p, k, rng);
}

FpPoly::FpPoly(std::vector<mpz_class> coeffs, PrimeModulus p) : coeffs_(std::move(coeffs)), p_(std::move(p)) {
    for (auto& c : coeffs_) c = normalize_mod(c, p_);
    trim();
}

FpPoly FpPoly::constant(const mpz_class& c, const PrimeModulus& p) { return FpPoly({c}, p); }

FpPoly FpPoly::from_coeffs(const std::vector<long>& coeffs, const PrimeModulus& p) {
    std::vector<mpz_class> cs(coeffs.begin(), coeffs.end());
    return FpPoly(std::move(cs), p);
}

FpPoly FpPoly::monomial(unsigned long k, const PrimeModulus& p) {
    std::vector<mpz_class> cs(k + 1, 0);
    cs[k] = 1;
    return FpPoly(std::move(cs), p);
}

void FpPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& FpPoly::coeff(std::size_t i) const {
    static const mpz_class kZero = 0;
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

mpz_class FpPoly::leading() const { return is_zero() ? mpz_class(0) : coeffs_.back(); }

bool FpPoly::operator==(const FpPoly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

void FpPoly::require_same_modulus(const FpPoly& o) const {
    if (!(p_ == o.p_)) throw InputError("FpPoly: mismatched moduli");
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    require_same_modulus(o);
    std::vector<mpz_class> cs(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
    return FpPoly(std::move(cs), p_);
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    require_same_modulus(o);
    std::vector<mpz_class> cs(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) - o.coeff(i);
    return FpPoly(std::move(cs), p_);
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    require_same_modulus(o);
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<mpz_class> cs(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            cs[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return FpPoly(std::move(cs), p_);
}

FpPoly FpPoly::scaled(const mpz_class& c) const {
    std::vector<mpz_class> cs = coeffs_;
    for (auto& x : cs) x *= c;
    return FpPoly(std::move(cs), p_);
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    if (leading() == 1) return *this;
    return scaled(inv_mod(leading(), p_));
}

mpz_class FpPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = normalize_mod(acc * x + *it, p_);
    }
    return acc;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
    require_same_modulus(divisor);
    if (divisor.is_zero()) throw InputError("FpPoly::divmod: division by zero polynomial");
    long dd = divisor.degree();
    if (degree() < dd) return {zero(p_), *this};

    mpz_class lead_inv = inv_mod(divisor.leading(), p_);
    std::vector<std::size_t> lower;  // indices of nonzero divisor coeffs below the lead
    for (std::size_t i = 0; i + 1 < divisor.coeffs_.size(); ++i) {
        if (divisor.coeffs_[i] != 0) lower.push_back(i);
    }

    std::vector<mpz_class> r = coeffs_;
    std::vector<mpz_class> q(degree() - dd + 1, 0);
    for (long k = degree() - dd; k >= 0; --k) {
        mpz_class c = normalize_mod(r[k + dd] * lead_inv, p_);
        q[k] = c;
        if (c == 0) continue;
        r[k + dd] = 0;
        for (std::size_t i : lower) {
            r[k + i] = normalize_mod(r[k + i] - c * divisor.coeffs_[i], p_);
        }
    }
    return {FpPoly(std::move(q), p_), FpPoly(std::move(r), p_)};
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly poly_pow_mod(const FpPoly& base, const mpz_class& exp, const FpPoly& modpoly) {
    if (modpoly.degree() < 1) throw InputError("poly_pow_mod: modulus must be nonconstant");
    FpPoly result = FpPoly::constant(1, base.modulus());
    FpPoly b = base.rem(modpoly);
    mpz_class e = exp;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * b).rem(modpoly);
        e >>= 1;
        if (e > 0) b = (b * b).rem(modpoly);
    }
    return result;
}

FpPoly poly_mul_mod(const FpPoly& f, const FpPoly& g, const std::optional<FpPoly>& modpoly) {
    FpPoly prod = f * g;
    if (modpoly) prod = prod.rem(*modpoly);
    return prod;
}

FpPoly dickson_poly(unsigned long s, const mpz_class& a, const PrimeModulus& p) {
    if (s < 1) throw InputError("dickson_poly: s must be positive");
    std::vector<mpz_class> cs(s + 1, 0);
    mpz_class minus_a_pow = 1;  // (-a)^i
    for (unsigned long i = 0; i <= s / 2; ++i) {
        // s/(s-i) * C(s-i, i) is an integer; compute exactly before reducing.
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), s - i, i);
        mpz_class term = binom * s;
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), s - i);
        cs[s - 2 * i] = term * minus_a_pow;
        minus_a_pow *= -a;
    }
    return FpPoly(std::move(cs), p);
}

namespace {

// Splits a monic product of distinct linear factors into its roots.
void split_linear_product(const FpPoly& g, Rng& rng, std::vector<mpz_class>& out) {
    const PrimeModulus& p = g.modulus();
    if (g.degree() < 1) return;
    if (g.degree() == 1) {
        out.push_back(normalize_mod(-g.coeff(0), p));  // monic: root = -c0
        return;
    }
    mpz_class half = (p.value() - 1) / 2;
    for (;;) {
        mpz_class c = rng.below(p.value());
        FpPoly shifted({c, 1}, p);  // x + c
        FpPoly w = poly_pow_mod(shifted, half, g) - FpPoly::constant(1, p);
        FpPoly d = poly_gcd(w, g);
        if (d.degree() >= 1 && d.degree() < g.degree()) {
            split_linear_product(d, rng, out);
            split_linear_product(g.divmod(d).first, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<mpz_class> poly_roots(const FpPoly& f, Rng& rng) {
    if (f.degree() < 1) throw InputError("poly_roots: degree must be >= 1");
    const PrimeModulus& p = f.modulus();
    std::vector<mpz_class> roots;
    if (p.value() == 2) {
        for (long v : {0, 1}) {
            if (f.eval(v) == 0) roots.push_back(v);
        }
        return roots;
    }
    // x^p - x catches each root exactly once.
    FpPoly fm = f.monic();
    FpPoly xp = poly_pow_mod(FpPoly::monomial(1, p), p.value(), fm);
    FpPoly g = poly_gcd(xp - FpPoly::monomial(1, p), fm);
    split_linear_product(g, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<mpz_class> poly_roots(const FpPoly& f) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& c : f.coeffs()) {
        h = (h ^ mpz_get_ui(c.get_mpz_t())) * 0x100000001b3ULL;
    }
    Rng rng(derive_seed(h, mpz_get_ui(f.modulus().value().get_mpz_t())));
    return poly_roots(f, rng);
}

}  // namespace svplab
