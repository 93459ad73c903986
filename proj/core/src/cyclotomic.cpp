#include "boxcalc/cyclotomic.hpp"

#include "boxcalc/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace boxcalc {

namespace {

/// Quotient and remainder of a by b (b nonzero), exact.
std::pair<Poly1D, Poly1D> divmod(const Poly1D& a, const Poly1D& b) {
    if (b.is_zero()) throw BoxcalcError("poly divmod: division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    Rat lead = b.coeff(db);
    std::vector<Rat> quo;
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rat(0));
    for (int d = a.degree(); d >= db; --d) {
        if (rem.size() <= (std::size_t)d || rem[d] == 0) continue;
        Rat f = rem[d] / lead;
        quo[d - db] = f;
        for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * b.coeff(j);
    }
    return {Poly1D(std::move(quo)), Poly1D(std::move(rem))};
}

Poly1D x_pow_minus_one(long m) {
    std::vector<Rat> c(m + 1, Rat(0));
    c[0] = -1;
    c[m] = 1;
    return Poly1D(std::move(c));
}

Poly1D cyclotomic_poly(long m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly1D f = x_pow_minus_one(m);
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = divmod(f, cyclotomic_poly(d));
        if (!r.is_zero()) throw BoxcalcError("cyclotomic_poly: inexact division");
        f = q;
    }
    return f;
}

}  // namespace

std::shared_ptr<const CycloCtx> cyclo_context(long m) {
    if (m < 1) throw BoxcalcError("cyclo_context: order must be positive");
    static std::map<long, std::shared_ptr<const CycloCtx>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CycloCtx>();
    ctx->order = m;
    ctx->modulus = cyclotomic_poly(m);
    ctx->degree = (std::size_t)ctx->modulus.degree();
    cache.emplace(m, ctx);
    return cache[m];
}

Cyclo::Cyclo(std::shared_ptr<const CycloCtx> ctx, std::vector<Rat> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    reduce();
}

void Cyclo::reduce() {
    if (!ctx_) {
        coeffs_.resize(1, Rat(0));
        return;
    }
    if (coeffs_.size() > ctx_->degree) {
        auto [q, r] = divmod(Poly1D(coeffs_), ctx_->modulus);
        coeffs_ = r.coeffs();
    }
    coeffs_.resize(ctx_->degree, Rat(0));
    if (ctx_->degree == 0) coeffs_.resize(1, Rat(0));  // m = 1: Q itself
}

void Cyclo::unify(Cyclo& a, Cyclo& b) {
    if (a.ctx_ && b.ctx_) {
        if (a.ctx_->order != b.ctx_->order)
            throw BoxcalcError("Cyclo: mixed cyclotomic orders");
        return;
    }
    if (a.ctx_ && !b.ctx_) {
        Rat v = b.coeffs_[0];
        b.ctx_ = a.ctx_;
        b.coeffs_.assign(std::max<std::size_t>(a.ctx_->degree, 1), Rat(0));
        b.coeffs_[0] = v;
    } else if (!a.ctx_ && b.ctx_) {
        unify(b, a);
    }
}

Cyclo Cyclo::zeta_pow(const std::shared_ptr<const CycloCtx>& ctx, Int k) {
    Int m(ctx->order);
    Int e = k % m;
    if (e < 0) e += m;
    std::vector<Rat> c((std::size_t)e.convert_to<long>() + 1, Rat(0));
    c.back() = 1;
    return Cyclo(ctx, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclo::to_rat() const {
    if (!is_rational()) throw BoxcalcError("Cyclo::to_rat: value is irrational");
    return coeffs_[0];
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    unify(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    unify(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    unify(a, b);
    std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Cyclo(a.ctx_, std::move(prod));
}

Cyclo Cyclo::operator-() const {
    Cyclo a = *this;
    for (Rat& c : a.coeffs_) c = -c;
    return a;
}

Cyclo Cyclo::operator*(const Rat& s) const {
    Cyclo a = *this;
    for (Rat& c : a.coeffs_) c *= s;
    return a;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw BoxcalcError("Cyclo::inverse: division by zero");
    if (!ctx_ || is_rational()) {
        Cyclo r = *this;
        r.coeffs_.assign(coeffs_.size(), Rat(0));
        r.coeffs_[0] = Rat(1) / to_rat();
        return r;
    }
    // extended Euclid: u*a + v*Phi_m = gcd (a nonzero, Phi_m irreducible)
    Poly1D r0 = ctx_->modulus, r1 = Poly1D(coeffs_);
    Poly1D s0 = Poly1D::constant(Rat(0)), s1 = Poly1D::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly1D s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw BoxcalcError("Cyclo::inverse: gcd not constant");
    Poly1D inv = s0 * (Rat(1) / r0.coeff(0));
    return Cyclo(ctx_, inv.coeffs());
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

bool Cyclo::operator==(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    unify(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclo::to_string() const {
    if (is_rational()) return rat_to_string(coeffs_[0]);
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rat a = coeffs_[i];
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::complex<double> Cyclo::to_complex() const {
    long m = ctx_ ? ctx_->order : 1;
    std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / (double)m);
    std::complex<double> acc = 0, p = 1;
    for (const Rat& c : coeffs_) {
        acc += p * c.convert_to<double>();
        p *= z;
    }
    return acc;
}

}  // namespace boxcalc
