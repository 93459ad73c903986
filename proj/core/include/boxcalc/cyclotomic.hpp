#pragma once

#include "boxcalc/poly1.hpp"
#include "boxcalc/rational.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace boxcalc {

/// Shared data for Q(zeta_m): the m-th cyclotomic polynomial and its degree.
struct CycloCtx {
    long order = 1;      // m
    Poly1D modulus;      // Phi_m, monic of degree phi(m)
    std::size_t degree;  // phi(m)
};

std::shared_ptr<const CycloCtx> cyclo_context(long m);

/// Element of a cyclotomic field Q(zeta_m), exact arithmetic modulo Phi_m.
/// Elements without a context are plain rationals and promote on demand, so
/// Cyclo can be used as the scalar type of the generic 1-D machinery.
class Cyclo {
  public:
    Cyclo() : coeffs_{Rat(0)} {}
    Cyclo(int v) : coeffs_{Rat(v)} {}
    Cyclo(const Rat& v) : coeffs_{v} {}
    Cyclo(std::shared_ptr<const CycloCtx> ctx, std::vector<Rat> coeffs);

    /// zeta_m^k (k may be negative).
    static Cyclo zeta_pow(const std::shared_ptr<const CycloCtx>& ctx, Int k);

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rat() const;  // throws unless is_rational()

    const std::shared_ptr<const CycloCtx>& ctx() const { return ctx_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Rat& s) const;
    Cyclo inverse() const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Canonical text: "p/q" when rational, else "c0 + c1*z + ..." with
    /// z = zeta_m.
    std::string to_string() const;

    /// Numeric embedding at zeta_m = e^{2*pi*i/m}; for float oracles only.
    std::complex<double> to_complex() const;

  private:
    void reduce();
    static void unify(Cyclo& a, Cyclo& b);
    std::shared_ptr<const CycloCtx> ctx_;  // null: plain rational
    std::vector<Rat> coeffs_;              // length 1 (rational) or phi(m)
};

}  // namespace boxcalc
