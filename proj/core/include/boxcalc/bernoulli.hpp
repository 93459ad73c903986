#pragma once

#include "boxcalc/arrangement.hpp"
#include "boxcalc/cyclotomic.hpp"
#include "boxcalc/poly1.hpp"

#include <memory>
#include <string>
#include <vector>

namespace boxcalc {

/// The k-th Bernoulli polynomial B(k, t): B(0) = 1, d/dt B(k) = k B(k-1),
/// ∫₀¹ B(k) = 0 for k >= 1. Results are cached.
const Poly1D& bernoulli_poly(int k);

/// B(k, 0), the k-th Bernoulli number.
Rat bernoulli_number(int k);

/// One periodic factor B(order, frac(form·v + shift)). The affine shift
/// enters through character averaging over dual-lattice cosets; it vanishes
/// when the base-case form matrix is unimodular.
struct BernoulliFactor {
    int order = 1;
    RatVec form;   // covector on the ambient space
    Rat shift;     // normalized to [0, 1)
};

struct BernoulliTerm {
    Rat coeff;
    std::vector<BernoulliFactor> factors;
};

/// Closed form of a multiple Bernoulli series: a sum of rational multiples of
/// products of periodic Bernoulli factors. Exactly evaluable wherever no
/// factor argument is integral; Λ-periodic by construction.
struct BernoulliExpr {
    std::size_t dim = 0;
    std::vector<BernoulliTerm> terms;

    /// Max over terms of the sum of factor orders: a bound on the polynomial
    /// degree on any affine tope.
    int degree_bound() const;

    /// Canonical text form "c * B{k}(l(v)) * ..." with sorted terms.
    std::string to_string() const;
};

/// Closed form of W(X) as a Bernoulli expression: partial fractions of
/// 1/∏⟨a,γ⟩ into independent-denominator terms, inclusion–exclusion over the
/// remaining regularity constraints onto sublattices, and a diagonalized
/// one-dimensional base case per sublattice.
BernoulliExpr w_series(const Configuration& c);

/// W(X/s) pulled back to the ambient space through the lattice quotient;
/// constant along v + s and equal to 1 for s = V.
BernoulliExpr w_quotient(const ArrangementIndex& arr, const AdmissibleSubspace& s);

/// Exact evaluation; throws FormHitsInteger when a factor argument lands in Z
/// (never at affine-regular points).
Rat w_eval(const BernoulliExpr& e, const RatVec& v);

/// Twisted one-dimensional Bernoulli series W(X_k, z ω*) scaled by the
/// contents of the list: on each interval (l, l+1) the value is
/// e^{2iπ l z} · scale · P(t - l) with P of degree k-1 over Q(ζ_m).
struct TwistedBernoulli1D {
    int order = 1;
    Rat twist;  // z mod 1, non-integer
    Rat scale;  // 1/∏ c_i
    std::shared_ptr<const CycloCtx> ctx;
    Poly1T<Cyclo> piece;  // P on (0,1)

    Cyclo eval(const Rat& t) const;
};

/// W([c_1 ω, ..., c_k ω], z ω*) for a rational non-integer twist z; the c_i
/// are nonzero integers and only contribute the prefactor 1/∏ c_i. The
/// polynomial parts follow from d/dt W(X_k,z) = W(X_{k-1},z), continuity at
/// integers for k >= 2, and the covariance formula.
TwistedBernoulli1D w_twisted_1d(int k, const Rat& z, const std::vector<Int>& c_list);

}  // namespace boxcalc
