#pragma once

#include "boxcalc/errors.hpp"
#include "boxcalc/rational.hpp"

#include <vector>

namespace boxcalc {

/// Dense univariate polynomial over an exact ring T (Rat or Cyclo).
/// Coefficients ascending; trailing coefficient nonzero or the list is empty.
template <typename T>
class Poly1T {
  public:
    Poly1T() = default;
    explicit Poly1T(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1T constant(T v) { return Poly1T(std::vector<T>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : (int)c_.size() - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    T eval(const Rat& t) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Poly1T derivative() const {
        if (c_.size() <= 1) return Poly1T{};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(Int(i));
        return Poly1T(std::move(d));
    }

    /// Antiderivative with zero constant term.
    Poly1T antiderivative() const {
        if (c_.empty()) return Poly1T{};
        std::vector<T> a(c_.size() + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] * Rat(1, Int(i + 1));
        return Poly1T(std::move(a));
    }

    /// Composition with t -> t + shift.
    Poly1T shifted_arg(const Rat& shift) const {
        Poly1T out;
        // Horner on (t + shift)
        for (std::size_t i = c_.size(); i-- > 0;) {
            out = out * Poly1T(std::vector<T>{T(shift), T(Rat(1))});
            out = out + Poly1T::constant(c_[i]);
        }
        return out;
    }

    friend Poly1T operator+(const Poly1T& a, const Poly1T& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly1T(std::move(r));
    }
    friend Poly1T operator-(const Poly1T& a, const Poly1T& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly1T(std::move(r));
    }
    friend Poly1T operator*(const Poly1T& a, const Poly1T& b) {
        if (a.is_zero() || b.is_zero()) return Poly1T{};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly1T(std::move(r));
    }
    Poly1T operator*(const T& s) const {
        std::vector<T> r = c_;
        for (T& x : r) x = x * s;
        return Poly1T(std::move(r));
    }
    Poly1T operator-() const {
        std::vector<T> r = c_;
        for (T& x : r) x = -x;
        return Poly1T(std::move(r));
    }

    bool operator==(const Poly1T& o) const { return c_ == o.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using Poly1D = Poly1T<Rat>;

/// Exact integral of p over [lo, hi].
template <typename T>
T integrate_1d(const Poly1T<T>& p, const Rat& lo, const Rat& hi) {
    Poly1T<T> a = p.antiderivative();
    return a.eval(hi) - a.eval(lo);
}

/// Unique interpolant of degree < nodes.size() through (nodes[i], values[i]).
/// Nodes must be pairwise distinct rationals; values live in T.
template <typename T>
Poly1T<T> lagrange_1d(const RatVec& nodes, const std::vector<T>& values) {
    if (nodes.size() != values.size())
        throw DimensionMismatch("lagrange_1d: nodes/values length mismatch");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw BoxcalcError("lagrange_1d: duplicate nodes");
    Poly1T<T> sum;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Poly1T<T> basis = Poly1T<T>::constant(T(Rat(1)));
        Rat denom = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly1T<T>(std::vector<T>{T(-nodes[j]), T(Rat(1))});
            denom *= nodes[i] - nodes[j];
        }
        sum = sum + basis * (values[i] * T(Rat(1) / denom));
    }
    return sum;
}

}  // namespace boxcalc
