#pragma once

#include "boxcalc/errors.hpp"
#include "boxcalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace boxcalc {

/// Graded-lexicographic order on exponent multi-indices, highest first.
struct GrlexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Variables are v1..vn; no zero coefficients are stored.
class Poly {
  public:
    using Map = std::map<std::vector<int>, Rat, GrlexGreater>;

    explicit Poly(std::size_t dim = 1) : dim_(dim) {}

    static Poly constant(std::size_t dim, const Rat& c);
    static Poly variable(std::size_t dim, std::size_t index);  // v_{index+1}
    static Poly monomial(std::size_t dim, const std::vector<int>& exps, const Rat& c);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const Map& terms() const { return terms_; }
    Rat coeff(const std::vector<int>& exps) const;

    Rat eval(const RatVec& v) const;

    /// Directional derivative along a.
    Poly dir_derivative(const IntVec& a) const;
    /// Composition v -> v - a.
    Poly shift(const RatVec& a) const;
    /// Difference operator: p(v) - p(v-a).
    Poly nabla(const IntVec& a) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    /// Canonical text form: monomials in graded-lex descending order,
    /// coefficients reduced. print(parse(s)) is canonical.
    std::string to_string() const;

    static Poly parse(const std::string& text, std::size_t dim);

  private:
    void add_term(const std::vector<int>& exps, const Rat& c);
    std::size_t dim_;
    Map terms_;
};

/// Applies the truncated Todd product ∏_{a∈X} Σ_j (−1)^j ∂_a^j/(j+1)! to p.
/// On polynomials this equals convolution with the box spline of X.
Poly todd_apply(const std::vector<IntVec>& X, const Poly& p);

}  // namespace boxcalc
