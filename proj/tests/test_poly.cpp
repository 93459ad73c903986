#include "boxcalc/poly.hpp"

#include "boxcalc/poly1.hpp"

#include <doctest.h>

#include <random>

using namespace boxcalc;

namespace {

Poly random_poly(std::mt19937_64& gen, std::size_t dim, int maxdeg) {
    Poly p(dim);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<int> e(dim);
        int left = maxdeg;
        for (std::size_t i = 0; i < dim; ++i) {
            e[i] = (int)(gen() % (left + 1));
            left -= e[i];
        }
        Rat c(Int((long)(gen() % 13)) - 6, Int((long)(gen() % 4) + 1));
        p = p + Poly::monomial(dim, e, c);
    }
    return p;
}

RatVec random_point(std::mt19937_64& gen, std::size_t dim) {
    RatVec v(dim);
    for (auto& x : v) x = Rat(Int((long)(gen() % 41)) - 20, Int((long)(gen() % 7) + 1));
    return v;
}

}  // namespace

TEST_CASE("poly evaluation examples") {
    Poly p = Poly::parse("v1^2*v2", 2);
    CHECK(p.eval({Rat(2), Rat(3)}) == 12);
    CHECK(Poly::constant(2, 1).eval({Rat(9), Rat(-4)}) == 1);
    CHECK(Poly::parse("v1-v2", 2).eval({Rat(1, 2), Rat(1, 2)}) == 0);
    CHECK_THROWS(p.eval({Rat(1)}));
}

TEST_CASE("directional derivative examples") {
    CHECK(Poly::parse("v1^2", 2).dir_derivative({Int(1), Int(0)}) == Poly::parse("2*v1", 2));
    CHECK(Poly::parse("v1", 2).dir_derivative({Int(1), Int(1)}) == Poly::constant(2, 1));
    CHECK(Poly::constant(2, Rat(5, 3)).dir_derivative({Int(2), Int(1)}).is_zero());
}

TEST_CASE("shift examples") {
    CHECK(Poly::parse("v1", 1).shift({Rat(1)}) == Poly::parse("v1-1", 1));
    CHECK(Poly::parse("v1^2", 1).shift({Rat(1)}) == Poly::parse("v1^2-2*v1+1", 1));
    Poly p = Poly::parse("v1^2*v2 - 3*v2", 2);
    CHECK(p.shift({Rat(0), Rat(0)}) == p);
}

TEST_CASE("nabla examples") {
    CHECK(Poly::parse("v1", 1).nabla({Int(1)}) == Poly::constant(1, 1));
    CHECK(Poly::parse("v1^2", 1).nabla({Int(1)}) == Poly::parse("2*v1-1", 1));
    CHECK(Poly::constant(1, 7).nabla({Int(1)}).is_zero());
}

TEST_CASE("nabla equals identity minus shift; operators commute") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = random_poly(gen, 2, 4);
        IntVec a{Int((long)(gen() % 5)) - 2, Int((long)(gen() % 5)) - 2};
        IntVec b{Int((long)(gen() % 5)) - 2, Int((long)(gen() % 5)) - 2};
        CHECK(p.nabla(a) == p - p.shift(to_rat_vec(a)));
        CHECK(p.dir_derivative(a).nabla(b) == p.nabla(b).dir_derivative(a));
    }
}

TEST_CASE("todd examples") {
    CHECK(todd_apply({{Int(1)}}, Poly::parse("v1", 1)) == Poly::parse("v1 - 1/2", 1));
    CHECK(todd_apply({{Int(1)}, {Int(1)}}, Poly::parse("v1^2", 1)) ==
          Poly::parse("v1^2 - 2*v1 + 7/6", 1));
    CHECK(todd_apply({{Int(1), Int(2)}, {Int(3), Int(-1)}}, Poly::constant(2, 1)) ==
          Poly::constant(2, 1));
}

TEST_CASE("todd over a singleton equals the segment integral") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(gen, 2, 3);
        IntVec a{Int((long)(gen() % 5)) - 2, Int((long)(gen() % 5)) - 2};
        Poly lhs = todd_apply({a}, p);
        RatVec v = random_point(gen, 2);
        // ∫₀¹ p(v - t a) dt via a univariate restriction
        Poly1D q;
        {
            // p(v - t a) as polynomial in t: expand through interpolation
            int d = std::max(0, p.total_degree());
            RatVec nodes;
            std::vector<Rat> values;
            for (int i = 0; i <= d; ++i) {
                Rat t(i, d + 1);
                nodes.push_back(t);
                RatVec u(2);
                for (int k = 0; k < 2; ++k) u[k] = v[k] - t * Rat(a[k]);
                values.push_back(p.eval(u));
            }
            q = lagrange_1d(nodes, values);
        }
        CHECK(lhs.eval(v) == integrate_1d(q, 0, 1));
    }
}

TEST_CASE("lagrange interpolation examples") {
    CHECK(lagrange_1d(RatVec{0, 1}, std::vector<Rat>{0, 1}) == Poly1D({Rat(0), Rat(1)}));
    CHECK(lagrange_1d(RatVec{0, 1, 2}, std::vector<Rat>{1, 1, 1}) == Poly1D({Rat(1)}));
    CHECK(lagrange_1d(RatVec{0, 1, 2}, std::vector<Rat>{0, 1, 4}) ==
          Poly1D({Rat(0), Rat(0), Rat(1)}));
    CHECK_THROWS(lagrange_1d(RatVec{0, 0}, std::vector<Rat>{1, 2}));
}

TEST_CASE("lagrange reproduces polynomials at fresh points") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> coeffs;
        for (int i = 0; i < 4; ++i)
            coeffs.push_back(Rat(Int((long)(gen() % 19)) - 9, Int((long)(gen() % 5) + 1)));
        Poly1D p(coeffs);
        RatVec nodes{Rat(0), Rat(1, 3), Rat(1, 2), Rat(5, 7)};
        std::vector<Rat> values;
        for (const Rat& t : nodes) values.push_back(p.eval(t));
        Poly1D q = lagrange_1d(nodes, values);
        CHECK(q == p);
        CHECK(q.eval(Rat(19, 11)) == p.eval(Rat(19, 11)));
    }
}

TEST_CASE("exact 1-D integration examples") {
    CHECK(integrate_1d(Poly1D({Rat(0), Rat(1)}), 0, 1) == Rat(1, 2));
    CHECK(integrate_1d(Poly1D({Rat(1)}), Rat(-3, 2), Rat(7, 2)) == 5);
    CHECK(integrate_1d(Poly1D({Rat(0), Rat(0), Rat(1)}), 0, 1) == Rat(1, 3));
}

TEST_CASE("polynomial text syntax round-trips") {
    for (const char* s : {"v1^2*v2 - 1/2*v2 + 7/6", "0", "1", "-v1", "3/2", "v2^3 - v1"}) {
        Poly p = Poly::parse(s, 2);
        CHECK(Poly::parse(p.to_string(), 2) == p);
        CHECK(p.to_string() == Poly::parse(p.to_string(), 2).to_string());
    }
    // print(parse(s)) is canonical: sorted monomials, reduced coefficients
    CHECK(Poly::parse("v2 + v1", 2).to_string() == "v1 + v2");
    CHECK(Poly::parse("2/4*v1", 2).to_string() == "1/2*v1");
    CHECK(Poly::parse("(v1+1)^2", 1).to_string() == "v1^2 + 2*v1 + 1");
    CHECK_THROWS_AS(Poly::parse("v3", 2), ParseError);
    CHECK_THROWS_AS(Poly::parse("v1 +", 2), ParseError);
    CHECK_THROWS_AS(Poly::parse("1 2", 2), ParseError);
}
