#include "boxcalc/boxspline.hpp"

#include "boxcalc/bernoulli.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace boxcalc;

namespace {

std::shared_ptr<const ArrangementIndex> index_of(Configuration c) {
    return std::make_shared<ArrangementIndex>(std::move(c));
}

RatVec sample_regular(const ArrangementIndex& arr, std::mt19937_64& gen) {
    for (;;) {
        RatVec v(arr.dim());
        for (auto& x : v) x = Rat(Int((long)(gen() % 1009)), Int(1009));
        if (arr.is_regular(v)) return v;
    }
}

}  // namespace

TEST_CASE("1-D box splines: indicator and hat") {
    auto arr = index_of(Configuration(1, {{Int(1)}}));
    BoxEvaluator box(arr);
    CHECK(box.box_eval({0}, {Rat(1, 2)}) == 1);
    CHECK(box.box_eval({0}, {Rat(3, 2)}) == 0);

    auto arr2 = index_of(Configuration(1, {{Int(1)}, {Int(1)}}));
    BoxEvaluator box2(arr2);
    CHECK(box2.box_eval({0, 1}, {Rat(1, 2)}) == Rat(1, 2));
    CHECK(box2.box_eval({0, 1}, {Rat(3, 2)}) == Rat(1, 2));
    CHECK(box2.box_eval({0, 1}, {Rat(5, 4)}) == Rat(3, 4));
    CHECK(box2.box_eval({0, 1}, {Rat(7, 2)}) == 0);
    CHECK_THROWS_AS(box2.box_eval({0, 1}, {Rat(1)}), NonRegularPoint);
}

TEST_CASE("A2 box spline near the diagonal") {
    // B(v) = ∫₀¹ 1_{[0,1]}(v1-t) 1_{[0,1]}(v2-t) dt; at v = (1/2, 1/2+ε)
    // the overlap interval is [0, 1/2], so the value is exactly 1/2
    auto arr = index_of(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}));
    BoxEvaluator box(arr);
    Rat eps(1, 1000);
    CHECK(box.box_eval({0, 1, 2}, {Rat(1, 2), Rat(1, 2) + eps}) == Rat(1, 2));
    // directly computed overlap for an asymmetric point:
    // t ∈ [0,1] with 1/4-t ∈ [0,1] and 5/8-t ∈ [0,1]: t ∈ [0, 1/4], length 1/4
    CHECK(box.box_eval({0, 1, 2}, {Rat(1, 4), Rat(5, 8)}) == Rat(1, 4));
}

TEST_CASE("box spline support matches the zonotope") {
    std::mt19937_64 gen(3);
    for (Configuration c :
         {Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}),
          Configuration(1, {{Int(2)}}),
          Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}, {Int(1), Int(-1)}})}) {
        auto arr = index_of(std::move(c));
        BoxEvaluator box(arr);
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < arr->config().size(); ++i) all.push_back(i);
        for (int trial = 0; trial < 15; ++trial) {
            RatVec v(arr->dim());
            for (auto& x : v)
                x = Rat(Int((long)(gen() % (3 * 1009))) - 1009, Int(1009));
            if (!arr->is_regular(v)) continue;
            Rat b = box.box_eval(all, v);
            if (arr->zonotope_contains(v)) {
                CHECK(b > 0);
            } else {
                CHECK(b == 0);
            }
        }
    }
}

TEST_CASE("partition of unity") {
    std::mt19937_64 gen(5);
    for (Configuration c :
         {Configuration(1, {{Int(1)}, {Int(1)}}), Configuration(1, {{Int(2)}}),
          Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}),
          Configuration(3, {{Int(1), Int(0), Int(0)},
                            {Int(0), Int(1), Int(0)},
                            {Int(0), Int(0), Int(1)},
                            {Int(1), Int(1), Int(1)}})}) {
        auto arr = index_of(std::move(c));
        BoxEvaluator box(arr);
        const Configuration& cfg = arr->config();
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < cfg.size(); ++i) all.push_back(i);
        for (int trial = 0; trial < 5; ++trial) {
            RatVec v = sample_regular(*arr, gen);
            // finite sum over λ with v - λ in Z(X)
            Rat sum = 0;
            std::vector<Int> lo(cfg.n), hi(cfg.n);
            for (std::size_t i = 0; i < cfg.n; ++i) {
                Int mx = 0, mn = 0;
                for (const IntVec& a : cfg.X) {
                    if (a[i] > 0) mx += a[i];
                    if (a[i] < 0) mn += a[i];
                }
                lo[i] = rat_floor(v[i] - Rat(mx)) - 1;
                hi[i] = rat_floor(v[i] - Rat(mn)) + 1;
            }
            IntVec lambda = lo;
            for (;;) {
                RatVec u(cfg.n);
                for (std::size_t i = 0; i < cfg.n; ++i) u[i] = v[i] - Rat(lambda[i]);
                if (arr->zonotope_contains(u)) sum += box.box_eval(all, u);
                std::size_t j = 0;
                while (j < cfg.n && ++lambda[j] > hi[j]) lambda[j++] = lo[j];
                if (j == cfg.n) break;
            }
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("central symmetry") {
    std::mt19937_64 gen(7);
    auto arr = index_of(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}));
    BoxEvaluator box(arr);
    RatVec rho{Rat(2), Rat(2)};  // Σ a
    for (int trial = 0; trial < 8; ++trial) {
        RatVec v = sample_regular(*arr, gen);
        RatVec w{rho[0] - v[0], rho[1] - v[1]};
        CHECK(box.box_eval({0, 1, 2}, v) == box.box_eval({0, 1, 2}, w));
    }
}

TEST_CASE("cache coherence") {
    std::mt19937_64 gen(9);
    auto arr = index_of(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}));
    BoxEvaluator warm(arr);
    RatVec v = sample_regular(*arr, gen);
    Rat first = warm.box_eval({0, 1, 2}, v);
    CHECK(warm.cache_size() > 0);
    Rat second = warm.box_eval({0, 1, 2}, v);  // cache hit
    BoxEvaluator cold(arr);
    CHECK(first == second);
    CHECK(first == cold.box_eval({0, 1, 2}, v));
    warm.clear_cache();
    CHECK(warm.cache_size() == 0);
    CHECK(first == warm.box_eval({0, 1, 2}, v));
}

TEST_CASE("box convolution examples") {
    auto arr = index_of(Configuration(1, {{Int(1)}, {Int(1)}}));
    // Y = ∅ returns F itself
    EvaluableFn<Rat> f_id{[](const RatVec& u) { return u[0]; }, 1};
    CHECK(box_convolve_eval(*arr, {}, f_id, {Rat(1, 3)}) == Rat(1, 3));
    // constant convolves to itself
    EvaluableFn<Rat> f_one{[](const RatVec&) { return Rat(1); }, 0};
    CHECK(box_convolve_eval(*arr, {0}, f_one, {Rat(1, 3)}) == 1);
    // I_ω of the mean-zero periodic W(X₂) vanishes identically
    BernoulliExpr w2 = w_series(arr->config());
    EvaluableFn<Rat> fw{[&w2](const RatVec& u) { return w_eval(w2, u); }, w2.degree_bound()};
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 6; ++trial) {
        RatVec v = sample_regular(*arr, gen);
        CHECK(box_convolve_eval(*arr, {0}, fw, v) == 0);
    }
}

TEST_CASE("quadrature oracle basics") {
    Configuration c1(1, {{Int(1)}});
    Poly t = Poly::parse("v1", 1);
    CHECK(box_quadrature_oracle(c1, {0}, t, 1000) == Rat(1, 2));  // midpoint exact for linear
    Configuration c2(1, {{Int(1)}, {Int(1)}});
    CHECK(box_quadrature_oracle(c2, {0, 1}, Poly::constant(1, 1), 100) == 1);
    Configuration a2(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
    CHECK(box_quadrature_oracle(a2, {0, 1, 2}, Poly::parse("v1", 2), 1000) == 1);
}

TEST_CASE("pairing consistency against the quadrature oracle") {
    // Σ_grid box_eval · test · cell ≈ ⟨B, test⟩ for a quadratic test
    Configuration c(1, {{Int(1)}, {Int(1)}});
    auto arr = index_of(c);
    BoxEvaluator box(arr);
    Poly test = Poly::parse("v1^2", 1);
    Rat oracle = box_quadrature_oracle(c, {0, 1}, test, 200000);
    long K = 400;
    Rat sum = 0;
    for (long i = 0; i < 2 * K; ++i) {
        RatVec v{Rat(2 * i + 1, 2 * K) + Rat(1, 2 * K * 100003)};
        if (!arr->is_regular(v)) continue;
        sum += box.box_eval({0, 1}, v) * test.eval(v);
    }
    Rat diff = sum / K - oracle;
    if (diff < 0) diff = -diff;
    CHECK(diff < Rat(1, 10000));
}
