#include "boxcalc/arrangement.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace boxcalc;

namespace {

Configuration a2() {
    return Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
}

Configuration omega2() { return Configuration(1, {{Int(1)}, {Int(1)}}); }

/// Brute-force zonotope membership: solve Σ t_i a_i = v with t ∈ [0,1]^N by
/// parameterizing the affine solution set and running Fourier–Motzkin over
/// the free variables. Independent of the support-function route.
bool zonotope_oracle(const Configuration& c, const RatVec& v) {
    const std::size_t n = c.n, N = c.size();
    RatMat aug(n, N + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < N; ++j) aug(i, j) = Rat(c.X[j][i]);
        aug(i, N) = v[i];
    }
    RrefResult rr = rref(aug);
    for (std::size_t col : rr.pivot_cols)
        if (col == N) return false;  // inconsistent
    // particular solution: free variables zero
    RatVec t0(N, Rat(0));
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) t0[rr.pivot_cols[r]] = rr.reduced(r, N);
    // kernel basis of the coefficient matrix
    RatMat coeff(n, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < N; ++j) coeff(i, j) = Rat(c.X[j][i]);
    std::vector<RatVec> ker = kernel_basis(coeff);
    const std::size_t F = ker.size();
    // inequalities: 0 <= t0_j + Σ_f s_f ker[f][j] <= 1, rows (c, b): c·s <= b
    std::vector<std::pair<RatVec, Rat>> ineqs;
    for (std::size_t j = 0; j < N; ++j) {
        RatVec up(F), down(F);
        for (std::size_t f = 0; f < F; ++f) {
            up[f] = ker[f][j];
            down[f] = -ker[f][j];
        }
        ineqs.push_back({up, Rat(1) - t0[j]});
        ineqs.push_back({down, t0[j]});
    }
    // Fourier–Motzkin elimination
    for (std::size_t var = 0; var < F; ++var) {
        std::vector<std::pair<RatVec, Rat>> lower, upper, keep;
        for (auto& [row, b] : ineqs) {
            if (row[var] > 0)
                upper.push_back({row, b});
            else if (row[var] < 0)
                lower.push_back({row, b});
            else
                keep.push_back({row, b});
        }
        for (auto& [u, bu] : upper)
            for (auto& [l, bl] : lower) {
                Rat cu = u[var], cl = -l[var];
                RatVec row(F, Rat(0));
                for (std::size_t f = 0; f < F; ++f) row[f] = u[f] * cl + l[f] * cu;
                keep.push_back({row, bu * cl + bl * cu});
            }
        ineqs = std::move(keep);
    }
    for (auto& [row, b] : ineqs)
        if (b < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("configuration invariants") {
    CHECK_THROWS_AS(Configuration(2, {{Int(1), Int(0)}}), NonSpanningList);
    CHECK_THROWS_AS(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(0)}}), BoxcalcError);
    CHECK_THROWS_AS(Configuration(4, {}), UnsupportedSize);
    std::vector<IntVec> too_many(9, IntVec{Int(1)});
    CHECK_THROWS_AS(Configuration(1, too_many), UnsupportedSize);
}

TEST_CASE("admissible hyperplanes") {
    ArrangementIndex arr(a2());
    REQUIRE(arr.hyperplanes().size() == 3);
    std::vector<IntVec> normals;
    for (const auto& h : arr.hyperplanes()) normals.push_back(h.normal);
    CHECK(std::find(normals.begin(), normals.end(), IntVec{Int(1), Int(0)}) != normals.end());
    CHECK(std::find(normals.begin(), normals.end(), IntVec{Int(0), Int(1)}) != normals.end());
    CHECK(std::find(normals.begin(), normals.end(), IntVec{Int(1), Int(-1)}) != normals.end());

    CHECK(ArrangementIndex(omega2()).hyperplanes().size() == 1);
    CHECK(ArrangementIndex(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}))
              .hyperplanes()
              .size() == 2);
}

TEST_CASE("admissible subspaces") {
    ArrangementIndex arr(a2());
    CHECK(arr.subspaces().size() == 5);  // {0}, three lines, V
    CHECK(arr.proper_subspaces().size() == 4);
    CHECK(arr.subspaces().front().dim == 0);
    CHECK(arr.subspaces().back().dim == 2);

    ArrangementIndex arr1(omega2());
    CHECK(arr1.subspaces().size() == 2);  // {0} and V
}

TEST_CASE("cocircuits") {
    ArrangementIndex arr(a2());
    // X = [e1, e2, e1+e2]: complements of the three lines
    std::vector<std::vector<std::size_t>> expect{{1, 2}, {0, 2}, {0, 1}};
    auto cocs = arr.cocircuits();
    std::sort(cocs.begin(), cocs.end());
    std::sort(expect.begin(), expect.end());
    CHECK(cocs == expect);

    ArrangementIndex arr1(omega2());
    REQUIRE(arr1.cocircuits().size() == 1);
    CHECK(arr1.cocircuits()[0] == std::vector<std::size_t>{0, 1});

    ArrangementIndex arr2(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}));
    auto cocs2 = arr2.cocircuits();
    std::sort(cocs2.begin(), cocs2.end());
    CHECK(cocs2 == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("cocircuits are minimal long subsequences") {
    for (Configuration c :
         {a2(), omega2(),
          Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}, {Int(1), Int(-1)}}),
          Configuration(3, {{Int(1), Int(0), Int(0)},
                            {Int(0), Int(1), Int(0)},
                            {Int(0), Int(0), Int(1)},
                            {Int(1), Int(1), Int(1)}})}) {
        ArrangementIndex arr(std::move(c));
        for (const auto& Y : arr.cocircuits()) {
            CHECK(arr.is_long(Y));
            for (std::size_t drop = 0; drop < Y.size(); ++drop) {
                std::vector<std::size_t> smaller;
                for (std::size_t i = 0; i < Y.size(); ++i)
                    if (i != drop) smaller.push_back(Y[i]);
                CHECK_FALSE(arr.is_long(smaller));
            }
        }
    }
}

TEST_CASE("is_long examples") {
    ArrangementIndex arr(a2());
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(arr.is_long(all));
    CHECK_FALSE(arr.is_long({}));
    CHECK(arr.is_long({0, 1}));  // only e1+e2 remains, rank 1
}

TEST_CASE("regularity examples") {
    ArrangementIndex arr(a2());
    CHECK(arr.is_regular({Rat(1, 2), Rat(1, 3)}));
    CHECK_FALSE(arr.is_regular({Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(arr.is_regular({Rat(3), Rat(-2)}));
}

TEST_CASE("tope keys") {
    ArrangementIndex arr(a2());
    RatVec v{Rat(1, 4), Rat(1, 2)};
    auto key = arr.tope_key(v);
    // look the floors up by normal to stay order-independent
    for (std::size_t i = 0; i < arr.hyperplanes().size(); ++i) {
        const IntVec& eta = arr.hyperplanes()[i].normal;
        if (eta == IntVec{Int(1), Int(0)}) CHECK(key[i] == 0);
        if (eta == IntVec{Int(0), Int(1)}) CHECK(key[i] == 0);
        if (eta == IntVec{Int(1), Int(-1)}) CHECK(key[i] == -1);
    }
    CHECK(arr.tope_key({Rat(3, 4), Rat(1, 2)}) !=
          arr.tope_key({Rat(1, 4), Rat(1, 2)}));
    // lattice shift moves the key by the normal pairings
    RatVec w{v[0] + 2, v[1] - 1};
    auto key2 = arr.tope_key(w);
    for (std::size_t i = 0; i < arr.hyperplanes().size(); ++i) {
        Int shift = dot(arr.hyperplanes()[i].normal, IntVec{Int(2), Int(-1)});
        CHECK(key2[i] == key[i] + shift);
    }
    CHECK_THROWS_AS(arr.tope_key({Rat(0), Rat(1, 2)}), NonRegularPoint);
}

TEST_CASE("zonotope membership examples") {
    ArrangementIndex arr(a2());
    CHECK(arr.zonotope_contains({Rat(0), Rat(0)}));
    CHECK(arr.zonotope_contains({Rat(2), Rat(2)}));  // Σ a_i
    CHECK_FALSE(arr.zonotope_contains({Rat(2), Rat(-1, 2)}));
}

TEST_CASE("zonotope membership matches the Fourier-Motzkin oracle") {
    std::mt19937_64 gen(31);
    std::vector<Configuration> configs;
    configs.push_back(a2());
    configs.push_back(Configuration(
        2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}, {Int(1), Int(-1)}, {Int(2), Int(1)}}));
    configs.push_back(Configuration(3, {{Int(1), Int(0), Int(0)},
                                        {Int(0), Int(1), Int(0)},
                                        {Int(0), Int(0), Int(1)},
                                        {Int(1), Int(1), Int(1)}}));
    for (const Configuration& c : configs) {
        ArrangementIndex arr(c);
        for (int trial = 0; trial < 60; ++trial) {
            RatVec v(c.n);
            for (auto& x : v) x = Rat(Int((long)(gen() % 61)) - 20, Int((long)(gen() % 6) + 1));
            CHECK(arr.zonotope_contains(v) == zonotope_oracle(c, v));
        }
    }
}

TEST_CASE("zonotope volumes") {
    CHECK(ArrangementIndex(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}))
              .zonotope_volume() == 1);
    CHECK(ArrangementIndex(a2()).zonotope_volume() == 3);
    CHECK(ArrangementIndex(Configuration(1, {{Int(2)}})).zonotope_volume() == 2);
}

TEST_CASE("segment breakpoints") {
    ArrangementIndex arr(a2());
    // both congruences solved exactly: normal (0,1) crosses at 9/14,
    // normal (1,-1) at 1/7
    auto bps = arr.segment_breakpoints({Rat(1, 2), Rat(1, 2) + Rat(1, 7)}, {Int(0), Int(1)},
                                       Rat(0), Rat(1));
    CHECK(bps == std::vector<Rat>{Rat(1, 7), Rat(9, 14)});

    ArrangementIndex arr1(omega2());
    CHECK(arr1.segment_breakpoints({Rat(3, 2)}, {Int(1)}, Rat(0), Rat(1)) ==
          std::vector<Rat>{Rat(1, 2)});

    // direction pairing zero with all normals and regular base point: empty
    ArrangementIndex grid2(Configuration(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}));
    CHECK(grid2
              .segment_breakpoints({Rat(1, 2), Rat(1, 3)}, {Int(0), Int(1)}, Rat(0), Rat(1, 4))
              .empty());
    // whole segment inside a translated hyperplane
    CHECK_THROWS_AS(
        grid2.segment_breakpoints({Rat(1), Rat(1, 3)}, {Int(0), Int(1)}, Rat(0), Rat(1)),
        SegmentInsideArrangement);
}

TEST_CASE("greedy basis") {
    Configuration c = a2();
    CHECK(greedy_basis(c, {0, 1, 2}) == std::vector<std::size_t>{0, 1});
    CHECK(greedy_basis(c, {2, 1, 0}) == std::vector<std::size_t>{2, 1});
    CHECK_THROWS_AS(greedy_basis(c, {0}), NonSpanningList);
}
