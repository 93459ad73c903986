#include "boxcalc/boxspline.hpp"

#include <algorithm>
#include <cmath>

namespace boxcalc {

RatVec pick_regular_nodes(const ArrangementIndex& arr, const RatVec& v, const IntVec& direction,
                          const Rat& lo, const Rat& hi, std::size_t count) {
    const Rat width = hi - lo;
    for (std::size_t attempt = 0; attempt < 8; ++attempt) {
        RatVec nodes;
        nodes.reserve(count);
        bool ok = true;
        for (std::size_t j = 0; j < count && ok; ++j) {
            Rat t = lo + width * Rat(Int(j + 1), Int(count + 1 + attempt));
            RatVec u(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] - t * Rat(direction[i]);
            ok = arr.is_regular(u);
            nodes.push_back(t);
        }
        if (ok) return nodes;
    }
    throw BoxcalcError("pick_regular_nodes: no regular nodes after retries (arrangement bug)");
}

Rat BoxEvaluator::box_eval(const std::vector<std::size_t>& Y, const RatVec& v) {
    if (!arr_->is_regular(v)) throw NonRegularPoint("box_eval at a non-regular point");
    std::vector<std::size_t> sigma = greedy_basis(arr_->config(), Y);  // NonSpanningList if not
    std::vector<std::size_t> peel;
    for (std::size_t idx : Y)
        if (std::find(sigma.begin(), sigma.end(), idx) == sigma.end()) peel.push_back(idx);
    return eval_list(sigma, peel, peel.size(), v);
}

Rat BoxEvaluator::eval_list(const std::vector<std::size_t>& sigma,
                            const std::vector<std::size_t>& peel, std::size_t level,
                            const RatVec& v) {
    if (level == 0) return base_case(sigma, v);

    std::vector<std::size_t> key_list = sigma;
    key_list.insert(key_list.end(), peel.begin(), peel.begin() + level);
    std::sort(key_list.begin(), key_list.end());
    auto key = std::make_pair(std::move(key_list), v);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const IntVec& a = arr_->config().X[peel[level - 1]];
    std::vector<Rat> cuts = arr_->segment_breakpoints(v, a, 0, 1);
    cuts.insert(cuts.begin(), Rat(0));
    cuts.push_back(Rat(1));
    // B at the lower level is piecewise polynomial of degree <= level-1
    std::size_t count = level;
    Rat total = 0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        RatVec nodes = pick_regular_nodes(*arr_, v, a, cuts[p], cuts[p + 1], count);
        std::vector<Rat> values;
        values.reserve(nodes.size());
        for (const Rat& t : nodes) {
            RatVec u(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] - t * Rat(a[i]);
            values.push_back(eval_list(sigma, peel, level - 1, u));
        }
        Poly1D piece = lagrange_1d(nodes, values);
        total += integrate_1d(piece, cuts[p], cuts[p + 1]);
    }
    cache_.emplace(std::move(key), total);
    return total;
}

Rat BoxEvaluator::base_case(const std::vector<std::size_t>& sigma, const RatVec& v) {
    auto it = base_cache_.find(sigma);
    if (it == base_cache_.end()) {
        const std::size_t n = arr_->config().n;
        RatMat A(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) A(i, j) = Rat(arr_->config().X[sigma[j]][i]);
        Rat d = det(A);
        if (d < 0) d = -d;
        it = base_cache_.emplace(sigma, std::make_pair(rat_inverse(A), Rat(1) / d)).first;
    }
    RatVec t = it->second.first.apply(v);
    for (const Rat& ti : t) {
        if (ti == 0 || ti == 1)
            throw BoxcalcError("box base case on the zonotope boundary at a regular point (bug)");
        if (ti < 0 || ti > 1) return 0;
    }
    return it->second.second;
}

Rat box_quadrature_oracle(const Configuration& c, const std::vector<std::size_t>& Y,
                          const Poly& test, long samples) {
    if (Y.empty()) return test.eval(RatVec(c.n, Rat(0)));
    const std::size_t k = Y.size();
    long side = std::max(1L, (long)std::llround(std::pow((double)samples, 1.0 / (double)k)));
    std::vector<long> idx(k, 0);
    Rat sum = 0;
    const Rat cell = Rat(1, Int(side));
    for (;;) {
        RatVec u(c.n, Rat(0));
        for (std::size_t j = 0; j < k; ++j) {
            Rat t = Rat(2 * idx[j] + 1, 2 * side);
            const IntVec& a = c.X[Y[j]];
            for (std::size_t i = 0; i < c.n; ++i) u[i] += t * Rat(a[i]);
        }
        sum += test.eval(u);
        std::size_t j = 0;
        while (j < k && ++idx[j] == side) idx[j++] = 0;
        if (j == k) break;
    }
    Rat scale = 1;
    for (std::size_t j = 0; j < k; ++j) scale *= cell;
    return sum * scale;
}

}  // namespace boxcalc
