#pragma once

#include "boxcalc/arrangement.hpp"
#include "boxcalc/poly.hpp"
#include "boxcalc/poly1.hpp"

#include <functional>
#include <map>
#include <memory>

namespace boxcalc {

/// A function evaluable exactly at regular rational points, together with a
/// bound on its polynomial degree on each affine tope. The scalar T is Rat
/// for everything untwisted and Cyclo for character-twisted data.
template <typename T>
struct EvaluableFn {
    std::function<T(const RatVec&)> eval;
    int degree_bound = 0;
};

/// Pointwise exact box-spline evaluation by peeling the list down to a basis
/// and integrating one segment at a time: B(Y)(v) = ∫₀¹ B(Y∖a)(v−ta) dt.
/// Each 1-D integrand is piecewise polynomial with breakpoints on the affine
/// arrangement; pieces are reconstructed by Lagrange interpolation at regular
/// rational nodes and integrated exactly.
class BoxEvaluator {
  public:
    explicit BoxEvaluator(std::shared_ptr<const ArrangementIndex> arr) : arr_(std::move(arr)) {}

    const ArrangementIndex& arrangement() const { return *arr_; }

    /// Density of B(Y) at the regular point v; Y must span. Values are
    /// memoized per (sublist, point); cached and uncached evaluation agree.
    Rat box_eval(const std::vector<std::size_t>& Y, const RatVec& v);

    void clear_cache() { cache_.clear(); }
    std::size_t cache_size() const { return cache_.size(); }

  private:
    Rat eval_list(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& peel,
                  std::size_t level, const RatVec& v);
    Rat base_case(const std::vector<std::size_t>& sigma, const RatVec& v);

    std::shared_ptr<const ArrangementIndex> arr_;
    std::map<std::pair<std::vector<std::size_t>, RatVec>, Rat> cache_;
    std::map<std::vector<std::size_t>, std::pair<RatMat, Rat>> base_cache_;  // inverse, 1/|det|
};

/// Nodes for one piece (lo,hi): `count` equally spaced interior rationals,
/// retried with a denominator bump if any lands on the arrangement (which
/// signals an arrangement bug, but is bounded-retried per the contract).
RatVec pick_regular_nodes(const ArrangementIndex& arr, const RatVec& v, const IntVec& direction,
                          const Rat& lo, const Rat& hi, std::size_t count);

/// (I_{a_1} ∘ … ∘ I_{a_k} F)(v) for the sublist Y of X: convolution of F with
/// B(Y) evaluated at the regular point v. Y may be empty (B(∅) = δ) and need
/// not span.
template <typename T>
T box_convolve_eval(const ArrangementIndex& arr, const std::vector<std::size_t>& Y,
                    const EvaluableFn<T>& F, const RatVec& v) {
    if (!arr.is_regular(v)) throw NonRegularPoint("box_convolve_eval at a non-regular point");
    if (Y.empty()) return F.eval(v);
    std::vector<std::size_t> prefix(Y.begin(), Y.end() - 1);
    const IntVec& a = arr.config().X[Y.back()];
    std::vector<Rat> cuts = arr.segment_breakpoints(v, a, 0, 1);
    cuts.insert(cuts.begin(), Rat(0));
    cuts.push_back(Rat(1));
    // integrand degree on each piece is at most F.degree_bound + |Y| - 1
    std::size_t count = (std::size_t)std::max(1, F.degree_bound + (int)Y.size());
    T total(0);
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        RatVec nodes = pick_regular_nodes(arr, v, a, cuts[p], cuts[p + 1], count);
        std::vector<T> values;
        values.reserve(nodes.size());
        for (const Rat& t : nodes) {
            RatVec u(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] - t * Rat(a[i]);
            values.push_back(box_convolve_eval(arr, prefix, F, u));
        }
        Poly1T<T> piece = lagrange_1d(nodes, values);
        total = total + integrate_1d(piece, cuts[p], cuts[p + 1]);
    }
    return total;
}

/// Midpoint tensor-grid estimate of ⟨B(Y), test⟩ directly from the defining
/// cube integral; an independent oracle for the exact evaluator. The grid is
/// chosen so the total number of samples is about `samples`.
Rat box_quadrature_oracle(const Configuration& c, const std::vector<std::size_t>& Y,
                          const Poly& test, long samples);

}  // namespace boxcalc
