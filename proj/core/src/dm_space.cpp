#include "boxcalc/dm_space.hpp"

#include <algorithm>

namespace boxcalc {

namespace {

/// All exponent multi-indices of total degree <= bound, graded-lex descending
/// (the Poly print order).
std::vector<std::vector<int>> monomials_up_to(std::size_t dim, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(dim, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == dim) {
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

Poly cocircuit_derivative(const ArrangementIndex& arr, const std::vector<std::size_t>& Y,
                          const Poly& p) {
    Poly q = p;
    for (std::size_t idx : Y) q = q.dir_derivative(arr.config().X[idx]);
    return q;
}

}  // namespace

DMBasis dm_basis_with_degree(const ArrangementIndex& arr, int degree_bound, bool check_dim) {
    const Configuration& c = arr.config();
    auto monos = monomials_up_to(c.n, degree_bound);
    const std::size_t M = monos.size();

    // rows: one per (cocircuit, output monomial); columns: input monomials
    std::vector<std::vector<Rat>> rows;
    for (const auto& Y : arr.cocircuits()) {
        std::vector<Poly> images;
        images.reserve(M);
        for (const auto& e : monos)
            images.push_back(cocircuit_derivative(arr, Y, Poly::monomial(c.n, e, 1)));
        for (std::size_t out_m = 0; out_m < M; ++out_m) {
            std::vector<Rat> row(M, Rat(0));
            bool nonzero = false;
            for (std::size_t in_m = 0; in_m < M; ++in_m) {
                row[in_m] = images[in_m].coeff(monos[out_m]);
                nonzero = nonzero || row[in_m] != 0;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    RatMat constraint(rows.size(), M);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < M; ++j) constraint(i, j) = rows[i][j];
    std::vector<RatVec> kernel = kernel_basis(constraint);

    // echelonize the kernel for a deterministic graded-lex basis
    RatMat kmat(kernel.size(), M);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < M; ++j) kmat(i, j) = kernel[i][j];
    RrefResult rr = rref(kmat);

    DMBasis out;
    out.degree_bound = degree_bound;
    for (std::size_t i = 0; i < rr.rank; ++i) {
        Poly p(c.n);
        for (std::size_t j = 0; j < M; ++j)
            if (rr.reduced(i, j) != 0) p = p + Poly::monomial(c.n, monos[j], rr.reduced(i, j));
        out.basis.push_back(std::move(p));
    }
    if (check_dim && out.basis.size() != arr.bases().size())
        throw BoxcalcError("dm_basis: dimension does not match the number of bases");
    return out;
}

DMBasis dm_basis(const ArrangementIndex& arr) {
    int bound = (int)arr.config().size() - (int)arr.config().n;
    return dm_basis_with_degree(arr, bound, true);
}

bool is_in_dm(const ArrangementIndex& arr, const Poly& p) {
    if (p.dim() != arr.config().n) throw DimensionMismatch("is_in_dm: dimension mismatch");
    for (const auto& Y : arr.cocircuits())
        if (!cocircuit_derivative(arr, Y, p).is_zero()) return false;
    return true;
}

}  // namespace boxcalc
