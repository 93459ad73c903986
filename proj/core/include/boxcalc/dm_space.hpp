#pragma once

#include "boxcalc/arrangement.hpp"
#include "boxcalc/poly.hpp"

#include <vector>

namespace boxcalc {

/// Basis of the Dahmen–Micchelli space D(X): polynomials with ∂_Y p = 0 for
/// every cocircuit Y (equivalently every long subsequence), degree <= N - n.
struct DMBasis {
    int degree_bound = 0;
    std::vector<Poly> basis;  // graded-lex echelonized, deterministic
};

/// Kernel of the cocircuit-derivative map on polynomials of degree <= N - n.
/// The dimension is checked against the number of bases extracted from X.
DMBasis dm_basis(const ArrangementIndex& arr);

/// Same computation with an explicit degree cap (used to confirm the N - n
/// bound loses nothing).
DMBasis dm_basis_with_degree(const ArrangementIndex& arr, int degree_bound, bool check_dim = true);

bool is_in_dm(const ArrangementIndex& arr, const Poly& p);

}  // namespace boxcalc
