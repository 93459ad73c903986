#include "boxcalc/linalg.hpp"

#include "boxcalc/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace boxcalc {

RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det: non-square matrix");
    RatMat a = m;
    const std::size_t n = a.rows();
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            d = -d;
        }
        d *= a(k, k);
        Rat inv = Rat(1) / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

RrefResult rref(const RatMat& m) {
    RrefResult res;
    res.reduced = m;
    RatMat& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const RatMat& m) { return rref(m).rank; }

std::size_t rank_of_int_rows(const std::vector<IntVec>& rows, std::size_t dim) {
    RatMat m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rat(rows[i][j]);
    return rank(m);
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void snf_verify(const IntMat& orig, const SnfDecomposition& s) {
    IntMat d(orig.rows(), orig.cols());
    for (std::size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
    if (!(s.left * orig * s.right == d))
        throw BoxcalcError("smith_normal_form: product check failed");
    Int dl = det(s.left), dr = det(s.right);
    if ((dl != 1 && dl != -1) || (dr != 1 && dr != -1))
        throw BoxcalcError("smith_normal_form: transform not unimodular");
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
        if (s.diag[i] < 0 || s.diag[i + 1] < 0)
            throw BoxcalcError("smith_normal_form: negative diagonal");
        if (s.diag[i] == 0 && s.diag[i + 1] != 0)
            throw BoxcalcError("smith_normal_form: zero before nonzero");
        if (s.diag[i] != 0 && s.diag[i + 1] % s.diag[i] != 0)
            throw BoxcalcError("smith_normal_form: divisibility chain broken");
    }
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat left = IntMat::identity(rows);
    IntMat right = IntMat::identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(left(i, c), left(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(right(r, i), right(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < cols; ++c) a(dst, c) += f * a(src, c);
        for (std::size_t c = 0; c < rows; ++c) left(dst, c) += f * left(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < rows; ++r) a(r, dst) += f * a(r, src);
        for (std::size_t r = 0; r < cols; ++r) right(r, dst) += f * right(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < rows; ++c) left(i, c) = -left(i, c);
    };

    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t k = 0; k < nmin; ++k) {
        // pivot: nonzero entry of smallest absolute value in the trailing block
        std::size_t pi = k, pj = k;
        bool found = false;
        Int best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                Int v = a(i, j) < 0 ? Int(-a(i, j)) : a(i, j);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != k) swap_rows(k, pi);
        if (pj != k) swap_cols(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a(i, k) == 0) continue;
                Int q = a(i, k) / a(k, k);
                add_row(i, k, -q);
                if (a(i, k) != 0) {  // remainder: smaller pivot available
                    swap_rows(k, i);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a(k, j) == 0) continue;
                Int q = a(k, j) / a(k, k);
                add_col(j, k, -q);
                if (a(k, j) != 0) {
                    swap_cols(k, j);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility of the trailing block by the pivot
                for (std::size_t i = k + 1; i < rows && clean; ++i)
                    for (std::size_t j = k + 1; j < cols && clean; ++j)
                        if (a(i, j) % a(k, k) != 0) {
                            add_row(k, i, Int(1));
                            clean = false;
                        }
            }
        }
        if (a(k, k) < 0) negate_row(k);
    }

    SnfDecomposition res;
    res.left = left;
    res.right = right;
    res.diag.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i) res.diag[i] = a(i, i);
    snf_verify(m, res);
    return res;
}

RatMat rat_inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("rat_inverse: non-square");
    const std::size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw BoxcalcError("rat_inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = Rat(1) / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= piv;
            inv(k, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMat unimodular_inverse(const IntMat& m) {
    RatMat inv = rat_inverse(to_rat_mat(m));
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(inv(i, j)))
                throw BoxcalcError("unimodular_inverse: matrix is not unimodular");
            r(i, j) = num(inv(i, j));
        }
    return r;
}

std::vector<IntVec> integer_kernel_basis(const IntMat& m) {
    // m x = 0 <=> D y = 0 with y = right^{-1} x; free coordinates of y map
    // through `right` to a saturated basis of the integer kernel.
    SnfDecomposition s = smith_normal_form(m);
    std::vector<IntVec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool free_col = j >= s.diag.size() || s.diag[j] == 0;
        if (free_col) basis.push_back(s.right.col(j));
    }
    return basis;
}

Int make_primitive(IntVec& v) {
    Int g = vec_gcd(v);
    if (g == 0) throw BoxcalcError("make_primitive: zero vector");
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0) {
            for (Int& y : v) y = -y;
            return -g;
        }
        break;
    }
    return g;
}

IntVec primitive_normal(const std::vector<IntVec>& vectors, std::size_t dim) {
    if (dim == 0) throw DimensionMismatch("primitive_normal: zero-dimensional space");
    RatMat m(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rat(vectors[i][j]);
    if (rank(m) != dim - 1)
        throw BoxcalcError("primitive_normal: span is not a hyperplane");
    std::vector<RatVec> ker = kernel_basis(m);
    // rank dim-1 implies a one-dimensional kernel
    const RatVec& k = ker.front();
    Int l = 1;
    for (const Rat& q : k) l = l / int_gcd(l, den(q)) * den(q);
    IntVec n(dim);
    for (std::size_t j = 0; j < dim; ++j) n[j] = num(k[j] * Rat(l));
    make_primitive(n);
    return n;
}

QuotientMap lattice_quotient(const std::vector<IntVec>& s_basis, std::size_t ambient_dim) {
    const std::size_t n = ambient_dim, d = s_basis.size();
    QuotientMap q;
    q.ambient_dim = n;
    q.subspace_dim = d;
    if (d == 0) {
        q.projection = IntMat::identity(n);
        q.section = IntMat::identity(n);
        return q;
    }
    if (rank_of_int_rows(s_basis, n) != d)
        throw BoxcalcError("lattice_quotient: dependent s_basis");
    IntMat S(n, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) S(i, j) = s_basis[j][i];
    SnfDecomposition snf = smith_normal_form(S);
    IntMat left_inv = unimodular_inverse(snf.left);
    // saturation of span(s) ∩ Z^n = first d columns of left^{-1}
    for (std::size_t j = 0; j < d; ++j) q.saturation_basis.push_back(left_inv.col(j));
    q.projection = IntMat(n - d, n);
    for (std::size_t i = 0; i < n - d; ++i)
        for (std::size_t j = 0; j < n; ++j) q.projection(i, j) = snf.left(d + i, j);
    q.section = IntMat(n, n - d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n - d; ++j) q.section(i, j) = left_inv(i, d + j);
    // projection kills s and section is a right inverse
    for (std::size_t j = 0; j < d; ++j) {
        IntVec img = q.projection.apply(s_basis[j]);
        for (const Int& x : img)
            if (x != 0) throw BoxcalcError("lattice_quotient: projection does not kill s");
    }
    return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

}  // namespace boxcalc
