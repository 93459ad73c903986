#include "boxcalc/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace boxcalc {

const Poly1D& bernoulli_poly(int k) {
    static std::vector<Poly1D> cache{Poly1D::constant(Rat(1))};
    while ((int)cache.size() <= k) {
        int j = (int)cache.size();
        Poly1D q = (cache[j - 1] * Rat(j)).antiderivative();
        Rat c = -integrate_1d(q, 0, 1);
        cache.push_back(q + Poly1D::constant(c));
    }
    return cache[k];
}

Rat bernoulli_number(int k) { return bernoulli_poly(k).eval(0); }

int BernoulliExpr::degree_bound() const {
    int d = 0;
    for (const BernoulliTerm& t : terms) {
        int s = 0;
        for (const BernoulliFactor& f : t.factors) s += f.order;
        d = std::max(d, s);
    }
    return d;
}

namespace {

std::string form_to_string(const RatVec& form, const Rat& shift) {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        Rat a = form[i];
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) s += rat_to_string(a) + "*";
        s += "v" + std::to_string(i + 1);
    }
    if (shift != 0 || first) {
        Rat a = shift;
        if (first) {
            s += rat_to_string(a);
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
            s += rat_to_string(a);
        }
    }
    return s;
}

bool factor_less(const BernoulliFactor& a, const BernoulliFactor& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.form != b.form) return a.form < b.form;
    return a.shift < b.shift;
}

bool factor_eq(const BernoulliFactor& a, const BernoulliFactor& b) {
    return a.order == b.order && a.form == b.form && a.shift == b.shift;
}

bool factors_less(const std::vector<BernoulliFactor>& a, const std::vector<BernoulliFactor>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (factor_eq(a[i], b[i])) continue;
        return factor_less(a[i], b[i]);
    }
    return false;
}

void canonicalize(BernoulliExpr& e) {
    for (BernoulliTerm& t : e.terms) std::sort(t.factors.begin(), t.factors.end(), factor_less);
    std::sort(e.terms.begin(), e.terms.end(), [](const BernoulliTerm& a, const BernoulliTerm& b) {
        return factors_less(a.factors, b.factors);
    });
    std::vector<BernoulliTerm> merged;
    for (BernoulliTerm& t : e.terms) {
        if (!merged.empty() && merged.back().factors.size() == t.factors.size() &&
            std::equal(merged.back().factors.begin(), merged.back().factors.end(),
                       t.factors.begin(), factor_eq)) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    e.terms.clear();
    for (BernoulliTerm& t : merged)
        if (t.coeff != 0) e.terms.push_back(std::move(t));
}

/// Recursive construction state: a sublattice of the original dual lattice
/// realized as Z^rank, the denominator forms with multiplicities, the
/// regularity constraints, and the covectors expressing the character
/// exponent ⟨v, γ⟩ in the current coordinates.
struct WSeriesBuilder {
    std::size_t ambient_dim;
    BernoulliExpr out;

    using FormMap = std::map<IntVec, int>;  // primitive form -> multiplicity

    static bool is_zero_vec(const IntVec& v) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }

    void run(std::size_t rank, const FormMap& denoms, const std::vector<IntVec>& constraints,
             const RatMat& vrows, const Rat& coeff) {
        if (coeff == 0) return;
        for (const IntVec& c : constraints)
            if (is_zero_vec(c)) return;  // an unsatisfiable γ ≠ 0 constraint

        std::vector<IntVec> forms;
        std::vector<int> mults;
        for (const auto& [f, m] : denoms) {
            forms.push_back(f);
            mults.push_back(m);
        }
        if (rank_of_int_rows(forms, rank) < forms.size()) {
            partial_fractions(rank, forms, mults, constraints, vrows, coeff);
            return;
        }
        // independent denominators: peel off the remaining constraints
        std::vector<IntVec> extra;
        std::set<IntVec> denom_set(forms.begin(), forms.end());
        for (const IntVec& c : constraints)
            if (!denom_set.count(c)) extra.push_back(c);
        if (!extra.empty()) {
            inclusion_exclusion(rank, denoms, extra, vrows, coeff);
            return;
        }
        base_case(rank, forms, mults, vrows, coeff);
    }

    /// 1/∏ u_j^{m_j} with dependent distinct forms: repeatedly rewrite using a
    /// relation for the highest-index form dependent on the rest, chosen with
    /// the smallest support. Terminates because every child strictly drops in
    /// the graded-lex order of exponent vectors.
    void partial_fractions(std::size_t rank, const std::vector<IntVec>& universe,
                           const std::vector<int>& mults, const std::vector<IntVec>& constraints,
                           const RatMat& vrows, const Rat& coeff) {
        const std::size_t U = universe.size();
        struct Term {
            Rat c;
            std::vector<int> e;
        };
        std::vector<Term> work{{Rat(1), mults}}, done;
        while (!work.empty()) {
            Term t = std::move(work.back());
            work.pop_back();
            std::vector<std::size_t> supp;
            for (std::size_t i = 0; i < U; ++i)
                if (t.e[i] > 0) supp.push_back(i);
            std::vector<IntVec> supp_forms;
            for (std::size_t i : supp) supp_forms.push_back(universe[i]);
            if (rank_of_int_rows(supp_forms, rank) == supp.size()) {
                done.push_back(std::move(t));
                continue;
            }
            // highest-index support element dependent on the rest
            std::size_t target = 0;
            bool found = false;
            for (std::size_t k = supp.size(); k-- > 0 && !found;) {
                std::vector<IntVec> rest;
                for (std::size_t i = 0; i < supp.size(); ++i)
                    if (i != k) rest.push_back(universe[supp[i]]);
                rest.push_back(universe[supp[k]]);
                std::vector<IntVec> without(rest.begin(), rest.end() - 1);
                if (rank_of_int_rows(rest, rank) == rank_of_int_rows(without, rank)) {
                    target = k;
                    found = true;
                }
            }
            if (!found) throw BoxcalcError("partial_fractions: no dependent form found");
            auto [rel_idx, rel_coef] = smallest_relation(rank, universe, supp, target);
            // 1 = (Σ d_j u_j) / u_target termwise
            for (std::size_t r = 0; r < rel_idx.size(); ++r) {
                Term child;
                child.c = t.c * rel_coef[r];
                child.e = t.e;
                child.e[supp[target]] += 1;
                child.e[rel_idx[r]] -= 1;
                work.push_back(std::move(child));
            }
        }
        for (const Term& t : done) {
            FormMap denoms;
            for (std::size_t i = 0; i < U; ++i)
                if (t.e[i] > 0) denoms[universe[i]] = t.e[i];
            run(rank, denoms, constraints, vrows, coeff * t.c);
        }
    }

    /// Minimal-support relation u_target = Σ d_j u_j over subsets of the other
    /// support elements, smallest subset first, lexicographic tie-break.
    std::pair<std::vector<std::size_t>, RatVec> smallest_relation(
        std::size_t rank, const std::vector<IntVec>& universe,
        const std::vector<std::size_t>& supp, std::size_t target) const {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < supp.size(); ++i)
            if (i != target) others.push_back(supp[i]);
        const IntVec& u_t = universe[supp[target]];
        for (std::size_t size = 1; size <= others.size(); ++size) {
            std::vector<std::size_t> pick(size);
            auto rec = [&](auto&& self, std::size_t start, std::size_t k)
                -> std::pair<std::vector<std::size_t>, RatVec> {
                if (k == size) {
                    std::vector<IntVec> sub;
                    for (std::size_t i : pick) sub.push_back(universe[i]);
                    if (rank_of_int_rows(sub, rank) != size) return {{}, {}};
                    // solve u_t = Σ d_j u_j exactly
                    RatMat m(rank, size);
                    for (std::size_t j = 0; j < size; ++j)
                        for (std::size_t i = 0; i < rank; ++i) m(i, j) = Rat(sub[j][i]);
                    RatMat aug(rank, size + 1);
                    for (std::size_t i = 0; i < rank; ++i) {
                        for (std::size_t j = 0; j < size; ++j) aug(i, j) = m(i, j);
                        aug(i, size) = Rat(u_t[i]);
                    }
                    RrefResult rr = rref(aug);
                    bool solvable = true;
                    for (std::size_t c : rr.pivot_cols) solvable = solvable && c < size;
                    if (!solvable) return {{}, {}};
                    RatVec d(size, Rat(0));
                    for (std::size_t r2 = 0; r2 < rr.pivot_cols.size(); ++r2)
                        d[rr.pivot_cols[r2]] = rr.reduced(r2, size);
                    return {pick, d};
                }
                for (std::size_t i = start; i < others.size(); ++i) {
                    pick[k] = others[i];
                    auto res = self(self, i + 1, k + 1);
                    if (!res.first.empty()) return res;
                }
                return {{}, {}};
            };
            auto res = rec(rec, 0, 0);
            if (!res.first.empty()) return res;
        }
        throw BoxcalcError("smallest_relation: dependent form has no relation (bug)");
    }

    void inclusion_exclusion(std::size_t rank, const FormMap& denoms,
                             const std::vector<IntVec>& extra, const RatMat& vrows,
                             const Rat& coeff) {
        const std::size_t G = extra.size();
        std::vector<IntVec> denom_forms;
        for (const auto& [f, m] : denoms) denom_forms.push_back(f);
        for (std::size_t mask = 0; mask < (1u << G); ++mask) {
            if (mask == 0) {
                run(rank, denoms, denom_forms, vrows, coeff);
                continue;
            }
            std::vector<IntVec> A;
            int bits = 0;
            for (std::size_t i = 0; i < G; ++i)
                if (mask & (1u << i)) {
                    A.push_back(extra[i]);
                    ++bits;
                }
            IntMat amat(A.size(), rank);
            for (std::size_t i = 0; i < A.size(); ++i)
                for (std::size_t j = 0; j < rank; ++j) amat(i, j) = A[i][j];
            std::vector<IntVec> kernel = integer_kernel_basis(amat);
            const std::size_t sub_rank = kernel.size();
            Rat sign = bits % 2 == 0 ? Rat(1) : Rat(-1);
            // restrict denominators; a vanishing one kills the branch
            FormMap sub_denoms;
            Rat factor = 1;
            bool dead = false;
            for (const auto& [f, m] : denoms) {
                IntVec rf(sub_rank, Int(0));
                for (std::size_t i = 0; i < sub_rank; ++i)
                    for (std::size_t j = 0; j < rank; ++j) rf[i] += f[j] * kernel[i][j];
                if (is_zero_vec(rf)) {
                    dead = true;
                    break;
                }
                Int content = make_primitive(rf);
                Rat cpow = 1;
                for (int p = 0; p < m; ++p) cpow *= Rat(1, content);
                factor *= cpow;
                sub_denoms[rf] += m;
            }
            if (dead || sub_rank == 0) continue;  // empty or unsatisfiable branch
            std::vector<IntVec> sub_constraints;
            for (const auto& [f, m] : sub_denoms) sub_constraints.push_back(f);
            RatMat sub_vrows(sub_rank, ambient_dim);
            for (std::size_t i = 0; i < sub_rank; ++i)
                for (std::size_t col = 0; col < ambient_dim; ++col) {
                    Rat acc = 0;
                    for (std::size_t j = 0; j < rank; ++j)
                        acc += Rat(kernel[i][j]) * vrows(j, col);
                    sub_vrows(i, col) = acc;
                }
            run(sub_rank, sub_denoms, sub_constraints, sub_vrows, coeff * sign * factor);
        }
    }

    /// Independent forms spanning the dual of the current lattice: change
    /// summation variables to the image lattice, average over the dual-lattice
    /// cosets, and emit one product of periodic Bernoulli factors per coset.
    void base_case(std::size_t rank, const std::vector<IntVec>& forms,
                   const std::vector<int>& mults, const RatMat& vrows, const Rat& coeff) {
        if (forms.size() != rank)
            throw BoxcalcError("w_series base case: forms do not span (bug)");
        if (rank == 0) {
            out.terms.push_back({coeff, {}});
            return;
        }
        IntMat U(rank, rank);
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t i = 0; i < rank; ++i) U(j, i) = forms[j][i];
        IntMat Ut = U.transposed();
        RatMat Ut_inv = rat_inverse(to_rat_mat(Ut));  // = U^{-T}
        RatMat wmat = Ut_inv * vrows;                 // row j = covector of w_j(v)

        SnfDecomposition snf = smith_normal_form(Ut);
        IntMat p_inv = unimodular_inverse(snf.left);
        Int f_index = 1;
        for (const Int& d : snf.diag) f_index *= d;
        if (f_index < 0) f_index = -f_index;
        if (f_index == 0) throw BoxcalcError("w_series base case: singular form matrix (bug)");

        std::vector<Int> counter(rank, 0);
        for (;;) {
            IntVec x(rank, Int(0));
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = 0; j < rank; ++j) x[i] += p_inv(i, j) * counter[j];
            RatVec beta(rank, Rat(0));
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = 0; j < rank; ++j) beta[i] += Ut_inv(i, j) * Rat(x[j]);

            BernoulliTerm term;
            term.coeff = coeff / Rat(f_index);
            bool dead = false;
            for (std::size_t j = 0; j < rank && !dead; ++j) {
                RatVec ell(ambient_dim);
                bool ell_zero = true;
                for (std::size_t c = 0; c < ambient_dim; ++c) {
                    ell[c] = wmat(j, c);
                    ell_zero = ell_zero && ell[c] == 0;
                }
                const int m = mults[j];
                Rat fact = 1;
                for (int i = 2; i <= m; ++i) fact *= i;
                if (ell_zero) {
                    Rat arg = rat_frac(beta[j]);
                    if (arg != 0) {
                        term.coeff *= -bernoulli_poly(m).eval(arg) / fact;
                    } else if (m == 1) {
                        dead = true;  // symmetric value of Σ 1/(2iπ n) is 0
                    } else {
                        term.coeff *= -bernoulli_number(m) / fact;
                    }
                } else {
                    term.coeff *= -Rat(1) / fact;
                    term.factors.push_back({m, ell, rat_frac(beta[j])});
                }
            }
            if (!dead && term.coeff != 0) out.terms.push_back(std::move(term));

            std::size_t j = 0;
            while (j < rank && ++counter[j] == snf.diag[j]) counter[j++] = 0;
            if (j == rank) break;
        }
    }
};

}  // namespace

BernoulliExpr w_series(const Configuration& c) {
    WSeriesBuilder builder;
    builder.ambient_dim = c.n;
    builder.out.dim = c.n;

    WSeriesBuilder::FormMap denoms;
    Rat coeff = 1;
    for (const IntVec& a : c.X) {
        IntVec f = a;
        Int content = make_primitive(f);
        coeff *= Rat(1, content);
        denoms[f] += 1;
    }
    std::vector<IntVec> constraints;
    for (const auto& [f, m] : denoms) constraints.push_back(f);
    RatMat vrows = RatMat::identity(c.n);
    builder.run(c.n, denoms, constraints, vrows, coeff);
    canonicalize(builder.out);
    return builder.out;
}

BernoulliExpr w_quotient(const ArrangementIndex& arr, const AdmissibleSubspace& s) {
    bool known = false;
    for (const AdmissibleSubspace& t : arr.subspaces()) known = known || t.span_key == s.span_key;
    if (!known) throw NonAdmissibleSubspace("w_quotient: subspace is not admissible");
    const std::size_t n = arr.dim();
    if (s.dim == n) {
        BernoulliExpr one;
        one.dim = n;
        one.terms.push_back({Rat(1), {}});
        return one;
    }
    Configuration proj(n - s.dim, s.projected_list);
    BernoulliExpr q = w_series(proj);
    BernoulliExpr out;
    out.dim = n;
    for (const BernoulliTerm& t : q.terms) {
        BernoulliTerm pulled;
        pulled.coeff = t.coeff;
        for (const BernoulliFactor& f : t.factors) {
            RatVec ell(n, Rat(0));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n - s.dim; ++i)
                    ell[j] += f.form[i] * Rat(s.quotient.projection(i, j));
            pulled.factors.push_back({f.order, std::move(ell), f.shift});
        }
        out.terms.push_back(std::move(pulled));
    }
    canonicalize(out);
    return out;
}

Rat w_eval(const BernoulliExpr& e, const RatVec& v) {
    if (v.size() != e.dim) throw DimensionMismatch("w_eval: dimension mismatch");
    Rat sum = 0;
    for (const BernoulliTerm& t : e.terms) {
        Rat prod = t.coeff;
        for (const BernoulliFactor& f : t.factors) {
            Rat arg = dot(f.form, v) + f.shift;
            if (is_integer(arg))
                throw FormHitsInteger("w_eval: a Bernoulli factor argument is integral");
            prod *= bernoulli_poly(f.order).eval(rat_frac(arg));
        }
        sum += prod;
    }
    return sum;
}

std::string BernoulliExpr::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        s += rat_to_string(terms[i].coeff);
        for (const BernoulliFactor& f : terms[i].factors)
            s += " * B" + std::to_string(f.order) + "(" + form_to_string(f.form, f.shift) + ")";
    }
    return s;
}

Cyclo TwistedBernoulli1D::eval(const Rat& t) const {
    if (is_integer(t))
        throw FormHitsInteger("twisted Bernoulli evaluated at an integer");
    Int ell = rat_floor(t);
    Int p = num(twist) * ell;  // e^{2iπ z}^ell = zeta_m^(p_z * ell)
    Cyclo pre = Cyclo::zeta_pow(ctx, p);
    return pre * piece.eval(t - Rat(ell)) * scale;
}

TwistedBernoulli1D w_twisted_1d(int k, const Rat& z, const std::vector<Int>& c_list) {
    if (k < 1) throw BoxcalcError("w_twisted_1d: order must be >= 1");
    if (is_integer(z)) throw IntegerTwist("w_twisted_1d: twist must be non-integral");
    if ((int)c_list.size() != k)
        throw DimensionMismatch("w_twisted_1d: list length must equal the order");
    TwistedBernoulli1D w;
    w.order = k;
    w.twist = rat_frac(z);
    w.scale = 1;
    for (const Int& c : c_list) {
        if (c == 0) throw BoxcalcError("w_twisted_1d: zero vector in the list");
        w.scale /= Rat(c);
    }
    long m = den(w.twist).convert_to<long>();
    w.ctx = cyclo_context(m);
    Cyclo ez = Cyclo::zeta_pow(w.ctx, num(w.twist));
    Cyclo ez_inv = Cyclo::zeta_pow(w.ctx, -num(w.twist));
    Cyclo one(Rat(1));
    // P_1 = 1/(1 - e^{-2iπz}); P_j = ∫P_{j-1} + C with P_j(1) = e^{2iπz} P_j(0)
    Poly1T<Cyclo> piece = Poly1T<Cyclo>::constant((one - ez_inv).inverse());
    for (int j = 2; j <= k; ++j) {
        Poly1T<Cyclo> q = piece.antiderivative();
        Cyclo c = (ez * q.eval(0) - q.eval(1)) * (one - ez).inverse();
        piece = q + Poly1T<Cyclo>::constant(c);
    }
    w.piece = piece;
    return w;
}

}  // namespace boxcalc
