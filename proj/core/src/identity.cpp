#include "boxcalc/identity.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace boxcalc {

CharacterG CharacterG::from(const RatVec& G) {
    CharacterG g;
    g.rep.reserve(G.size());
    Int m = 1;
    for (const Rat& x : G) {
        Rat f = rat_frac(x);
        m = m / int_gcd(m, den(f)) * den(f);
        g.rep.push_back(f);
    }
    g.order = m.convert_to<long>();
    return g;
}

bool CharacterG::is_zero() const {
    for (const Rat& x : rep)
        if (x != 0) return false;
    return true;
}

Cyclo CharacterG::pow(const IntVec& lambda) const {
    Rat pairing = dot(lambda, rep);
    Rat e = pairing * Rat(order);
    // m * <G,λ> is integral by construction
    return Cyclo::zeta_pow(cyclo_context(order), num(e));
}

std::string CharacterG::to_string() const { return vec_to_string(rep); }

std::vector<CharacterG> toric_vertices(const ArrangementIndex& arr) {
    const Configuration& c = arr.config();
    const std::size_t n = c.n;
    std::set<RatVec> reps;
    for (const auto& sigma : arr.bases()) {
        IntMat M(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < n; ++j) M(r, j) = c.X[sigma[r]][j];
        RatMat M_inv = rat_inverse(to_rat_mat(M));
        SnfDecomposition snf = smith_normal_form(M);
        IntMat p_inv = unimodular_inverse(snf.left);
        std::vector<Int> counter(n, 0);
        for (;;) {
            IntVec x(n, Int(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) x[i] += p_inv(i, j) * counter[j];
            RatVec G(n, Rat(0));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) G[i] += M_inv(i, j) * Rat(x[j]);
                G[i] = rat_frac(G[i]);
            }
            reps.insert(G);
            std::size_t j = 0;
            while (j < n && ++counter[j] == snf.diag[j]) counter[j++] = 0;
            if (j == n) break;
        }
    }
    std::vector<CharacterG> out;
    for (const RatVec& G : reps) out.push_back(CharacterG::from(G));
    return out;
}

std::vector<std::size_t> x_of_g(const Configuration& c, const CharacterG& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (is_integer(dot(c.X[i], g.rep))) out.push_back(i);
    return out;
}

std::vector<RatVec> sample_regular_points(const ArrangementIndex& arr, std::size_t count,
                                          std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const Int denom = 1009;
    std::vector<RatVec> out;
    std::size_t guard = 0;
    while (out.size() < count) {
        if (++guard > 1000 * (count + 1))
            throw BoxcalcError("sample_regular_points: rejection loop stuck");
        RatVec v(arr.dim());
        for (std::size_t i = 0; i < arr.dim(); ++i)
            v[i] = Rat(Int(gen() % 1009), denom);
        if (arr.is_regular(v)) out.push_back(std::move(v));
    }
    return out;
}

IdentityVerifier::IdentityVerifier(Configuration c)
    : arr_(std::make_shared<ArrangementIndex>(std::move(c))), box_(arr_) {}

namespace {

std::vector<std::size_t> all_indices(const Configuration& c) {
    std::vector<std::size_t> idx(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) idx[i] = i;
    return idx;
}

/// Integer lattice points λ with v - λ possibly in Z(X): the coordinate box
/// from the support-function extents of the zonotope.
std::vector<IntVec> lattice_box(const Configuration& c, const RatVec& v) {
    const std::size_t n = c.n;
    std::vector<Int> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int mx = 0, mn = 0;
        for (const IntVec& a : c.X) {
            if (a[i] > 0) mx += a[i];
            if (a[i] < 0) mn += a[i];
        }
        // λ_i ∈ [v_i - mx, v_i - mn]
        lo[i] = rat_floor(v[i] - Rat(mx)) ;
        hi[i] = rat_floor(v[i] - Rat(mn)) + 1;
    }
    std::vector<IntVec> out;
    IntVec cur = lo;
    for (;;) {
        out.push_back(cur);
        std::size_t j = 0;
        while (j < n && ++cur[j] > hi[j]) cur[j++] = lo[j];
        if (j == n) break;
    }
    return out;
}

}  // namespace

Rat IdentityVerifier::semidiscrete_eval(const Poly& f, const RatVec& v) {
    if (!arr_->is_regular(v)) throw NonRegularPoint("semidiscrete_eval at a non-regular point");
    const Configuration& c = arr_->config();
    Rat sum = 0;
    auto idx = all_indices(c);
    for (const IntVec& lambda : lattice_box(c, v)) {
        RatVec u(c.n);
        for (std::size_t i = 0; i < c.n; ++i) u[i] = v[i] - Rat(lambda[i]);
        if (!arr_->zonotope_contains(u)) continue;
        Rat b = box_.box_eval(idx, u);
        if (b == 0) continue;
        sum += f.eval(to_rat_vec(lambda)) * b;
    }
    return sum;
}

Cyclo IdentityVerifier::semidiscrete_twisted(const CharacterG& g, const Poly& p, const RatVec& v) {
    if (!arr_->is_regular(v)) throw NonRegularPoint("semidiscrete_twisted at a non-regular point");
    const Configuration& c = arr_->config();
    Cyclo sum(Rat(0));
    auto idx = all_indices(c);
    for (const IntVec& lambda : lattice_box(c, v)) {
        RatVec u(c.n);
        for (std::size_t i = 0; i < c.n; ++i) u[i] = v[i] - Rat(lambda[i]);
        if (!arr_->zonotope_contains(u)) continue;
        Rat b = box_.box_eval(idx, u);
        if (b == 0) continue;
        sum = sum + g.pow(lambda) * (p.eval(to_rat_vec(lambda)) * b);
    }
    return sum;
}

Poly IdentityVerifier::continuous_conv_poly(const Poly& f) const {
    return todd_apply(arr_->config().X, f);
}

const BernoulliExpr& IdentityVerifier::w_for(const AdmissibleSubspace& s) {
    std::size_t index = 0;
    const auto& subs = arr_->subspaces();
    while (index < subs.size() && !(subs[index].span_key == s.span_key)) ++index;
    if (index == subs.size()) throw NonAdmissibleSubspace("w_for: unknown subspace");
    auto it = w_cache_.find(index);
    if (it == w_cache_.end()) it = w_cache_.emplace(index, w_quotient(*arr_, subs[index])).first;
    return it->second;
}

Rat IdentityVerifier::conv_w_cached(std::size_t s_index, std::vector<std::size_t> Y,
                                    const RatVec& v) {
    std::sort(Y.begin(), Y.end());
    auto key = std::make_tuple(s_index, Y, v);
    if (auto it = conv_cache_.find(key); it != conv_cache_.end()) return it->second;
    const BernoulliExpr& w = w_cache_.at(s_index);
    EvaluableFn<Rat> F{[&w](const RatVec& u) { return w_eval(w, u); }, w.degree_bound()};
    Rat value = box_convolve_eval(*arr_, Y, F, v);
    conv_cache_.emplace(std::move(key), value);
    return value;
}

std::pair<Rat, std::vector<TheoremTerm>> IdentityVerifier::theorem1_rhs(const Poly& f,
                                                                        const RatVec& v) {
    if (!arr_->is_regular(v)) throw NonRegularPoint("theorem1_rhs at a non-regular point");
    const Configuration& c = arr_->config();
    Rat total = 0;
    std::vector<TheoremTerm> terms;
    for (const AdmissibleSubspace* s : arr_->proper_subspaces()) {
        const BernoulliExpr& w = w_for(*s);
        std::size_t s_index = 0;
        const auto& subs = arr_->subspaces();
        while (!(subs[s_index].span_key == s->span_key)) ++s_index;
        std::vector<IntVec> in_s_vectors;
        for (std::size_t i : s->x_in_s) in_s_vectors.push_back(c.X[i]);
        const auto& rest = s->x_minus_s;
        for (std::size_t mask = 0; mask < (1u << rest.size()); ++mask) {
            TheoremTerm term;
            term.s = s;
            int bits = 0;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (mask & (1u << i)) {
                    term.I.push_back(rest[i]);
                    ++bits;
                } else {
                    term.J.push_back(rest[i]);
                }
            }
            term.sign = bits % 2 == 0 ? 1 : -1;
            Poly q = f;
            for (std::size_t i : term.I) q = q.dir_derivative(c.X[i]);
            for (std::size_t j : term.J) q = q.nabla(c.X[j]);
            if (q.is_zero()) {
                term.value = 0;
                terms.push_back(std::move(term));
                continue;
            }
            // convolution along X∩s acts on the polynomial factor only,
            // because W(X/s) is constant along s
            Poly qt = todd_apply(in_s_vectors, q);
            if (qt.total_degree() <= 0) {
                Rat c0 = qt.eval(RatVec(c.n, Rat(0)));
                term.value = Rat(term.sign) * c0 * conv_w_cached(s_index, term.I, v);
            } else {
                EvaluableFn<Rat> F{
                    [&w, &qt](const RatVec& u) { return w_eval(w, u) * qt.eval(u); },
                    w.degree_bound() + qt.total_degree()};
                term.value = Rat(term.sign) * box_convolve_eval(*arr_, term.I, F, v);
            }
            total += term.value;
            terms.push_back(std::move(term));
        }
    }
    return {total, terms};
}

namespace {

PointResult make_point_result(const RatVec& v, const Rat& lhs_d, const Rat& lhs_c, const Rat& rhs,
                              std::vector<TheoremTerm> terms) {
    PointResult pr;
    pr.point = v;
    pr.lhs_discrete = rat_to_string(lhs_d);
    pr.lhs_continuous = rat_to_string(lhs_c);
    Rat diff = lhs_d - lhs_c;
    pr.difference = rat_to_string(diff);
    pr.rhs_total = rat_to_string(rhs);
    pr.pass = diff == rhs;
    for (const TheoremTerm& t : terms) {
        TermRecord r;
        r.s_basis = t.s ? t.s->basis : std::vector<std::size_t>{};
        r.s_dim = t.s ? t.s->dim : 0;
        r.I = t.I;
        r.J = t.J;
        r.sign = t.sign;
        r.value = rat_to_string(t.value);
        pr.terms.push_back(std::move(r));
    }
    return pr;
}

}  // namespace

VerificationReport IdentityVerifier::theorem1_check(const Poly& f,
                                                    const std::vector<RatVec>& points) {
    VerificationReport rep;
    rep.kind = "theorem1";
    rep.dim = arr_->dim();
    rep.X = arr_->config().X;
    rep.f = f.to_string();
    Poly cont = continuous_conv_poly(f);
    for (const RatVec& v : points) {
        Rat lhs_d = semidiscrete_eval(f, v);
        Rat lhs_c = cont.eval(v);
        auto [rhs, terms] = theorem1_rhs(f, v);
        PointResult pr = make_point_result(v, lhs_d, lhs_c, rhs, std::move(terms));
        rep.all_pass = rep.all_pass && pr.pass;
        rep.points.push_back(std::move(pr));
    }
    return rep;
}

VerificationReport IdentityVerifier::dm_corollary_check(const std::vector<RatVec>& points) {
    VerificationReport rep;
    rep.kind = "dm-corollary";
    rep.dim = arr_->dim();
    rep.X = arr_->config().X;
    DMBasis dmb = dm_basis(*arr_);
    for (const Poly& p : dmb.basis) {
        Poly cont = continuous_conv_poly(p);
        for (const RatVec& v : points) {
            Rat lhs_d = semidiscrete_eval(p, v);
            Rat lhs_c = cont.eval(v);
            PointResult pr = make_point_result(v, lhs_d, lhs_c, Rat(0), {});
            pr.f = p.to_string();
            rep.all_pass = rep.all_pass && pr.pass;
            rep.points.push_back(std::move(pr));
        }
    }
    return rep;
}

VerificationReport IdentityVerifier::twisted_corollary_check(const CharacterG& g, const Poly& p,
                                                             const std::vector<RatVec>& points) {
    if (g.is_zero())
        throw NotAToricVertex("g = 0 requires the untwisted identity path");
    bool vertex = false;
    for (const CharacterG& h : toric_vertices(*arr_)) vertex = vertex || h.rep == g.rep;
    if (!vertex) throw NotAToricVertex("g is not a toric vertex of the arrangement");
    std::vector<std::size_t> xg = x_of_g(arr_->config(), g);
    std::vector<IntVec> xg_vectors;
    for (std::size_t i : xg) xg_vectors.push_back(arr_->config().X[i]);
    ArrangementIndex sub(Configuration(arr_->dim(), xg_vectors));
    if (!is_in_dm(sub, p)) throw NotInDMSpace("p is not in D(X(g))");

    VerificationReport rep;
    rep.kind = "twisted-corollary";
    rep.dim = arr_->dim();
    rep.X = arr_->config().X;
    rep.f = p.to_string();
    rep.g = g.to_string();
    for (const RatVec& v : points) {
        Cyclo s = semidiscrete_twisted(g, p, v);
        PointResult pr;
        pr.point = v;
        pr.lhs_discrete = s.to_string();
        pr.lhs_continuous = "0";
        pr.difference = s.to_string();
        pr.rhs_total = "0";
        pr.pass = s.is_zero();
        rep.all_pass = rep.all_pass && pr.pass;
        rep.points.push_back(std::move(pr));
    }
    return rep;
}

VerificationReport IdentityVerifier::theorem2_check_1d(const CharacterG& g, const Poly& h,
                                                       const std::vector<RatVec>& points) {
    const Configuration& c = arr_->config();
    if (c.n != 1)
        throw UnsupportedDimension("theorem2 check is implemented for dimension 1 only");
    if (g.is_zero()) throw IntegerTwist("theorem2_check_1d: g must be nonzero");
    const Rat z = g.rep[0];
    const Int zp = num(z);
    auto ctx = cyclo_context(g.order);

    std::vector<Int> contents;
    for (const IntVec& a : c.X) contents.push_back(a[0]);
    TwistedBernoulli1D w = w_twisted_1d((int)c.size(), z, contents);

    // h as a univariate polynomial with cyclotomic coefficients
    Poly1T<Cyclo> h1;
    {
        std::vector<Cyclo> coeffs;
        for (const auto& [e, ce] : h.terms()) {
            if ((std::size_t)e[0] >= coeffs.size()) coeffs.resize(e[0] + 1, Cyclo(Rat(0)));
            coeffs[e[0]] = Cyclo(ce);
        }
        h1 = Poly1T<Cyclo>(std::move(coeffs));
    }

    VerificationReport rep;
    rep.kind = "theorem2-1d";
    rep.dim = 1;
    rep.X = c.X;
    rep.f = h.to_string();
    rep.g = g.to_string();

    for (const RatVec& v : points) {
        Cyclo lhs = semidiscrete_twisted(g, h, v);
        Cyclo rhs(Rat(0));
        std::vector<TermRecord> records;
        for (std::size_t mask = 0; mask < (1u << c.size()); ++mask) {
            std::vector<std::size_t> I, J;
            for (std::size_t i = 0; i < c.size(); ++i)
                (mask & (1u << i) ? I : J).push_back(i);
            int sign = I.size() % 2 == 0 ? 1 : -1;
            Poly1T<Cyclo> q = h1;
            for (std::size_t i : I) q = q.derivative() * Cyclo(Rat(contents[i]));
            for (std::size_t j : J) {
                // ∇(a,g) q = q(t) - g^{-a} q(t - c_j)
                Cyclo g_inv_a = Cyclo::zeta_pow(ctx, -zp * contents[j]);
                q = q - q.shifted_arg(-Rat(contents[j])) * g_inv_a;
            }
            Cyclo value(Rat(0));
            if (!q.is_zero()) {
                EvaluableFn<Cyclo> F{[&w, &q](const RatVec& u) { return w.eval(u[0]) * q.eval(u[0]); },
                                     (w.order - 1) + std::max(0, q.degree())};
                value = box_convolve_eval(*arr_, I, F, v) * Rat(sign);
            }
            rhs = rhs + value;
            TermRecord r;
            r.s_dim = 0;
            r.I = I;
            r.J = J;
            r.sign = sign;
            r.value = value.to_string();
            records.push_back(std::move(r));
        }
        PointResult pr;
        pr.point = v;
        pr.lhs_discrete = lhs.to_string();
        pr.lhs_continuous = "0";
        pr.difference = lhs.to_string();
        pr.rhs_total = rhs.to_string();
        pr.terms = std::move(records);
        pr.pass = (lhs == rhs);
        rep.all_pass = rep.all_pass && pr.pass;
        rep.points.push_back(std::move(pr));
    }
    return rep;
}

}  // namespace boxcalc
