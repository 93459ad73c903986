#include "boxcalc/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace boxcalc {

namespace {

constexpr std::size_t kMaxDim = 3;
constexpr std::size_t kMaxVectors = 8;

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Configuration::Configuration(std::size_t dim, std::vector<IntVec> vectors)
    : n(dim), X(std::move(vectors)) {
    if (n < 1 || n > kMaxDim || X.size() > kMaxVectors)
        throw UnsupportedSize("configuration outside the supported envelope (n <= 3, N <= 8)");
    for (const IntVec& a : X) {
        if (a.size() != n) throw DimensionMismatch("configuration vector of wrong length");
        bool zero = true;
        for (const Int& x : a) zero = zero && x == 0;
        if (zero) throw BoxcalcError("configuration contains a zero vector");
    }
    if (rank_of_int_rows(X, n) != n)
        throw NonSpanningList("X does not span the ambient space");
}

std::vector<std::size_t> greedy_basis(const Configuration& c, const std::vector<std::size_t>& Y) {
    std::vector<std::size_t> picked;
    std::vector<IntVec> rows;
    for (std::size_t idx : Y) {
        rows.push_back(c.X[idx]);
        if (rank_of_int_rows(rows, c.n) == picked.size() + 1) {
            picked.push_back(idx);
            if (picked.size() == c.n) return picked;
        } else {
            rows.pop_back();
        }
    }
    throw NonSpanningList("index list does not span the ambient space");
}

ArrangementIndex::ArrangementIndex(Configuration config) : config_(std::move(config)) {
    const std::size_t n = config_.n, N = config_.size();

    // admissible hyperplanes: spans of subsequences of rank n-1 (the empty
    // subsequence spans {0}, the hyperplane of a 1-D space)
    std::map<IntVec, std::vector<std::size_t>, decltype(&lex_less)> by_normal(&lex_less);
    for (std::size_t mask = 0; mask < (1u << N); ++mask) {
        std::vector<IntVec> sub;
        for (std::size_t i = 0; i < N; ++i)
            if (mask & (1u << i)) sub.push_back(config_.X[i]);
        if (rank_of_int_rows(sub, n) != n - 1) continue;
        IntVec eta = primitive_normal(sub, n);
        if (!by_normal.count(eta)) by_normal[eta] = {};
    }
    for (auto& [eta, gens] : by_normal) {
        Hyperplane h;
        h.normal = eta;
        for (std::size_t i = 0; i < N; ++i)
            if (dot(eta, config_.X[i]) == 0) h.on_hyperplane.push_back(i);
        hyperplanes_.push_back(std::move(h));
    }

    // cocircuits: complement of each hyperplane's elements
    for (const Hyperplane& h : hyperplanes_) {
        std::vector<std::size_t> co;
        std::set<std::size_t> on(h.on_hyperplane.begin(), h.on_hyperplane.end());
        for (std::size_t i = 0; i < N; ++i)
            if (!on.count(i)) co.push_back(i);
        cocircuits_.push_back(std::move(co));
    }

    // admissible subspaces, deduplicated by the RREF of their span
    std::map<std::vector<Rat>, std::size_t> seen;
    for (std::size_t mask = 0; mask < (1u << N); ++mask) {
        std::vector<IntVec> sub;
        for (std::size_t i = 0; i < N; ++i)
            if (mask & (1u << i)) sub.push_back(config_.X[i]);
        RatMat m(sub.size(), n);
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(sub[i][j]);
        RrefResult rr = rref(m);
        std::vector<Rat> key;
        key.push_back(Rat(Int(rr.rank)));
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < n; ++j) key.push_back(rr.reduced(i, j));
        if (seen.count(key)) continue;
        seen.emplace(key, 0);

        AdmissibleSubspace s;
        s.dim = rr.rank;
        s.span_key = key;
        // greedy basis of the span from X, and the X ∩ s / X ∖ s split
        std::vector<IntVec> rows;
        for (std::size_t i = 0; i < N; ++i) {
            std::vector<IntVec> probe = rows;
            probe.push_back(config_.X[i]);
            bool in_span = [&] {
                RatMat t(rr.rank + 1, n);
                for (std::size_t r2 = 0; r2 < rr.rank; ++r2)
                    for (std::size_t j = 0; j < n; ++j) t(r2, j) = rr.reduced(r2, j);
                for (std::size_t j = 0; j < n; ++j) t(rr.rank, j) = Rat(config_.X[i][j]);
                return rank(t) == rr.rank;
            }();
            if (in_span) {
                s.x_in_s.push_back(i);
                if (rank_of_int_rows(probe, n) == rows.size() + 1 && rows.size() < s.dim) {
                    rows = probe;
                    s.basis.push_back(i);
                }
            } else {
                s.x_minus_s.push_back(i);
            }
        }
        std::vector<IntVec> basis_vecs;
        for (std::size_t idx : s.basis) basis_vecs.push_back(config_.X[idx]);
        s.quotient = lattice_quotient(basis_vecs, n);
        for (std::size_t idx : s.x_minus_s) {
            IntVec img = s.quotient.projection.apply(config_.X[idx]);
            s.projected_list.push_back(std::move(img));
        }
        subspaces_.push_back(std::move(s));
    }
    std::sort(subspaces_.begin(), subspaces_.end(),
              [](const AdmissibleSubspace& a, const AdmissibleSubspace& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.span_key < b.span_key;
              });

    // bases: n-subsets with nonzero determinant
    std::vector<std::size_t> idx(n);
    auto rec = [&](auto&& self, std::size_t start, std::size_t k) -> void {
        if (k == n) {
            IntMat m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t j = 0; j < n; ++j) m(r, j) = config_.X[idx[r]][j];
            if (det(m) != 0) bases_.push_back(idx);
            return;
        }
        for (std::size_t i = start; i < N; ++i) {
            idx[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    rec(rec, 0, 0);
}

std::vector<const AdmissibleSubspace*> ArrangementIndex::proper_subspaces() const {
    std::vector<const AdmissibleSubspace*> out;
    for (const AdmissibleSubspace& s : subspaces_)
        if (s.dim < config_.n) out.push_back(&s);
    return out;
}

bool ArrangementIndex::is_long(const std::vector<std::size_t>& Y) const {
    std::set<std::size_t> y(Y.begin(), Y.end());
    std::vector<IntVec> rest;
    for (std::size_t i = 0; i < config_.size(); ++i)
        if (!y.count(i)) rest.push_back(config_.X[i]);
    return rank_of_int_rows(rest, config_.n) < config_.n;
}

bool ArrangementIndex::is_regular(const RatVec& v) const {
    if (v.size() != config_.n) throw DimensionMismatch("is_regular: dimension mismatch");
    for (const Hyperplane& h : hyperplanes_)
        if (is_integer(dot(h.normal, v))) return false;
    return true;
}

std::vector<Int> ArrangementIndex::tope_key(const RatVec& v) const {
    std::vector<Int> key;
    for (const Hyperplane& h : hyperplanes_) {
        Rat p = dot(h.normal, v);
        if (is_integer(p)) throw NonRegularPoint("tope_key at a non-regular point");
        key.push_back(rat_floor(p));
    }
    return key;
}

bool ArrangementIndex::zonotope_contains(const RatVec& v) const {
    if (v.size() != config_.n) throw DimensionMismatch("zonotope_contains: dimension mismatch");
    for (const Hyperplane& h : hyperplanes_) {
        for (int sign : {1, -1}) {
            Rat support = 0;
            Rat pairing = dot(h.normal, v) * sign;
            for (const IntVec& a : config_.X) {
                Int pa = dot(h.normal, a) * sign;
                if (pa > 0) support += Rat(pa);
            }
            if (pairing > support) return false;
        }
    }
    return true;
}

Rat ArrangementIndex::zonotope_volume() const {
    Rat vol = 0;
    for (const auto& b : bases_) {
        IntMat m(config_.n, config_.n);
        for (std::size_t r = 0; r < config_.n; ++r)
            for (std::size_t j = 0; j < config_.n; ++j) m(r, j) = config_.X[b[r]][j];
        Int d = det(m);
        vol += Rat(d < 0 ? -d : d);
    }
    return vol;
}

std::vector<Rat> ArrangementIndex::segment_breakpoints(const RatVec& v, const IntVec& a,
                                                       const Rat& lo, const Rat& hi) const {
    if (v.size() != config_.n || a.size() != config_.n)
        throw DimensionMismatch("segment_breakpoints: dimension mismatch");
    if (!(lo < hi)) throw BoxcalcError("segment_breakpoints: empty interval");
    std::set<Rat> points;
    for (const Hyperplane& h : hyperplanes_) {
        Rat c0 = dot(h.normal, v);
        Int c1 = dot(h.normal, a);
        if (c1 == 0) {
            if (is_integer(c0))
                throw SegmentInsideArrangement("segment lies inside a translated hyperplane");
            continue;
        }
        // c0 - t*c1 integral  <=>  t = (c0 - m)/c1 for integral m
        Rat t_lo = c0 - hi * Rat(c1), t_hi = c0 - lo * Rat(c1);
        if (t_lo > t_hi) std::swap(t_lo, t_hi);
        for (Int m = rat_floor(t_lo); m <= rat_floor(t_hi) + 1; ++m) {
            Rat t = (c0 - Rat(m)) / Rat(c1);
            if (t > lo && t < hi) points.insert(t);
        }
    }
    return std::vector<Rat>(points.begin(), points.end());
}

}  // namespace boxcalc
