#pragma once

#include "boxcalc/bernoulli.hpp"
#include "boxcalc/boxspline.hpp"
#include "boxcalc/cyclotomic.hpp"
#include "boxcalc/dm_space.hpp"
#include "boxcalc/poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace boxcalc {

/// A character g of the lattice, represented by G with coordinates in [0,1).
/// g^λ = ζ_m^(m·⟨G,λ⟩) with m the least common denominator.
struct CharacterG {
    RatVec rep;
    long order = 1;

    static CharacterG from(const RatVec& G);
    bool is_zero() const;
    /// g^λ as an exact cyclotomic value.
    Cyclo pow(const IntVec& lambda) const;
    std::string to_string() const;
};

/// Toric vertices of the arrangement: characters with X(g) spanning. One
/// candidate set per basis σ ⊆ X (solutions of g^a = 1 for a ∈ σ), deduped
/// and sorted; always contains g = 0.
std::vector<CharacterG> toric_vertices(const ArrangementIndex& arr);

/// X(g) = { a ∈ X : g^a = 1 }, as indices.
std::vector<std::size_t> x_of_g(const Configuration& c, const CharacterG& g);

/// Seeded regular rational points: coordinates k/1009 with k drawn from
/// mt19937_64, non-regular draws rejected. Deterministic across platforms.
std::vector<RatVec> sample_regular_points(const ArrangementIndex& arr, std::size_t count,
                                          std::uint64_t seed);

struct TermRecord {
    std::vector<std::size_t> s_basis;  // X indices spanning s
    std::size_t s_dim = 0;
    std::vector<std::size_t> I, J;     // positions within X ∖ s (global X indices)
    int sign = 1;
    std::string value;
};

struct PointResult {
    RatVec point;
    std::string lhs_discrete;
    std::string lhs_continuous;
    std::string difference;
    std::string rhs_total;
    std::vector<TermRecord> terms;
    bool pass = false;
    std::string f;  // the polynomial checked at this point, when it varies
};

struct VerificationReport {
    std::string kind;
    std::size_t dim = 0;
    std::vector<IntVec> X;
    std::uint64_t seed = 0;
    std::string f;
    std::string g;
    std::vector<PointResult> points;
    bool all_pass = true;
};

struct TheoremTerm {
    const AdmissibleSubspace* s = nullptr;
    std::vector<std::size_t> I, J;
    int sign = 1;
    Rat value;
};

/// Verification session over one configuration: owns the arrangement index,
/// the box-spline cache, and per-subspace Bernoulli expressions, so repeated
/// checks at shared points reuse each other's work.
class IdentityVerifier {
  public:
    explicit IdentityVerifier(Configuration c);

    const ArrangementIndex& arrangement() const { return *arr_; }
    BoxEvaluator& box() { return box_; }

    /// (B(X) *_d f)(v) = Σ_λ f(λ) B(X)(v−λ); the sum is finite.
    Rat semidiscrete_eval(const Poly& f, const RatVec& v);

    /// Σ_λ g^λ p(λ) B(X)(v−λ) over Q(ζ_m).
    Cyclo semidiscrete_twisted(const CharacterG& g, const Poly& p, const RatVec& v);

    /// B(X) *_c f as a polynomial (the Todd product applied to f).
    Poly continuous_conv_poly(const Poly& f) const;

    /// W(X/s) for an admissible subspace, cached.
    const BernoulliExpr& w_for(const AdmissibleSubspace& s);

    /// Right side of the main identity at v: over proper admissible s and
    /// splittings X∖s = I ⊔ J, signed values of B((X∩s)⊔I)*_c(W(X/s)·∂_I∇_J f).
    std::pair<Rat, std::vector<TheoremTerm>> theorem1_rhs(const Poly& f, const RatVec& v);

    VerificationReport theorem1_check(const Poly& f, const std::vector<RatVec>& points);

    /// B(X)*_d p = B(X)*_c p for every p in the Dahmen–Micchelli basis.
    VerificationReport dm_corollary_check(const std::vector<RatVec>& points);

    /// Σ_λ g^λ p(λ) B(X)(v−λ) = 0 for a nonzero toric vertex g and
    /// p ∈ D(X(g)).
    VerificationReport twisted_corollary_check(const CharacterG& g, const Poly& p,
                                               const std::vector<RatVec>& points);

    /// Dimension-1 twisted identity: B(X)*_d (g^λ h) against the W(X,g)
    /// expansion over R(g) = {{0}}.
    VerificationReport theorem2_check_1d(const CharacterG& g, const Poly& h,
                                         const std::vector<RatVec>& points);

  private:
    Rat conv_w_cached(std::size_t s_index, std::vector<std::size_t> Y, const RatVec& v);

    std::shared_ptr<const ArrangementIndex> arr_;
    BoxEvaluator box_;
    std::map<std::size_t, BernoulliExpr> w_cache_;              // subspace index -> W(X/s)
    std::map<std::tuple<std::size_t, std::vector<std::size_t>, RatVec>, Rat> conv_cache_;
};

}  // namespace boxcalc
