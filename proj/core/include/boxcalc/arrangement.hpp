#pragma once

#include "boxcalc/errors.hpp"
#include "boxcalc/linalg.hpp"
#include "boxcalc/rational.hpp"

#include <vector>

namespace boxcalc {

/// A configuration: the lattice rank n and an ordered multiset X of nonzero
/// integer vectors spanning the ambient space. Supported envelope: n <= 3,
/// |X| <= 8 (subset enumeration is 2^N).
struct Configuration {
    std::size_t n = 0;
    std::vector<IntVec> X;

    Configuration(std::size_t dim, std::vector<IntVec> vectors);

    std::size_t size() const { return X.size(); }
};

struct Hyperplane {
    IntVec normal;  // primitive, sign-normalized
    std::vector<std::size_t> on_hyperplane;  // indices of X lying on it
};

/// An X-admissible subspace s with everything downstream modules need:
/// the split X = (X ∩ s) ⊔ (X ∖ s), the lattice quotient map, and the
/// projected configuration X/s.
struct AdmissibleSubspace {
    std::vector<std::size_t> basis;  // X indices spanning s
    std::size_t dim = 0;
    std::vector<std::size_t> x_in_s;
    std::vector<std::size_t> x_minus_s;
    QuotientMap quotient;
    std::vector<IntVec> projected_list;  // images of X∖s, nonzero, span Z^{n-dim}
    std::vector<Rat> span_key;           // flattened RREF of the span (dedup/identity)
};

/// Immutable combinatorial index of a configuration: admissible hyperplanes
/// and subspaces, cocircuits, regularity and tope queries, zonotope queries.
class ArrangementIndex {
  public:
    explicit ArrangementIndex(Configuration config);

    const Configuration& config() const { return config_; }
    std::size_t dim() const { return config_.n; }

    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const std::vector<AdmissibleSubspace>& subspaces() const { return subspaces_; }  // R
    /// R' = R minus the full space, in the same order as subspaces().
    std::vector<const AdmissibleSubspace*> proper_subspaces() const;

    /// One cocircuit per admissible hyperplane: the X indices off it.
    const std::vector<std::vector<std::size_t>>& cocircuits() const { return cocircuits_; }

    /// Y is long iff X minus Y does not span.
    bool is_long(const std::vector<std::size_t>& Y) const;

    /// v is affine regular iff no admissible-hyperplane pairing is integral.
    bool is_regular(const RatVec& v) const;

    /// Floor of every hyperplane pairing; constant exactly on affine topes.
    /// Throws NonRegularPoint off the regular set.
    std::vector<Int> tope_key(const RatVec& v) const;

    /// Exact membership in the closed zonotope Z(X).
    bool zonotope_contains(const RatVec& v) const;

    Rat zonotope_volume() const;

    /// All n-element index subsets of X that are bases (det != 0).
    const std::vector<std::vector<std::size_t>>& bases() const { return bases_; }

    /// All t in (lo,hi) where v - t*a crosses the affine arrangement,
    /// exact, sorted, deduplicated. Throws SegmentInsideArrangement when the
    /// whole segment lies inside a translated hyperplane.
    std::vector<Rat> segment_breakpoints(const RatVec& v, const IntVec& a, const Rat& lo,
                                         const Rat& hi) const;

  private:
    Configuration config_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<AdmissibleSubspace> subspaces_;
    std::vector<std::vector<std::size_t>> cocircuits_;
    std::vector<std::vector<std::size_t>> bases_;
};

/// First (in index order) subset of Y whose vectors span the ambient space.
std::vector<std::size_t> greedy_basis(const Configuration& c, const std::vector<std::size_t>& Y);

}  // namespace boxcalc
