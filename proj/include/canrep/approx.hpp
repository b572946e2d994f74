#pragma once

#include "canrep/trisection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canrep {

/// S[1] -> S[2] -> ... -> S[r] with regular socle S.
template <class F>
struct PruferTruncation {
    Representation<F> socle;
    std::vector<Representation<F>> modules;
    /// inclusions[j]: S[j+1] -> S[j+2].
    std::vector<Morphism<F>> inclusions;

    Index depth() const { return static_cast<Index>(modules.size()); }
    /// S[i] -> S[j] for 1 <= i <= j <= depth.
    Morphism<F> composite(Index i, Index j) const;
};

template <class F>
PruferTruncation<F> pruferChain(const Representation<F>& s, Index r, Rng& rng);

template <class F>
struct TruncationParams {
    std::vector<TubeId<F>> tubes;
    Index depth = 1;
};

/// Regular simples of every tube in the list, tubes in order, duplicates removed.
template <class F>
std::vector<Representation<F>> tubeSimples(const AlgebraPtr<F>& alg, const TruncationParams<F>& params, Rng& rng);

template <class F>
struct LeftApproximation {
    /// 0 -> m' -> X -> T' -> 0, with m' the input stripped of label-Q summands.
    ShortExactSequence<F> sequence;
    std::vector<Representation<F>> simples;
    /// d_S per entry of `simples`.
    std::vector<Index> multiplicities;
    /// The label-Q part that was split off; zero when there was none.
    Representation<F> stripped;
};

template <class F>
LeftApproximation<F> leftOmegaApproxTruncated(const Representation<F>& m, const TruncationParams<F>& params, Rng& rng);

template <class F>
struct RightApproximation {
    /// 0 -> K -> N -> m -> 0.
    ShortExactSequence<F> sequence;
    /// Regular simples and regular lengths of the summands S[j] of N.
    std::vector<Representation<F>> socles;
    std::vector<Index> lengths;
};

template <class F>
RightApproximation<F> rightOmegaApproxTruncated(const Representation<F>& m, const TruncationParams<F>& params, Rng& rng);

/// g : f.target -> h.target with g o f = h, if any.
template <class F>
std::optional<Morphism<F>> extendAlong(const Morphism<F>& f, const Morphism<F>& h);

/// The generic Kronecker module over K(t): dims (1, 1), arrows (1, t).
template <class K>
Representation<RationalFunction<K>> kroneckerGeneric(const Field<K>& base);
/// Same over a given algebra, which must be the Kronecker algebra.
template <class K>
Representation<RationalFunction<K>> kroneckerGeneric(const AlgebraPtr<RationalFunction<K>>& alg);

/// Length of g over its endomorphism ring.
template <class F>
Index endolength(const Representation<F>& g);

template <class F>
struct PegGrowth {
    std::vector<Index> dims;
    /// A monomorphism P -> S[r] where one was found.
    std::vector<std::optional<Morphism<F>>> witnesses;
};

template <class F>
PegGrowth<F> pegHomGrowth(const Representation<F>& peg, const Representation<F>& s, Index rMax, Rng& rng);

}  // namespace canrep
