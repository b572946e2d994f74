#pragma once

#include "canrep/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canrep {

enum class TrisectLabel { P, T, Q };

std::string labelName(TrisectLabel label);
TrisectLabel labelOfDefect(long long defect);

/// A tube of the separating family: an exceptional tube attached to an arm, or a
/// homogeneous tube at a point of the projective line (infinity or a monic
/// irreducible polynomial).
template <class F>
struct TubeId {
    enum class Kind { Arm, Point };
    Kind kind = Kind::Point;
    int arm = 0;
    bool infinite = false;
    Polynomial<F> mu;

    static TubeId atArm(int i) { return {Kind::Arm, i, false, {}}; }
    static TubeId atInfinity() { return {Kind::Point, 0, true, {}}; }
    static TubeId atPoint(Polynomial<F> p) { return {Kind::Point, 0, false, std::move(p)}; }

    bool isArm() const { return kind == Kind::Arm; }
    /// "arm:2", "pt:∞" or "pt:t^2+1".
    std::string format() const;

    friend bool operator==(const TubeId& a, const TubeId& b) {
        if (a.kind != b.kind) return false;
        if (a.isArm()) return a.arm == b.arm;
        return a.infinite == b.infinite && (a.infinite || a.mu == b.mu);
    }
    friend bool operator!=(const TubeId& a, const TubeId& b) { return !(a == b); }
};

/// Parses "arm:i", "pt:∞" (or "pt:inf") and "pt:<polynomial in t>".
template <class F>
TubeId<F> parseTube(const Field<F>& k, const std::string& text);

/// Throws DomainError("invalid_tube") unless the tube exists for this algebra.
template <class F>
void validateTube(const Algebra<F>& alg, const TubeId<F>& tube, Rng& rng);

/// Arm tubes of weight one are homogeneous; this maps them to their point.
template <class F>
TubeId<F> canonicalTube(const Algebra<F>& alg, const TubeId<F>& tube);

/// The point of P^1 where the arm-i composite of a homogeneous simple vanishes.
template <class F>
TubeId<F> specialPoint(const Algebra<F>& alg, int arm);

template <class F>
struct TubePosition {
    TubeId<F> tube;
    Index socle = 0;
    Index rlen = 1;
};

template <class F>
TrisectLabel classifyDims(const Algebra<F>& alg, const DimVector& dims);
/// Label of an indecomposable; throws DomainError("decomposable") otherwise.
template <class F>
TrisectLabel classify(const Representation<F>& m, Rng& rng);

template <class F>
std::vector<Representation<F>> pegs(const AlgebraPtr<F>& alg);

template <class F>
struct TrisectSplit {
    Representation<F> p;
    Representation<F> t;
    Representation<F> q;
    /// p (+) t (+) q -> m.
    Morphism<F> iso;
};

template <class F>
TrisectSplit<F> splitTrisect(const Representation<F>& m, Rng& rng);

/// The tau-orbit of regular simples of a tube, s_0, s_1 = tau s_0, ...
template <class F>
std::vector<Representation<F>> regularSimples(const AlgebraPtr<F>& alg, const TubeId<F>& tube, Rng& rng);

/// Least r >= 1 with tau^r s isomorphic to s.
template <class F>
Index tauPeriod(const Representation<F>& s, Rng& rng);

/// S[r]: uniserial in add t with regular socle s and regular length r.
template <class F>
Representation<F> sBracket(const Representation<F>& s, Index r, Rng& rng);
template <class F>
Representation<F> sBracket(const AlgebraPtr<F>& alg, const TubePosition<F>& pos, Rng& rng);

/// The tube of an indecomposable regular module.
template <class F>
TubeId<F> tubeOf(const Representation<F>& x, Rng& rng);

template <class F>
struct RegularSeries {
    Representation<F> summand;
    TubeId<F> tube;
    /// Regular composition factors from the socle up, as indices into
    /// regularSimples(tube) and as modules.
    std::vector<Index> factors;
    std::vector<Representation<F>> factorModules;
};

template <class F>
std::vector<RegularSeries<F>> regularSeries(const Representation<F>& m, Rng& rng);

template <class F>
struct TubePartition {
    Representation<F> inside;
    Representation<F> outside;
    /// inside (+) outside -> m.
    Morphism<F> iso;
};

template <class F>
TubePartition<F> partitionByTubes(const Representation<F>& m, const std::vector<TubeId<F>>& tubes, Rng& rng);

/// tM: the largest submodule generated by regular modules.
template <class F>
Subobject<F> torsionPart(const Representation<F>& m, Rng& rng);

}  // namespace canrep
