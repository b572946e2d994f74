#pragma once

#include "canrep/decompose.hpp"

#include <memory>
#include <vector>

namespace canrep {

/// A class in Ext^1(source, target), represented by a cocycle Omega(source) -> target
/// where Omega(source) is the syzygy of the minimal projective presentation.
template <class F>
struct ExtClass {
    Representation<F> source;
    Representation<F> target;
    std::shared_ptr<const Presentation<F>> presentation;
    Morphism<F> cocycle;
};

/// Ext^1(n, m) = coker(Hom(P0, m) -> Hom(Omega n, m)).
template <class F>
struct ExtSpace {
    Representation<F> source;
    Representation<F> target;
    std::shared_ptr<const Presentation<F>> presentation;
    HomSpace<F> cocycles;
    /// Flat cocycles that restrict from Hom(P0, m).
    Mat<F> boundaries;
    /// Flat cocycles completing `boundaries` to a basis of Hom(Omega n, m).
    Mat<F> complement;

    Index dim() const { return complement.cols(); }
    ExtClass<F> element(const Vec<F>& coords) const;
    ExtClass<F> basisElement(Index i) const;
    std::vector<ExtClass<F>> basis() const;
    /// Coordinates of the class of a cocycle Omega(n) -> m.
    Vec<F> coordinates(const Morphism<F>& cocycle) const;
    bool isZero(const Morphism<F>& cocycle) const;
};

template <class F>
ExtSpace<F> ext1Space(const Representation<F>& n, const Representation<F>& m);
template <class F>
std::vector<ExtClass<F>> ext1Basis(const Representation<F>& n, const Representation<F>& m);
template <class F>
Index ext1Dim(const Representation<F>& n, const Representation<F>& m);

template <class F>
struct ShortExactSequence {
    Representation<F> a;
    Representation<F> b;
    Representation<F> c;
    Morphism<F> iota;  // a -> b
    Morphism<F> pi;    // b -> c

    /// iota injective, pi surjective, pi iota = 0 and dim b = dim a + dim c.
    bool verify() const;
};

/// 0 -> target -> B -> source -> 0 obtained by pushing the presentation of
/// source out along the cocycle.
template <class F>
ShortExactSequence<F> realizeExtension(const ExtClass<F>& e);

/// The class of 0 -> A -> B -> C -> 0 in Ext^1(C, A).
template <class F>
ExtClass<F> classOf(const ShortExactSequence<F>& s);

/// f_* e for f : target -> X.
template <class F>
ExtClass<F> pushforward(const ExtClass<F>& e, const Morphism<F>& f);
/// g^* e for g : Y -> source.
template <class F>
ExtClass<F> pullback(const ExtClass<F>& e, const Morphism<F>& g);

template <class F>
struct InducedSequence {
    ShortExactSequence<F> sequence;
    /// Middle map of the morphism of sequences (old -> new for pushouts,
    /// new -> old for pullbacks).
    Morphism<F> middle;
};

/// Pushout of s along f : s.a -> A'.
template <class F>
InducedSequence<F> pushout(const Morphism<F>& f, const ShortExactSequence<F>& s);
/// Pullback of s along g : C' -> s.c.
template <class F>
InducedSequence<F> pullback(const Morphism<F>& g, const ShortExactSequence<F>& s);

template <class F>
ShortExactSequence<F> splitSequence(const Representation<F>& a, const Representation<F>& c);
template <class F>
ShortExactSequence<F> sequenceSum(const std::vector<ShortExactSequence<F>>& parts);

template <class F>
struct UniversalExtension {
    ShortExactSequence<F> sequence;
    /// Copies of each listed module in the quotient, in list order.
    std::vector<Index> multiplicities;
};

/// 0 -> m -> X -> (+) S^{d_S} -> 0 killing every Ext^1(S, m) under m -> X.
template <class F>
UniversalExtension<F> universalExtension(const Representation<F>& m, const std::vector<Representation<F>>& modules);

/// Auslander-Bridger transpose; a representation of the opposite algebra.
template <class F>
Representation<F> transpose(const Representation<F>& m);

template <class F>
struct TranslateResult {
    Representation<F> module;
    /// Vertices v with P(v) (for tau) or I(v) (for tauInverse) split off and
    /// sent to zero, with multiplicity.
    std::vector<int> dropped;
};

template <class F>
TranslateResult<F> tauWithReport(const Representation<F>& m);
template <class F>
TranslateResult<F> tauInverseWithReport(const Representation<F>& m);
template <class F>
Representation<F> tau(const Representation<F>& m);
template <class F>
Representation<F> tauInverse(const Representation<F>& m);

/// Multiplicity of x as a direct summand of m; requires End(x) = k.
template <class F>
Index summandMultiplicity(const Representation<F>& x, const Representation<F>& m);

}  // namespace canrep
