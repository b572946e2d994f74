#pragma once

#include "canrep/representation.hpp"

#include <optional>
#include <vector>

namespace canrep {

/// End(m) on the basis of homSpace(m, m): products[i][j] holds the coordinates
/// of basis(i) o basis(j).
template <class F>
struct EndStructure {
    HomSpace<F> space;
    std::vector<std::vector<Vec<F>>> products;
    Vec<F> unit;

    Index dim() const { return space.dim(); }
    /// Matrix of left multiplication by x on coordinate vectors.
    Mat<F> leftMultiplication(const Vec<F>& x) const;
    Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const;
};

template <class F>
EndStructure<F> endAlgebraStructure(const Representation<F>& m);

enum class Locality { Local, NotLocal, Unknown };

/// Outcome of the locality test on End(m). When `verdict` is Local, `radical`
/// spans a nilpotent ideal with End(m)/radical a field, which proves that
/// End(m) is local with that radical.
template <class F>
struct LocalityCertificate {
    Locality verdict = Locality::Unknown;
    Mat<F> radical;
    Index residueDegree = 0;
};

template <class F>
LocalityCertificate<F> certifyLocal(const EndStructure<F>& end, Rng& rng);

template <class F>
struct Summand {
    Representation<F> module;
    Index multiplicity = 0;
};

template <class F>
struct Decomposition {
    /// Indecomposable parts, isomorphic parts adjacent.
    std::vector<Representation<F>> parts;
    std::vector<Summand<F>> summands;
    /// (+) parts -> m and its two-sided inverse.
    Morphism<F> iso;
    Morphism<F> inverseIso;
    std::vector<Morphism<F>> inclusions;
    std::vector<Morphism<F>> projections;

    /// Checks that iso and inverseIso compose to identities both ways.
    bool verify() const;
};

/// Splits m into indecomposables. Throws DomainError("field_too_small") when
/// the randomized splitter and the certificate both stall.
template <class F>
Decomposition<F> decompose(const Representation<F>& m, Rng& rng);

template <class F>
bool isIndecomposable(const Representation<F>& m, Rng& rng);

/// End(m) is a division ring.
template <class F>
bool isBrick(const Representation<F>& m, Rng& rng);

template <class F>
std::optional<Morphism<F>> isIsomorphic(const Representation<F>& m, const Representation<F>& n, Rng& rng);

/// Block-diagonal operator of an endomorphism on the total space.
template <class F>
Mat<F> totalMatrix(const Morphism<F>& f);

/// p(f) computed vertexwise.
template <class F>
Morphism<F> evaluate(const Polynomial<F>& p, const Morphism<F>& f);

/// Minimal polynomial of an endomorphism as a linear operator.
template <class F>
Polynomial<F> minimalPolynomial(const Morphism<F>& f);

}  // namespace canrep
