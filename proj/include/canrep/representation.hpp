#pragma once

#include "canrep/algebra.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace canrep {

/// A finite-dimensional representation: a vector space per vertex and a matrix
/// of shape dim(target) x dim(source) per arrow, satisfying every relation.
template <class F>
class Representation {
public:
    Representation() = default;
    /// Validates shapes and relations; throws DomainError on failure.
    Representation(AlgebraPtr<F> alg, DimVector dims, std::vector<Mat<F>> arrows);

    static Representation zero(AlgebraPtr<F> alg);

    const AlgebraPtr<F>& algebraPtr() const { return data_->alg; }
    const Algebra<F>& algebra() const { return *data_->alg; }
    const Field<F>& field() const { return data_->alg->field(); }
    Index dim(int v) const { return data_->dims[static_cast<std::size_t>(v)]; }
    const DimVector& dims() const { return data_->dims; }
    Index totalDim() const;
    bool isZero() const { return totalDim() == 0; }
    const Mat<F>& arrow(int a) const { return data_->arrows[static_cast<std::size_t>(a)]; }
    const std::vector<Mat<F>>& arrowMatrices() const { return data_->arrows; }
    bool valid() const { return static_cast<bool>(data_); }

    /// The matrix of a path starting at `source` (arrows in traversal order).
    Mat<F> pathMatrix(int source, const std::vector<int>& arrows) const;
    bool satisfiesRelations() const;

    /// The same representation after the basis change x |-> g_v x at each vertex.
    Representation conjugated(const std::vector<Mat<F>>& g) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        if (a.data_ == b.data_) return true;
        if (a.data_->alg != b.data_->alg || a.data_->dims != b.data_->dims) return false;
        for (std::size_t i = 0; i < a.data_->arrows.size(); ++i)
            if (!sameMatrix(a.data_->arrows[i], b.data_->arrows[i])) return false;
        return true;
    }

private:
    struct Data {
        AlgebraPtr<F> alg;
        DimVector dims;
        std::vector<Mat<F>> arrows;
    };
    std::shared_ptr<const Data> data_;
};

/// Vertexwise linear maps commuting with every arrow.
template <class F>
class Morphism {
public:
    Morphism() = default;
    /// Validates shapes and commuting squares unless `check` is false.
    Morphism(Representation<F> source, Representation<F> target, std::vector<Mat<F>> maps, bool check = true);

    static Morphism zero(const Representation<F>& source, const Representation<F>& target);
    static Morphism identity(const Representation<F>& m);

    const Representation<F>& source() const { return source_; }
    const Representation<F>& target() const { return target_; }
    const Mat<F>& at(int v) const { return maps_[static_cast<std::size_t>(v)]; }
    const std::vector<Mat<F>>& maps() const { return maps_; }

    bool isCommuting() const;
    bool isZero() const;
    bool isInjective() const;
    bool isSurjective() const;
    bool isIsomorphism() const;

    friend Morphism operator*(const Morphism& g, const Morphism& f) { return compose(g, f); }
    static Morphism compose(const Morphism& g, const Morphism& f);
    friend Morphism operator+(const Morphism& a, const Morphism& b) { return combine(a, b, false); }
    friend Morphism operator-(const Morphism& a, const Morphism& b) { return combine(a, b, true); }
    friend Morphism operator*(const F& s, const Morphism& f) {
        Morphism r = f;
        for (auto& m : r.maps_) m *= s;
        return r;
    }
    friend bool operator==(const Morphism& a, const Morphism& b) {
        if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
        for (std::size_t i = 0; i < a.maps_.size(); ++i)
            if (!sameMatrix(a.maps_[i], b.maps_[i])) return false;
        return true;
    }

private:
    static Morphism combine(const Morphism& a, const Morphism& b, bool subtract);

    Representation<F> source_;
    Representation<F> target_;
    std::vector<Mat<F>> maps_;
};

template <class F>
std::optional<Morphism<F>> inverse(const Morphism<F>& f);

/// Hom(source, target) as the null space of the commuting-square system.
/// Morphisms are flattened vertex by vertex, each block column-major.
template <class F>
struct HomSpace {
    Representation<F> source;
    Representation<F> target;
    std::vector<Index> offsets;
    Mat<F> basis;

    Index dim() const { return basis.cols(); }
    Index ambientDim() const { return offsets.back(); }
    Morphism<F> element(const Vec<F>& coords) const;
    Morphism<F> basisElement(Index i) const;
    Morphism<F> fromFlat(const Vec<F>& flat) const;
    Vec<F> flatten(const Morphism<F>& f) const;
    /// Coordinates of f in `basis`.
    Vec<F> coordinates(const Morphism<F>& f) const;
    std::vector<Morphism<F>> morphisms() const;
};

template <class F>
HomSpace<F> homSpace(const Representation<F>& m, const Representation<F>& n);
template <class F>
std::vector<Morphism<F>> homBasis(const Representation<F>& m, const Representation<F>& n);
template <class F>
Index homDim(const Representation<F>& m, const Representation<F>& n);

template <class F>
struct DirectSum {
    Representation<F> object;
    std::vector<Morphism<F>> injections;
    std::vector<Morphism<F>> projections;
};

template <class F>
DirectSum<F> directSum(const AlgebraPtr<F>& alg, const std::vector<Representation<F>>& parts);
template <class F>
DirectSum<F> directSum(const std::vector<Representation<F>>& parts);
/// [f_1 ... f_n] : (+) sources -> target.
template <class F>
Morphism<F> rowMorphism(const DirectSum<F>& sources, const std::vector<Morphism<F>>& maps, const Representation<F>& target);
/// [f_1; ...; f_n] : source -> (+) targets.
template <class F>
Morphism<F> columnMorphism(const Representation<F>& source, const std::vector<Morphism<F>>& maps, const DirectSum<F>& targets);
/// Block-diagonal f_1 (+) ... (+) f_n.
template <class F>
Morphism<F> diagonalMorphism(const DirectSum<F>& sources, const std::vector<Morphism<F>>& maps, const DirectSum<F>& targets);

template <class F>
struct Subobject {
    Representation<F> object;
    Morphism<F> inclusion;
};

template <class F>
struct Quotient {
    Representation<F> object;
    Morphism<F> projection;
    /// Per vertex, a right inverse of the projection (basis of a complement).
    std::vector<Mat<F>> section;
};

template <class F>
Subobject<F> kernel(const Morphism<F>& f);
template <class F>
Quotient<F> cokernel(const Morphism<F>& f);
template <class F>
struct Image {
    Representation<F> object;
    Morphism<F> inclusion;
    Morphism<F> corestriction;
};
template <class F>
Image<F> image(const Morphism<F>& f);

/// Smallest subrepresentation containing the given column spans.
template <class F>
Subobject<F> generatedSubobject(const Representation<F>& m, const std::vector<Mat<F>>& spans);
template <class F>
Quotient<F> quotient(const Subobject<F>& sub);
/// The map coker f -> X induced by g with g o f = 0.
template <class F>
Morphism<F> factorThroughCokernel(const Quotient<F>& coker, const Morphism<F>& g);
/// The map X -> A with incl o result = g, when g lands in the image of incl.
template <class F>
std::optional<Morphism<F>> factorThroughMono(const Morphism<F>& incl, const Morphism<F>& g);

template <class F>
Representation<F> simpleAt(const AlgebraPtr<F>& alg, int v);
template <class F>
Representation<F> projectiveAt(const AlgebraPtr<F>& alg, int v);
template <class F>
Representation<F> injectiveAt(const AlgebraPtr<F>& alg, int v);

/// k-dual; a representation of the opposite algebra.
template <class F>
Representation<F> dual(const Representation<F>& m);
/// D f : D(target) -> D(source).
template <class F>
Morphism<F> dual(const Morphism<F>& f, const Representation<F>& dualSource, const Representation<F>& dualTarget);

/// A direct sum of indecomposable projectives P(tops[0]) (+) P(tops[1]) (+) ...
template <class F>
struct ProjectiveSum {
    std::vector<int> tops;
    Representation<F> object;
    /// Position of the generator of summand i inside object at vertex tops[i].
    std::vector<Index> generator;
};

template <class F>
ProjectiveSum<F> projectiveSum(const AlgebraPtr<F>& alg, const std::vector<int>& tops);
/// The map sending the generator of summand i to elements[i] in m at vertex tops[i].
template <class F>
Morphism<F> mapFromProjective(const ProjectiveSum<F>& p, const Representation<F>& m, const std::vector<Vec<F>>& elements);
/// The element of target at vertex tops[i] hit by the generator of summand i.
template <class F>
Vec<F> generatorImage(const ProjectiveSum<F>& p, const Morphism<F>& f, std::size_t i);
/// Lift of f : P -> N through a surjection g : M -> N.
template <class F>
Morphism<F> liftFromProjective(const ProjectiveSum<F>& p, const Morphism<F>& f, const Morphism<F>& g);

template <class F>
Subobject<F> radical(const Representation<F>& m);
template <class F>
Quotient<F> top(const Representation<F>& m);

template <class F>
struct ProjectiveCover {
    ProjectiveSum<F> projective;
    Morphism<F> cover;
};
template <class F>
ProjectiveCover<F> projectiveCover(const Representation<F>& m);

/// P1 -> P0 -> m -> 0 with P0 -> m a projective cover and P1 -> Omega another.
template <class F>
struct Presentation {
    ProjectiveSum<F> p0;
    ProjectiveSum<F> p1;
    Morphism<F> cover;           // P0 -> m
    Subobject<F> syzygy;         // Omega -> P0
    Morphism<F> syzygyCover;     // P1 -> Omega
    Morphism<F> map;             // P1 -> P0
    /// coefficient(i, j): the component of the generator of P1-summand i in
    /// P0-summand j, as an element of paths(p0.tops[j], p1.tops[i]).
    Vec<F> coefficient(std::size_t i, std::size_t j) const;
};
template <class F>
Presentation<F> minimalProjectivePresentation(const Representation<F>& m);

/// The morphism (+) P(sources) -> (+) P(targets) whose (i, j) component sends the
/// generator of P(sources[i]) to coeff[i][j] in paths(targets[j], sources[i]).
template <class F>
Morphism<F> projectiveMorphism(const ProjectiveSum<F>& sources, const ProjectiveSum<F>& targets,
                               const std::vector<std::vector<Vec<F>>>& coeff);

/// Vertexwise dimension check plus relation check for a representation built by hand.
template <class F>
Representation<F> makeRepresentation(const AlgebraPtr<F>& alg, const std::vector<std::pair<std::string, Index>>& dims,
                                     const std::vector<std::pair<std::string, Mat<F>>>& arrows);

}  // namespace canrep
