#include "canrep/homology.hpp"

namespace canrep {

namespace {

template <class F>
Morphism<F> negated(const Morphism<F>& f) {
    return f.source().field().fromInt(-1) * f;
}

template <class F>
std::vector<Morphism<F>> restrictionsFromCover(const Presentation<F>& pres, const Representation<F>& m) {
    const auto& k = m.field();
    std::vector<Morphism<F>> out;
    const auto& tops = pres.p0.tops;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        for (Index r = 0; r < m.dim(tops[i]); ++r) {
            std::vector<Vec<F>> elements;
            for (std::size_t j = 0; j < tops.size(); ++j) {
                Vec<F> e = zeros(k, m.dim(tops[j]), 1).col(0);
                if (j == i) e(r) = k.one();
                elements.push_back(std::move(e));
            }
            out.push_back(mapFromProjective(pres.p0, m, elements) * pres.syzygy.inclusion);
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Ext^1

template <class F>
ExtClass<F> ExtSpace<F>::element(const Vec<F>& coords) const {
    return {source, target, presentation, cocycles.fromFlat(complement * coords)};
}

template <class F>
ExtClass<F> ExtSpace<F>::basisElement(Index i) const {
    return {source, target, presentation, cocycles.fromFlat(complement.col(i))};
}

template <class F>
std::vector<ExtClass<F>> ExtSpace<F>::basis() const {
    std::vector<ExtClass<F>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basisElement(i));
    return out;
}

template <class F>
Vec<F> ExtSpace<F>::coordinates(const Morphism<F>& cocycle) const {
    const auto& k = target.field();
    auto x = solve(hstack(boundaries, complement), Mat<F>(cocycles.flatten(cocycle)), k);
    if (!x) throw DomainError("not_a_cocycle", "map is not a cocycle of this presentation");
    return x->col(0).tail(dim());
}

template <class F>
bool ExtSpace<F>::isZero(const Morphism<F>& cocycle) const {
    return allZero(coordinates(cocycle));
}

template <class F>
ExtSpace<F> ext1Space(const Representation<F>& n, const Representation<F>& m) {
    if (n.algebraPtr() != m.algebraPtr()) throw DomainError("algebra_mismatch", "modules over different algebras");
    const auto& k = m.field();
    auto pres = std::make_shared<const Presentation<F>>(minimalProjectivePresentation(n));
    auto hom = homSpace(pres->syzygy.object, m);
    Mat<F> restricted = zeros(k, hom.ambientDim(), 0);
    for (const auto& r : restrictionsFromCover(*pres, m)) restricted = hstack(restricted, Mat<F>(hom.flatten(r)));
    Mat<F> boundaries = columnSpaceBasis(restricted);
    Mat<F> inCoords = zeros(k, hom.dim(), boundaries.cols());
    if (boundaries.cols() > 0) inCoords = *solve(hom.basis, boundaries, k);
    Mat<F> complement = hom.basis * complementBasis(inCoords, k);
    return {n, m, std::move(pres), std::move(hom), std::move(boundaries), std::move(complement)};
}

template <class F>
std::vector<ExtClass<F>> ext1Basis(const Representation<F>& n, const Representation<F>& m) {
    return ext1Space(n, m).basis();
}

template <class F>
Index ext1Dim(const Representation<F>& n, const Representation<F>& m) {
    return ext1Space(n, m).dim();
}

// ---------------------------------------------------------------- sequences

template <class F>
bool ShortExactSequence<F>::verify() const {
    if (!iota.isCommuting() || !pi.isCommuting()) return false;
    if (!iota.isInjective() || !pi.isSurjective() || !(pi * iota).isZero()) return false;
    for (int v = 0; v < b.algebra().vertexCount(); ++v)
        if (b.dim(v) != a.dim(v) + c.dim(v)) return false;
    return true;
}

template <class F>
ShortExactSequence<F> realizeExtension(const ExtClass<F>& e) {
    const auto& pres = *e.presentation;
    auto sum = directSum<F>({e.target, pres.p0.object});
    auto glue = columnMorphism(pres.syzygy.object, {negated(e.cocycle), pres.syzygy.inclusion}, sum);
    auto q = cokernel(glue);
    auto iota = q.projection * sum.injections[0];
    auto pi = factorThroughCokernel(q, rowMorphism(sum, {Morphism<F>::zero(e.target, e.source), pres.cover}, e.source));
    return {e.target, q.object, e.source, std::move(iota), std::move(pi)};
}

template <class F>
ExtClass<F> classOf(const ShortExactSequence<F>& s) {
    auto pres = std::make_shared<const Presentation<F>>(minimalProjectivePresentation(s.c));
    auto lift = liftFromProjective(pres->p0, pres->cover, s.pi);
    auto z = factorThroughMono(s.iota, lift * pres->syzygy.inclusion);
    if (!z) throw DomainError("not_exact", "sequence is not exact");
    return {s.c, s.a, std::move(pres), std::move(*z)};
}

template <class F>
ExtClass<F> pushforward(const ExtClass<F>& e, const Morphism<F>& f) {
    return {e.source, f.target(), e.presentation, f * e.cocycle};
}

template <class F>
ExtClass<F> pullback(const ExtClass<F>& e, const Morphism<F>& g) {
    auto pres = std::make_shared<const Presentation<F>>(minimalProjectivePresentation(g.source()));
    auto top = liftFromProjective(pres->p0, g * pres->cover, e.presentation->cover);
    auto restricted = factorThroughMono(e.presentation->syzygy.inclusion, top * pres->syzygy.inclusion);
    return {g.source(), e.target, std::move(pres), e.cocycle * *restricted};
}

template <class F>
InducedSequence<F> pushout(const Morphism<F>& f, const ShortExactSequence<F>& s) {
    if (!(f.source() == s.a)) throw DomainError("shape_mismatch", "map does not start at the left term");
    auto sum = directSum<F>({f.target(), s.b});
    auto q = cokernel(columnMorphism(s.a, {negated(f), s.iota}, sum));
    auto iota = q.projection * sum.injections[0];
    auto middle = q.projection * sum.injections[1];
    auto pi = factorThroughCokernel(q, rowMorphism(sum, {Morphism<F>::zero(f.target(), s.c), s.pi}, s.c));
    return {{f.target(), q.object, s.c, std::move(iota), std::move(pi)}, std::move(middle)};
}

template <class F>
InducedSequence<F> pullback(const Morphism<F>& g, const ShortExactSequence<F>& s) {
    if (!(g.target() == s.c)) throw DomainError("shape_mismatch", "map does not end at the right term");
    auto sum = directSum<F>({s.b, g.source()});
    auto ker = kernel(rowMorphism(sum, {s.pi, negated(g)}, s.c));
    auto pi = sum.projections[1] * ker.inclusion;
    auto middle = sum.projections[0] * ker.inclusion;
    auto iota = *factorThroughMono(ker.inclusion, columnMorphism(s.a, {s.iota, Morphism<F>::zero(s.a, g.source())}, sum));
    return {{s.a, ker.object, g.source(), std::move(iota), std::move(pi)}, std::move(middle)};
}

template <class F>
ShortExactSequence<F> splitSequence(const Representation<F>& a, const Representation<F>& c) {
    auto sum = directSum<F>({a, c});
    return {a, sum.object, c, sum.injections[0], sum.projections[1]};
}

template <class F>
ShortExactSequence<F> sequenceSum(const std::vector<ShortExactSequence<F>>& parts) {
    if (parts.empty()) throw DomainError("empty_sum", "no sequences to add");
    const auto& alg = parts.front().a.algebraPtr();
    std::vector<Representation<F>> as, bs, cs;
    std::vector<Morphism<F>> iotas, pis;
    for (const auto& s : parts) {
        as.push_back(s.a);
        bs.push_back(s.b);
        cs.push_back(s.c);
        iotas.push_back(s.iota);
        pis.push_back(s.pi);
    }
    auto a = directSum(alg, as);
    auto b = directSum(alg, bs);
    auto c = directSum(alg, cs);
    return {a.object, b.object, c.object, diagonalMorphism(a, iotas, b), diagonalMorphism(b, pis, c)};
}

template <class F>
UniversalExtension<F> universalExtension(const Representation<F>& m, const std::vector<Representation<F>>& modules) {
    const auto& k = m.field();
    std::vector<ShortExactSequence<F>> pieces;
    std::vector<Index> multiplicities;
    for (const auto& s : modules) {
        auto space = ext1Space(s, m);
        const auto ends = homBasis(s, s);
        Mat<F> span = zeros(k, space.dim(), 0);
        Index chosen = 0;
        for (Index i = 0; i < space.dim(); ++i) {
            const Mat<F> e = space.coordinates(space.basisElement(i).cocycle);
            if (rank(hstack(span, e)) == span.cols()) continue;
            ++chosen;
            pieces.push_back(realizeExtension(space.basisElement(i)));
            for (const auto& phi : ends) {
                const auto moved = pullback(space.basisElement(i), phi);
                span = hstack(span, Mat<F>(space.coordinates(moved.cocycle)));
            }
            span = columnSpaceBasis(span);
        }
        if (chosen * static_cast<Index>(ends.size()) != space.dim())
            throw DomainError("ext_not_free", "Ext^1 is not free over the endomorphism ring");
        multiplicities.push_back(chosen);
    }
    if (pieces.empty()) return {splitSequence(m, Representation<F>::zero(m.algebraPtr())), multiplicities};
    auto total = sequenceSum(pieces);
    auto copies = directSum(m.algebraPtr(), std::vector<Representation<F>>(pieces.size(), m));
    auto codiagonal = rowMorphism(copies, std::vector<Morphism<F>>(pieces.size(), Morphism<F>::identity(m)), m);
    return {pushout(codiagonal, total).sequence, multiplicities};
}

// ---------------------------------------------------------------- translates

template <class F>
Representation<F> transpose(const Representation<F>& m) {
    const auto pres = minimalProjectivePresentation(m);
    const auto op = m.algebra().op();
    auto q0 = projectiveSum(op, pres.p0.tops);
    auto q1 = projectiveSum(op, pres.p1.tops);
    std::vector<std::vector<Vec<F>>> coeff(pres.p0.tops.size());
    for (std::size_t j = 0; j < pres.p0.tops.size(); ++j)
        for (std::size_t i = 0; i < pres.p1.tops.size(); ++i) coeff[j].push_back(pres.coefficient(i, j));
    return cokernel(projectiveMorphism(q0, q1, coeff)).object;
}

template <class F>
Index summandMultiplicity(const Representation<F>& x, const Representation<F>& m) {
    if (x.isZero()) return 0;
    const auto into = homBasis(x, m);
    const auto back = homBasis(m, x);
    if (into.empty() || back.empty()) return 0;
    int v = 0;
    while (x.dim(v) == 0) ++v;
    Mat<F> pairing = zeros(m.field(), static_cast<Index>(back.size()), static_cast<Index>(into.size()));
    for (std::size_t a = 0; a < back.size(); ++a)
        for (std::size_t b = 0; b < into.size(); ++b)
            pairing(static_cast<Index>(a), static_cast<Index>(b)) = (back[a] * into[b]).at(v)(0, 0);
    return rank(pairing);
}

template <class F>
TranslateResult<F> tauWithReport(const Representation<F>& m) {
    TranslateResult<F> out{dual(transpose(m)), {}};
    for (int v = 0; v < m.algebra().vertexCount(); ++v)
        for (Index i = summandMultiplicity(projectiveAt(m.algebraPtr(), v), m); i > 0; --i) out.dropped.push_back(v);
    return out;
}

template <class F>
TranslateResult<F> tauInverseWithReport(const Representation<F>& m) {
    TranslateResult<F> out{transpose(dual(m)), {}};
    for (int v = 0; v < m.algebra().vertexCount(); ++v)
        for (Index i = summandMultiplicity(injectiveAt(m.algebraPtr(), v), m); i > 0; --i) out.dropped.push_back(v);
    return out;
}

template <class F>
Representation<F> tau(const Representation<F>& m) {
    return dual(transpose(m));
}

template <class F>
Representation<F> tauInverse(const Representation<F>& m) {
    return transpose(dual(m));
}

#define CANREP_INSTANTIATE(F)                                                                                  \
    template struct ExtSpace<F>;                                                                               \
    template struct ShortExactSequence<F>;                                                                     \
    template ExtSpace<F> ext1Space(const Representation<F>&, const Representation<F>&);                        \
    template std::vector<ExtClass<F>> ext1Basis(const Representation<F>&, const Representation<F>&);           \
    template Index ext1Dim(const Representation<F>&, const Representation<F>&);                                \
    template ShortExactSequence<F> realizeExtension(const ExtClass<F>&);                                       \
    template ExtClass<F> classOf(const ShortExactSequence<F>&);                                                \
    template ExtClass<F> pushforward(const ExtClass<F>&, const Morphism<F>&);                                  \
    template ExtClass<F> pullback(const ExtClass<F>&, const Morphism<F>&);                                     \
    template InducedSequence<F> pushout(const Morphism<F>&, const ShortExactSequence<F>&);                     \
    template InducedSequence<F> pullback(const Morphism<F>&, const ShortExactSequence<F>&);                    \
    template ShortExactSequence<F> splitSequence(const Representation<F>&, const Representation<F>&);          \
    template ShortExactSequence<F> sequenceSum(const std::vector<ShortExactSequence<F>>&);                     \
    template UniversalExtension<F> universalExtension(const Representation<F>&, const std::vector<Representation<F>>&); \
    template Representation<F> transpose(const Representation<F>&);                                            \
    template Index summandMultiplicity(const Representation<F>&, const Representation<F>&);                    \
    template TranslateResult<F> tauWithReport(const Representation<F>&);                                       \
    template TranslateResult<F> tauInverseWithReport(const Representation<F>&);                                \
    template Representation<F> tau(const Representation<F>&);                                                  \
    template Representation<F> tauInverse(const Representation<F>&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
