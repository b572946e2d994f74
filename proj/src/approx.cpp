#include "canrep/approx.hpp"

#include <algorithm>
#include <sstream>

namespace canrep {

namespace {

template <class F>
Vec<F> flatten(const Morphism<F>& f) {
    Index n = 0;
    for (const auto& m : f.maps()) n += m.size();
    Vec<F> out(n);
    Index pos = 0;
    for (const auto& m : f.maps())
        for (Index c = 0; c < m.cols(); ++c)
            for (Index r = 0; r < m.rows(); ++r) out(pos++) = m(r, c);
    return out;
}

template <class F>
std::vector<Morphism<F>> socleInclusions(const std::vector<PruferTruncation<F>>& chains) {
    std::vector<Morphism<F>> out;
    for (const auto& c : chains) out.push_back(c.composite(1, c.depth()));
    return out;
}

template <class F>
Morphism<F> coverOf(const std::vector<Morphism<F>>& maps, const Representation<F>& m) {
    std::vector<Representation<F>> sources;
    for (const auto& f : maps) sources.push_back(f.source());
    return rowMorphism(directSum(m.algebraPtr(), sources), maps, m);
}

}  // namespace

template <class F>
Morphism<F> PruferTruncation<F>::composite(Index i, Index j) const {
    if (i < 1 || j > depth() || i > j) throw DomainError("invalid_length", "composite outside the chain");
    auto f = Morphism<F>::identity(modules[static_cast<std::size_t>(i - 1)]);
    for (Index k = i; k < j; ++k) f = inclusions[static_cast<std::size_t>(k - 1)] * f;
    return f;
}

template <class F>
PruferTruncation<F> pruferChain(const Representation<F>& s, Index r, Rng& rng) {
    (void)rng;
    if (r < 1) throw DomainError("invalid_length", "depth must be positive");
    PruferTruncation<F> out{s, {s}, {}};
    auto top = s;
    for (Index k = 1; k < r; ++k) {
        top = tauInverse(top);
        auto space = ext1Space(top, out.modules.back());
        if (space.dim() == 0) throw DomainError("not_regular", "no extension continues the uniserial chain");
        auto seq = realizeExtension(space.basisElement(0));
        out.modules.push_back(seq.b);
        out.inclusions.push_back(seq.iota);
    }
    return out;
}

template <class F>
std::vector<Representation<F>> tubeSimples(const AlgebraPtr<F>& alg, const TruncationParams<F>& params, Rng& rng) {
    if (params.tubes.empty()) throw DomainError("invalid_tube", "the tube set is empty");
    if (params.depth < 1) throw DomainError("invalid_length", "depth must be positive");
    std::vector<TubeId<F>> seen;
    std::vector<Representation<F>> out;
    for (const auto& t : params.tubes) {
        validateTube(*alg, t, rng);
        const auto c = canonicalTube(*alg, t);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        for (auto& s : regularSimples(alg, c, rng)) out.push_back(std::move(s));
    }
    return out;
}

template <class F>
LeftApproximation<F> leftOmegaApproxTruncated(const Representation<F>& m, const TruncationParams<F>& params, Rng& rng) {
    const auto& alg = m.algebraPtr();
    LeftApproximation<F> out;
    out.simples = tubeSimples(alg, params, rng);
    out.stripped = Representation<F>::zero(alg);
    auto base = m;
    if (!m.isZero()) {
        auto split = splitTrisect(m, rng);
        if (!split.q.isZero()) {
            out.stripped = split.q;
            base = directSum<F>({split.p, split.t}).object;
        }
    }

    auto univ = universalExtension(base, out.simples);
    out.multiplicities = univ.multiplicities;
    std::vector<Representation<F>> small, big;
    std::vector<PruferTruncation<F>> chains;
    for (std::size_t i = 0; i < out.simples.size(); ++i) {
        if (out.multiplicities[i] == 0) continue;
        auto chain = pruferChain(out.simples[i], params.depth, rng);
        for (Index c = 0; c < out.multiplicities[i]; ++c) {
            small.push_back(out.simples[i]);
            big.push_back(chain.modules.back());
            chains.push_back(chain);
        }
    }
    if (small.empty()) {
        out.sequence = univ.sequence;
        return out;
    }
    const auto smallSum = directSum(alg, small);
    const auto bigSum = directSum(alg, big);
    if (!(smallSum.object == univ.sequence.c)) throw std::logic_error("universal extension quotient is not block diagonal");
    const auto socles = diagonalMorphism(smallSum, socleInclusions(chains), bigSum);

    // lift the universal class along Ext(bigSum, base) -> Ext(smallSum, base)
    const auto lower = ext1Space(smallSum.object, base);
    const auto upper = ext1Space(bigSum.object, base);
    const auto& k = m.field();
    Mat<F> restrict = zeros(k, lower.dim(), upper.dim());
    for (Index i = 0; i < upper.dim(); ++i)
        restrict.col(i) = lower.coordinates(pullback(upper.basisElement(i), socles).cocycle);
    const Mat<F> wanted = lower.coordinates(classOf(univ.sequence).cocycle);
    auto x = solve(restrict, wanted, k);
    if (!x) throw std::logic_error("universal class does not lift to the truncated Pruefer sum");
    out.sequence = realizeExtension(upper.element(Vec<F>(x->col(0))));
    return out;
}

template <class F>
RightApproximation<F> rightOmegaApproxTruncated(const Representation<F>& m, const TruncationParams<F>& params, Rng& rng) {
    const auto& alg = m.algebraPtr();
    if (m.isZero()) throw DomainError("not_q", "the module is zero");
    {
        auto split = splitTrisect(m, rng);
        if (!split.p.isZero() || !split.t.isZero())
            throw DomainError("not_q", "every summand must have label Q");
    }
    const auto simples = tubeSimples(alg, params, rng);

    std::vector<Morphism<F>> candidates;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < simples.size(); ++i) {
        const auto top = pruferChain(simples[i], params.depth, rng).modules.back();
        for (auto& f : homBasis(top, m)) {
            candidates.push_back(std::move(f));
            origin.push_back(i);
        }
    }
    auto all = candidates.empty() ? Morphism<F>::zero(Representation<F>::zero(alg), m) : coverOf(candidates, m);
    if (!all.isSurjective()) {
        const auto missing = top(cokernel(all).object).object;
        std::ostringstream msg;
        msg << "the tubes do not generate the module; enlarge tubes or depth. Missing tops at";
        for (int v = 0; v < alg->vertexCount(); ++v)
            if (missing.dim(v) > 0) msg << ' ' << alg->vertexLabel(v) << 'x' << missing.dim(v);
        throw DomainError("insufficient_tubes", msg.str());
    }

    std::vector<bool> keep(candidates.size(), true);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        keep[i] = false;
        std::vector<Morphism<F>> rest;
        for (std::size_t j = 0; j < candidates.size(); ++j)
            if (keep[j]) rest.push_back(candidates[j]);
        if (rest.empty() || !coverOf(rest, m).isSurjective()) keep[i] = true;
    }
    RightApproximation<F> out;
    std::vector<Morphism<F>> kept;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!keep[i]) continue;
        kept.push_back(candidates[i]);
        out.socles.push_back(simples[origin[i]]);
        out.lengths.push_back(params.depth);
    }
    auto pi = coverOf(kept, m);
    auto ker = kernel(pi);

    bool reduced = false;
    for (bool again = true; again;) {
        again = false;
        for (const auto& s : simples) {
            std::vector<Mat<F>> spans(static_cast<std::size_t>(alg->vertexCount()));
            bool any = false;
            for (const auto& f : homBasis(s, ker.object)) {
                const auto g = ker.inclusion * f;
                for (int v = 0; v < alg->vertexCount(); ++v) {
                    auto& span = spans[static_cast<std::size_t>(v)];
                    span = span.size() == 0 ? Mat<F>(g.at(v)) : hstack(span, Mat<F>(g.at(v)));
                }
                any = true;
            }
            if (!any) continue;
            for (int v = 0; v < alg->vertexCount(); ++v) {
                auto& span = spans[static_cast<std::size_t>(v)];
                if (span.size() == 0) span = zeros(m.field(), pi.source().dim(v), 0);
            }
            const auto q = quotient(generatedSubobject(pi.source(), spans));
            pi = factorThroughCokernel(q, pi);
            ker = kernel(pi);
            again = reduced = true;
        }
    }
    if (reduced) {
        out.socles.clear();
        out.lengths.clear();
        for (const auto& series : regularSeries(pi.source(), rng)) {
            out.socles.push_back(series.factorModules.front());
            out.lengths.push_back(static_cast<Index>(series.factors.size()));
        }
    }
    out.sequence = ShortExactSequence<F>{ker.object, pi.source(), m, ker.inclusion, pi};
    return out;
}

template <class F>
std::optional<Morphism<F>> extendAlong(const Morphism<F>& f, const Morphism<F>& h) {
    if (!(f.source() == h.source())) throw DomainError("shape_mismatch", "maps must share their source");
    const auto& k = h.target().field();
    const auto basis = homBasis(f.target(), h.target());
    const Vec<F> goal = flatten(h);
    if (basis.empty()) {
        if (h.isZero()) return Morphism<F>::zero(f.target(), h.target());
        return std::nullopt;
    }
    Mat<F> a = zeros(k, goal.size(), static_cast<Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) a.col(static_cast<Index>(i)) = flatten(Morphism<F>(basis[i] * f));
    auto x = solve(a, Mat<F>(goal), k);
    if (!x) return std::nullopt;
    auto g = Morphism<F>::zero(f.target(), h.target());
    for (std::size_t i = 0; i < basis.size(); ++i) g = g + (*x)(static_cast<Index>(i), 0) * basis[i];
    return g;
}

template <class K>
Representation<RationalFunction<K>> kroneckerGeneric(const AlgebraPtr<RationalFunction<K>>& alg) {
    using S = RationalFunction<K>;
    if (alg->vertexCount() != 2) throw DomainError("unsupported", "the generic module is only built for the Kronecker algebra");
    const auto& k = alg->field();
    Mat<S> one = zeros(k, 1, 1), var = zeros(k, 1, 1);
    one(0, 0) = k.one();
    var(0, 0) = k.variable();
    return Representation<S>(alg, DimVector{1, 1}, {one, var});
}

template <class K>
Representation<RationalFunction<K>> kroneckerGeneric(const Field<K>& base) {
    return kroneckerGeneric(canonicalAlgebra(Field<RationalFunction<K>>(base), {}, {}));
}

template <class F>
Index endolength(const Representation<F>& g) {
    if (g.isZero()) return 0;
    const Index e = homDim(g, g);
    if (g.totalDim() % e != 0) throw DomainError("not_brick", "the module is not a vector space over its endomorphisms");
    return g.totalDim() / e;
}

template <class F>
PegGrowth<F> pegHomGrowth(const Representation<F>& peg, const Representation<F>& s, Index rMax, Rng& rng) {
    if (defect(peg.algebra(), peg.dims()) != -1) throw DomainError("not_peg", "a peg has defect -1");
    PegGrowth<F> out;
    if (rMax < 1) return out;
    const auto chain = pruferChain(s, rMax, rng);
    const auto& k = peg.field();
    for (const auto& target : chain.modules) {
        const auto space = homSpace(peg, target);
        out.dims.push_back(space.dim());
        std::optional<Morphism<F>> witness;
        for (Index i = 0; i < space.dim() && !witness; ++i)
            if (space.basisElement(i).isInjective()) witness = space.basisElement(i);
        for (int attempt = 0; attempt < 16 && !witness && space.dim() > 0; ++attempt) {
            Vec<F> c(space.dim());
            for (Index i = 0; i < c.size(); ++i) c(i) = k.random(rng);
            auto f = space.element(c);
            if (f.isInjective()) witness = f;
        }
        out.witnesses.push_back(witness);
    }
    return out;
}

#define CANREP_INSTANTIATE(F)                                                                                       \
    template struct PruferTruncation<F>;                                                                            \
    template PruferTruncation<F> pruferChain(const Representation<F>&, Index, Rng&);                               \
    template std::vector<Representation<F>> tubeSimples(const AlgebraPtr<F>&, const TruncationParams<F>&, Rng&);   \
    template LeftApproximation<F> leftOmegaApproxTruncated(const Representation<F>&, const TruncationParams<F>&,    \
                                                           Rng&);                                                  \
    template RightApproximation<F> rightOmegaApproxTruncated(const Representation<F>&, const TruncationParams<F>&,  \
                                                             Rng&);                                                \
    template std::optional<Morphism<F>> extendAlong(const Morphism<F>&, const Morphism<F>&);                        \
    template Index endolength(const Representation<F>&);                                                            \
    template PegGrowth<F> pegHomGrowth(const Representation<F>&, const Representation<F>&, Index, Rng&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

template Representation<RationalFunction<Rational>> kroneckerGeneric(const Field<Rational>&);
template Representation<RationalFunction<Fp>> kroneckerGeneric(const Field<Fp>&);
template Representation<RationalFunction<Rational>> kroneckerGeneric(const AlgebraPtr<RationalFunction<Rational>>&);
template Representation<RationalFunction<Fp>> kroneckerGeneric(const AlgebraPtr<RationalFunction<Fp>>&);

}  // namespace canrep
