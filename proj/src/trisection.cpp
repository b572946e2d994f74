#include "canrep/trisection.hpp"

#include "canrep/factor.hpp"

#include <type_traits>

namespace canrep {

std::string labelName(TrisectLabel label) {
    switch (label) {
        case TrisectLabel::P: return "P";
        case TrisectLabel::T: return "T";
        case TrisectLabel::Q: return "Q";
    }
    return "?";
}

TrisectLabel labelOfDefect(long long defect) {
    return defect < 0 ? TrisectLabel::P : (defect == 0 ? TrisectLabel::T : TrisectLabel::Q);
}

// ---------------------------------------------------------------- tube ids

template <class F>
std::string TubeId<F>::format() const {
    if (isArm()) return "arm:" + std::to_string(arm);
    if (infinite) return "pt:∞";
    return "pt:" + mu.toString("t");
}

template <class F>
TubeId<F> parseTube(const Field<F>& k, const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("invalid_tube", "expected arm:<i> or pt:<point>, got " + text);
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "arm") {
        try {
            std::size_t used = 0;
            const int i = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(rest);
            return TubeId<F>::atArm(i);
        } catch (const std::logic_error&) {
            throw DomainError("invalid_tube", "bad arm index " + rest);
        }
    }
    if (kind != "pt") throw DomainError("invalid_tube", "unknown tube kind " + kind);
    if (rest == "∞" || rest == "inf" || rest == "infinity") return TubeId<F>::atInfinity();
    if constexpr (std::is_same_v<F, Rational> || std::is_same_v<F, Fp>) {
        try {
            return TubeId<F>::atPoint(parsePolynomial(k, rest));
        } catch (const ParseError& e) {
            throw DomainError("invalid_tube", e.what());
        }
    } else {
        (void)k;
        throw DomainError("invalid_tube", "finite points are not supported over function fields");
    }
}

template <class F>
TubeId<F> specialPoint(const Algebra<F>& alg, int arm) {
    const auto& k = alg.field();
    if (arm == 1) return TubeId<F>::atInfinity();
    const F root = arm == 2 ? k.zero() : alg.armParam(arm);
    return TubeId<F>::atPoint(Polynomial<F>(std::vector<F>{k.zero() - root, k.one()}));
}

template <class F>
TubeId<F> canonicalTube(const Algebra<F>& alg, const TubeId<F>& tube) {
    if (tube.isArm() && tube.arm >= 1 && tube.arm <= alg.armCount() && alg.arms()[static_cast<std::size_t>(tube.arm - 1)] == 1)
        return specialPoint(alg, tube.arm);
    return tube;
}

template <class F>
void validateTube(const Algebra<F>& alg, const TubeId<F>& tube, Rng& rng) {
    if (tube.isArm()) {
        if (tube.arm < 1 || tube.arm > alg.armCount())
            throw DomainError("invalid_tube", "arm index out of range: " + std::to_string(tube.arm));
        return;
    }
    if (!tube.infinite) {
        const auto& mu = tube.mu;
        if (mu.degree() < 1 || !isZero(mu.leading() - alg.field().one()))
            throw DomainError("invalid_tube", "point must be a monic polynomial of positive degree");
        auto irreducible = isIrreducible(mu, alg.field(), rng);
        if (!irreducible) throw DomainError("undecidable", "cannot decide irreducibility of " + mu.toString());
        if (!*irreducible) throw DomainError("invalid_tube", "point polynomial is reducible: " + mu.toString());
    }
    for (int arm = 1; arm <= alg.armCount(); ++arm)
        if (alg.arms()[static_cast<std::size_t>(arm - 1)] >= 2 && specialPoint(alg, arm) == tube)
            throw DomainError("invalid_tube", tube.format() + " is the exceptional point of arm " + std::to_string(arm));
}

// ---------------------------------------------------------------- classification

template <class F>
TrisectLabel classifyDims(const Algebra<F>& alg, const DimVector& dims) {
    return labelOfDefect(defect(alg, dims));
}

template <class F>
TrisectLabel classify(const Representation<F>& m, Rng& rng) {
    if (m.isZero() || !isIndecomposable(m, rng)) throw DomainError("decomposable", "classify needs an indecomposable module");
    return classifyDims(m.algebra(), m.dims());
}

template <class F>
std::vector<Representation<F>> pegs(const AlgebraPtr<F>& alg) {
    std::vector<Representation<F>> out;
    for (int v = 0; v < alg->vertexCount(); ++v) {
        auto p = projectiveAt(alg, v);
        if (defect(*alg, p.dims()) == -1) out.push_back(std::move(p));
    }
    return out;
}

namespace {

/// (+) groups -> m assembled from the decomposition inclusions.
template <class F>
std::pair<std::vector<Representation<F>>, Morphism<F>> regroup(const Representation<F>& m, const Decomposition<F>& d,
                                                               const std::vector<int>& group, int groups) {
    const auto& alg = m.algebraPtr();
    std::vector<Representation<F>> objects;
    std::vector<Morphism<F>> maps;
    for (int g = 0; g < groups; ++g) {
        std::vector<Representation<F>> parts;
        std::vector<Morphism<F>> incl;
        for (std::size_t i = 0; i < d.parts.size(); ++i)
            if (group[i] == g) {
                parts.push_back(d.parts[i]);
                incl.push_back(d.inclusions[i]);
            }
        auto sum = directSum(alg, parts);
        maps.push_back(rowMorphism(sum, incl, m));
        objects.push_back(sum.object);
    }
    auto total = directSum(alg, objects);
    return {objects, rowMorphism(total, maps, m)};
}

template <class F>
Mat<F> armPath(const Representation<F>& x, int arm) {
    const auto& alg = x.algebra();
    std::vector<int> arrows;
    for (int j = 1; j <= alg.arms()[static_cast<std::size_t>(arm - 1)]; ++j) arrows.push_back(alg.armArrow(arm, j));
    return x.pathMatrix(alg.sourceVertex(), arrows);
}

/// Module with d-dimensional spaces, identity arm maps except the last arrow of
/// arm i, which is last[i - 1]; vertices inside `emptyArm` are zero.
template <class F>
Representation<F> armModule(const AlgebraPtr<F>& alg, Index d, const std::vector<Mat<F>>& last, int emptyArm) {
    const auto& k = alg->field();
    DimVector dims(static_cast<std::size_t>(alg->vertexCount()), d);
    if (emptyArm > 0)
        for (int j = 1; j < alg->arms()[static_cast<std::size_t>(emptyArm - 1)]; ++j)
            dims[static_cast<std::size_t>(alg->armVertex(emptyArm, j))] = 0;
    std::vector<Mat<F>> arrows(static_cast<std::size_t>(alg->arrowCount()));
    for (int arm = 1; arm <= alg->armCount(); ++arm) {
        const int p = alg->arms()[static_cast<std::size_t>(arm - 1)];
        for (int j = 1; j <= p; ++j) {
            const int a = alg->armArrow(arm, j);
            const auto& arr = alg->arrow(a);
            const Index rows = dims[static_cast<std::size_t>(arr.target)], cols = dims[static_cast<std::size_t>(arr.source)];
            if (arm == emptyArm && p > 1) arrows[static_cast<std::size_t>(a)] = zeros(k, rows, cols);
            else arrows[static_cast<std::size_t>(a)] = j == p ? last[static_cast<std::size_t>(arm - 1)] : identity(k, d);
        }
    }
    return Representation<F>(alg, std::move(dims), std::move(arrows));
}

/// The homogeneous module at a point: last arrows I, C, C - lambda_i I (or 0, I, I at infinity).
template <class F>
Representation<F> pointModule(const AlgebraPtr<F>& alg, const TubeId<F>& point, int emptyArm) {
    const auto& k = alg->field();
    std::vector<Mat<F>> last;
    if (point.infinite) {
        for (int arm = 1; arm <= alg->armCount(); ++arm) last.push_back(arm == 1 ? zeros(k, 1, 1) : identity(k, 1));
        return armModule(alg, 1, last, emptyArm);
    }
    const Mat<F> c = companionMatrix(point.mu, k);
    const Index d = c.rows();
    for (int arm = 1; arm <= alg->armCount(); ++arm) {
        if (arm == 1) last.push_back(identity(k, d));
        else if (arm == 2) last.push_back(c);
        else last.push_back(c - alg->armParam(arm) * identity(k, d));
    }
    return armModule(alg, d, last, emptyArm);
}

template <class F>
bool hasMapFrom(const Representation<F>& s, const Representation<F>& x) {
    return homDim(s, x) > 0;
}

}  // namespace

template <class F>
TrisectSplit<F> splitTrisect(const Representation<F>& m, Rng& rng) {
    auto d = decompose(m, rng);
    std::vector<int> group;
    for (const auto& part : d.parts) group.push_back(static_cast<int>(classifyDims(m.algebra(), part.dims())));
    auto [objects, iso] = regroup(m, d, group, 3);
    return {objects[0], objects[1], objects[2], iso};
}

// ---------------------------------------------------------------- tubes

template <class F>
std::vector<Representation<F>> regularSimples(const AlgebraPtr<F>& alg, const TubeId<F>& tube, Rng& rng) {
    validateTube(*alg, tube, rng);
    const auto id = canonicalTube(*alg, tube);
    if (!id.isArm()) return {pointModule(alg, id, 0)};
    const int arm = id.arm;
    const int p = alg->arms()[static_cast<std::size_t>(arm - 1)];
    std::vector<Representation<F>> candidates{pointModule(alg, specialPoint(*alg, arm), arm)};
    for (int j = 1; j < p; ++j) candidates.push_back(simpleAt(alg, alg->armVertex(arm, j)));
    std::vector<Representation<F>> orbit{candidates[0]};
    std::vector<bool> used(candidates.size(), false);
    used[0] = true;
    for (int step = 1; step < p; ++step) {
        const auto next = tau(orbit.back());
        bool found = false;
        for (std::size_t c = 0; c < candidates.size() && !found; ++c) {
            if (used[c] || candidates[c].dims() != next.dims() || !isIsomorphic(candidates[c], next, rng)) continue;
            used[c] = true;
            orbit.push_back(candidates[c]);
            found = true;
        }
        if (!found) throw std::logic_error("internal: arm tube orbit does not close");
    }
    return orbit;
}

template <class F>
Index tauPeriod(const Representation<F>& s, Rng& rng) {
    if (s.isZero() || defect(s.algebra(), s.dims()) != 0 || !isBrick(s, rng))
        throw DomainError("not_regular", "tauPeriod needs a regular simple module");
    auto cur = s;
    for (Index r = 1; r <= 64; ++r) {
        cur = tau(cur);
        if (cur.dims() == s.dims() && isIsomorphic(cur, s, rng)) return r;
    }
    throw DomainError("not_regular", "no tau-period up to 64");
}

template <class F>
Representation<F> sBracket(const Representation<F>& s, Index r, Rng& rng) {
    (void)rng;
    if (r < 1) throw DomainError("invalid_length", "regular length must be positive");
    auto cur = s;
    auto top = s;
    for (Index k = 1; k < r; ++k) {
        top = tauInverse(top);
        auto space = ext1Space(top, cur);
        if (space.dim() == 0) throw DomainError("not_regular", "no extension continues the uniserial chain");
        cur = realizeExtension(space.basisElement(0)).b;
    }
    return cur;
}

template <class F>
Representation<F> sBracket(const AlgebraPtr<F>& alg, const TubePosition<F>& pos, Rng& rng) {
    const auto simples = regularSimples(alg, pos.tube, rng);
    if (pos.socle < 0 || pos.socle >= static_cast<Index>(simples.size()))
        throw DomainError("invalid_tube", "socle index out of range");
    return sBracket(simples[static_cast<std::size_t>(pos.socle)], pos.rlen, rng);
}

template <class F>
TubeId<F> tubeOf(const Representation<F>& x, Rng& rng) {
    const auto& alg = x.algebra();
    const auto& ptr = x.algebraPtr();
    if (x.isZero() || defect(alg, x.dims()) != 0) throw DomainError("not_regular", "tubeOf needs a regular module");
    for (int arm = 1; arm <= alg.armCount(); ++arm) {
        if (alg.arms()[static_cast<std::size_t>(arm - 1)] < 2) continue;
        for (const auto& s : regularSimples(ptr, TubeId<F>::atArm(arm), rng))
            if (hasMapFrom(s, x)) return TubeId<F>::atArm(arm);
    }
    const auto inf = TubeId<F>::atInfinity();
    if (hasMapFrom(pointModule(ptr, inf, 0), x)) return inf;
    const Mat<F> a1 = armPath(x, 1);
    auto inv = a1.rows() == a1.cols() ? inverse(a1, x.field()) : std::nullopt;
    if (!inv) throw DomainError("not_regular", "module lies in no tube");
    const auto minpoly = minimalPolynomial(Mat<F>(*inv * armPath(x, 2)), x.field());
    auto sq = squarefreePart(minpoly, x.field());
    if (!sq) throw DomainError("undecidable", "cannot factor " + minpoly.toString());
    auto factors = irreducibleFactors(*sq, x.field(), rng);
    if (!factors) throw DomainError("undecidable", "cannot factor " + sq->toString());
    for (const auto& f : *factors) {
        const auto id = TubeId<F>::atPoint(f);
        if (hasMapFrom(pointModule(ptr, id, 0), x)) return id;
    }
    throw DomainError("not_regular", "module lies in no tube");
}

template <class F>
std::vector<RegularSeries<F>> regularSeries(const Representation<F>& m, Rng& rng) {
    std::vector<RegularSeries<F>> out;
    if (m.isZero()) return out;
    auto d = decompose(m, rng);
    for (const auto& part : d.parts) {
        if (defect(m.algebra(), part.dims()) != 0) throw DomainError("not_regular", "summand with nonzero defect");
        RegularSeries<F> series{part, tubeOf(part, rng), {}, {}};
        const auto simples = regularSimples(m.algebraPtr(), series.tube, rng);
        auto cur = part;
        while (!cur.isZero()) {
            Index which = -1;
            for (std::size_t j = 0; j < simples.size() && which < 0; ++j)
                if (hasMapFrom(simples[j], cur)) which = static_cast<Index>(j);
            if (which < 0) throw std::logic_error("internal: regular socle not found");
            const auto& s = simples[static_cast<std::size_t>(which)];
            std::vector<Mat<F>> spans;
            for (int v = 0; v < m.algebra().vertexCount(); ++v) spans.push_back(zeros(m.field(), cur.dim(v), 0));
            for (const auto& f : homBasis(s, cur))
                for (int v = 0; v < m.algebra().vertexCount(); ++v) spans[static_cast<std::size_t>(v)] = hstack(spans[static_cast<std::size_t>(v)], f.at(v));
            auto socle = generatedSubobject(cur, spans);
            if (socle.object.dims() != s.dims()) throw std::logic_error("internal: regular socle is not simple");
            series.factors.push_back(which);
            series.factorModules.push_back(s);
            cur = quotient(socle).object;
        }
        out.push_back(std::move(series));
    }
    return out;
}

template <class F>
TubePartition<F> partitionByTubes(const Representation<F>& m, const std::vector<TubeId<F>>& tubes, Rng& rng) {
    std::vector<TubeId<F>> wanted;
    for (const auto& t : tubes) {
        validateTube(m.algebra(), t, rng);
        wanted.push_back(canonicalTube(m.algebra(), t));
    }
    auto d = decompose(m, rng);
    std::vector<int> group;
    for (const auto& part : d.parts) {
        if (defect(m.algebra(), part.dims()) != 0) throw DomainError("not_regular", "summand with nonzero defect");
        const auto id = tubeOf(part, rng);
        bool inside = false;
        for (const auto& w : wanted) inside = inside || w == id;
        group.push_back(inside ? 0 : 1);
    }
    auto [objects, iso] = regroup(m, d, group, 2);
    return {objects[0], objects[1], iso};
}

template <class F>
Subobject<F> torsionPart(const Representation<F>& m, Rng& rng) {
    // every module in q is a quotient of one in add t, and Hom(t, p) = 0
    auto split = splitTrisect(m, rng);
    auto sum = directSum<F>({split.p, split.t, split.q});
    std::vector<Mat<F>> spans;
    const auto regular = split.iso * sum.injections[1];
    const auto injective = split.iso * sum.injections[2];
    for (int v = 0; v < m.algebra().vertexCount(); ++v) spans.push_back(hstack(regular.at(v), injective.at(v)));
    return generatedSubobject(m, spans);
}

#define CANREP_INSTANTIATE(F)                                                                               \
    template struct TubeId<F>;                                                                              \
    template TubeId<F> parseTube(const Field<F>&, const std::string&);                                      \
    template void validateTube(const Algebra<F>&, const TubeId<F>&, Rng&);                                  \
    template TubeId<F> canonicalTube(const Algebra<F>&, const TubeId<F>&);                                  \
    template TubeId<F> specialPoint(const Algebra<F>&, int);                                                \
    template TrisectLabel classifyDims(const Algebra<F>&, const DimVector&);                                \
    template TrisectLabel classify(const Representation<F>&, Rng&);                                         \
    template std::vector<Representation<F>> pegs(const AlgebraPtr<F>&);                                     \
    template TrisectSplit<F> splitTrisect(const Representation<F>&, Rng&);                                  \
    template std::vector<Representation<F>> regularSimples(const AlgebraPtr<F>&, const TubeId<F>&, Rng&);   \
    template Index tauPeriod(const Representation<F>&, Rng&);                                               \
    template Representation<F> sBracket(const Representation<F>&, Index, Rng&);                             \
    template Representation<F> sBracket(const AlgebraPtr<F>&, const TubePosition<F>&, Rng&);                \
    template TubeId<F> tubeOf(const Representation<F>&, Rng&);                                              \
    template std::vector<RegularSeries<F>> regularSeries(const Representation<F>&, Rng&);                   \
    template TubePartition<F> partitionByTubes(const Representation<F>&, const std::vector<TubeId<F>>&, Rng&); \
    template Subobject<F> torsionPart(const Representation<F>&, Rng&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
