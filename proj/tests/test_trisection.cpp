#include "support.hpp"

#include "canrep/trisection.hpp"

#include <doctest.h>

using namespace canrep;
using namespace support;

namespace {

Polynomial<Fp> linear(const FpField& k, long root) {
    return Polynomial<Fp>(std::vector<Fp>{k.fromInt(-root), k.one()});
}

Polynomial<Rational> linearQ(long root) {
    return Polynomial<Rational>(std::vector<Rational>{Rational(-root), Rational(1)});
}

std::vector<AlgebraPtr<Rational>> zoo() {
    QField q;
    return {canonicalAlgebra(q, {}, {}),
            canonicalAlgebra(q, {2, 2}, {}),
            canonicalAlgebra(q, {2, 3}, {}),
            canonicalAlgebra(q, {2, 2, 2}, {Rational(2)}),
            canonicalAlgebra(q, {2, 3, 4}, {Rational(-1)}),
            canonicalAlgebra(q, {2, 2, 2, 2}, {Rational(2), Rational(3)})};
}

template <class F>
void checkRegularSimples(const std::vector<Representation<F>>& simples, Rng& rng) {
    REQUIRE_FALSE(simples.empty());
    const auto& alg = simples.front().algebra();
    for (std::size_t i = 0; i < simples.size(); ++i) {
        CHECK(defect(alg, simples[i].dims()) == 0);
        CHECK(isBrick(simples[i], rng));
        CHECK(isIsomorphic(tau(simples[i]), simples[(i + 1) % simples.size()], rng));
        CHECK(tauPeriod(simples[i], rng) == static_cast<Index>(simples.size()));
    }
}

}  // namespace

TEST_CASE("tube identifiers") {
    FpField k(5);
    auto a = parseTube(k, "arm:2");
    CHECK(a.isArm());
    CHECK(a.arm == 2);
    CHECK(a.format() == "arm:2");
    auto inf = parseTube(k, "pt:∞");
    CHECK(inf.infinite);
    CHECK(inf.format() == "pt:∞");
    CHECK(parseTube(k, "pt:inf") == inf);
    auto p = parseTube(k, "pt:t^2+2");
    CHECK(p.mu.degree() == 2);
    CHECK(p.format() == "pt:t^2+2");
    CHECK(parseTube(k, p.format()) == p);
    CHECK(parseTube(k, "pt:t-2").mu == linear(k, 2));
    CHECK_THROWS_AS(parseTube(k, "arm:x"), DomainError);
    CHECK_THROWS_AS(parseTube(k, "tube:3"), DomainError);
    CHECK_THROWS_AS(parseTube(k, "pt:t^"), DomainError);

    QField q;
    auto alg = canonicalAlgebra(q, {2, 2, 2}, {Rational(2)});
    Rng rng(1);
    CHECK_NOTHROW(validateTube(*alg, parseTube(q, "pt:t-1"), rng));
    CHECK_NOTHROW(validateTube(*alg, parseTube(q, "pt:t^2+1"), rng));
    CHECK_THROWS_AS(validateTube(*alg, parseTube(q, "pt:t"), rng), DomainError);
    CHECK_THROWS_AS(validateTube(*alg, parseTube(q, "pt:t-2"), rng), DomainError);
    CHECK_THROWS_AS(validateTube(*alg, parseTube(q, "pt:∞"), rng), DomainError);
    CHECK_THROWS_AS(validateTube(*alg, parseTube(q, "pt:t^2-1"), rng), DomainError);
    CHECK_THROWS_AS(validateTube(*alg, parseTube(q, "pt:2*t-1"), rng), DomainError);
    CHECK_THROWS_AS(validateTube(*alg, parseTube(q, "arm:4"), rng), DomainError);
    // on the Kronecker quiver no point is exceptional
    auto kron = canonicalAlgebra(q, {}, {});
    CHECK_NOTHROW(validateTube(*kron, parseTube(q, "pt:t"), rng));
    CHECK_NOTHROW(validateTube(*kron, parseTube(q, "pt:∞"), rng));
    CHECK(canonicalTube(*kron, TubeId<Rational>::atArm(2)) == TubeId<Rational>::atPoint(linearQ(0)));
}

TEST_CASE("classification by defect") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    Rng rng(2);
    const int v0 = kron->vertexIndex("0"), vc = kron->vertexIndex("c");
    CHECK(classify(projectiveAt(kron, vc), rng) == TrisectLabel::P);
    CHECK(defect(*kron, projectiveAt(kron, vc).dims()) == -1);
    CHECK(classify(simpleAt(kron, v0), rng) == TrisectLabel::Q);
    CHECK(classify(kroneckerJordan(kron, 1, k.fromInt(3)), rng) == TrisectLabel::T);
    CHECK_THROWS_AS(classify(directSum<Fp>({simpleAt(kron, v0), simpleAt(kron, vc)}).object, rng), DomainError);
    CHECK_THROWS_AS(classify(Representation<Fp>::zero(kron), rng), DomainError);
    CHECK(labelName(TrisectLabel::Q) == "Q");

    for (const auto& alg : zoo()) {
        for (int v = 0; v < alg->vertexCount(); ++v) {
            CHECK(classify(projectiveAt(alg, v), rng) == TrisectLabel::P);
            CHECK(classify(injectiveAt(alg, v), rng) == TrisectLabel::Q);
        }
        const auto hs = regularSimples(alg, TubeId<Rational>::atPoint(linearQ(5)), rng);
        CHECK(classify(hs.at(0), rng) == TrisectLabel::T);
    }
}

TEST_CASE("pegs") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    auto kp = pegs(kron);
    CHECK(kp.size() == 2);
    for (const auto& alg : zoo()) {
        auto ps = pegs(alg);
        REQUIRE_FALSE(ps.empty());
        bool sink = false;
        for (const auto& p : ps) {
            CHECK(defect(*alg, p.dims()) == -1);
            sink = sink || p == projectiveAt(alg, alg->sinkVertex());
        }
        CHECK(sink);
    }
}

TEST_CASE("split trisection") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    Rng rng(3);
    const int v0 = kron->vertexIndex("0"), vc = kron->vertexIndex("c");
    auto m = randomConjugate(directSum<Fp>({projectiveAt(kron, vc), kroneckerJordan(kron, 1, k.fromInt(0)), simpleAt(kron, v0)}).object, rng);
    auto s = splitTrisect(m, rng);
    CHECK(s.iso.isIsomorphism());
    CHECK(s.iso.isCommuting());
    CHECK(s.p.dims() == DimVector{0, 1});
    CHECK(s.t.dims() == DimVector{1, 1});
    CHECK(s.q.dims() == DimVector{1, 0});
    CHECK(homDim(s.t, s.p) == 0);
    CHECK(homDim(s.q, s.p) == 0);
    CHECK(homDim(s.q, s.t) == 0);

    auto z = splitTrisect(Representation<Fp>::zero(kron), rng);
    CHECK(z.p.isZero());
    CHECK(z.t.isZero());
    CHECK(z.q.isZero());

    auto reg = kroneckerJordan(kron, 3, k.fromInt(4));
    auto r = splitTrisect(reg, rng);
    CHECK(r.p.isZero());
    CHECK(r.q.isZero());
    CHECK(r.t.dims() == reg.dims());
}

TEST_CASE("regular simples of homogeneous tubes") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    Rng rng(4);
    auto s = regularSimples(kron, TubeId<Fp>::atPoint(linear(k, 2)), rng);
    REQUIRE(s.size() == 1);
    CHECK(s[0].dims() == DimVector{1, 1});
    CHECK(s[0].arrow(0) == mat(k, 1, 1, {1}));
    CHECK(s[0].arrow(1) == mat(k, 1, 1, {2}));
    checkRegularSimples(s, rng);

    auto inf = regularSimples(kron, TubeId<Fp>::atInfinity(), rng);
    CHECK(inf[0].arrow(0) == mat(k, 1, 1, {0}));
    CHECK(inf[0].arrow(1) == mat(k, 1, 1, {1}));
    checkRegularSimples(inf, rng);

    // a quadratic point has End a field of degree two
    auto quad = regularSimples(kron, parseTube(k, "pt:t^2+2"), rng);
    CHECK(quad[0].dims() == DimVector{2, 2});
    CHECK(homDim(quad[0], quad[0]) == 2);
    checkRegularSimples(quad, rng);

    for (const auto& alg : zoo()) {
        for (long mu : {1, 5, -7}) {
            auto hs = regularSimples(alg, TubeId<Rational>::atPoint(linearQ(mu)), rng);
            checkRegularSimples(hs, rng);
            for (int v = 0; v < alg->vertexCount(); ++v) CHECK(hs[0].dim(v) == 1);
        }
        checkRegularSimples(regularSimples(alg, TubeId<Rational>::atPoint(
                                                    Polynomial<Rational>({Rational(1), Rational(0), Rational(1)})), rng), rng);
    }
}

TEST_CASE("regular simples of exceptional tubes") {
    Rng rng(5);
    for (const auto& alg : zoo()) {
        for (int arm = 1; arm <= alg->armCount(); ++arm) {
            const int p = alg->arms()[static_cast<std::size_t>(arm - 1)];
            auto simples = regularSimples(alg, TubeId<Rational>::atArm(arm), rng);
            CHECK(static_cast<int>(simples.size()) == p);
            checkRegularSimples(simples, rng);
            // pairwise non-isomorphic, and the sum of dims is the homogeneous dims
            DimVector total(static_cast<std::size_t>(alg->vertexCount()), 0);
            for (std::size_t i = 0; i < simples.size(); ++i) {
                for (std::size_t j = i + 1; j < simples.size(); ++j) CHECK_FALSE(isIsomorphic(simples[i], simples[j], rng));
                for (int v = 0; v < alg->vertexCount(); ++v) total[static_cast<std::size_t>(v)] += simples[i].dim(v);
            }
            CHECK(total == DimVector(static_cast<std::size_t>(alg->vertexCount()), 1));
            // different tubes are Hom-orthogonal
            auto hs = regularSimples(alg, TubeId<Rational>::atPoint(linearQ(5)), rng);
            for (const auto& s : simples) {
                CHECK(homDim(s, hs[0]) == 0);
                CHECK(homDim(hs[0], s) == 0);
            }
        }
    }
}

TEST_CASE("tau periods") {
    Rng rng(6);
    QField q;
    auto alg = canonicalAlgebra(q, {2, 3, 4}, {Rational(-1)});
    for (int arm = 1; arm <= 3; ++arm)
        for (const auto& s : regularSimples(alg, TubeId<Rational>::atArm(arm), rng))
            CHECK(tauPeriod(s, rng) == alg->arms()[static_cast<std::size_t>(arm - 1)]);
    CHECK(tauPeriod(regularSimples(alg, TubeId<Rational>::atPoint(linearQ(3)), rng)[0], rng) == 1);
    CHECK_THROWS_AS(tauPeriod(projectiveAt(alg, alg->sinkVertex()), rng), DomainError);
}

TEST_CASE("uniserial modules S[r]") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    Rng rng(7);
    auto s0 = regularSimples(kron, TubeId<Fp>::atPoint(linear(k, 0)), rng)[0];
    CHECK(sBracket(s0, 1, rng) == s0);
    for (Index r = 1; r <= 4; ++r) {
        auto sr = sBracket(s0, r, rng);
        CHECK(sr.dims() == DimVector{r, r});
        CHECK(isIsomorphic(sr, kroneckerJordan(kron, r, k.zero()), rng));
    }
    CHECK_THROWS_AS(sBracket(s0, 0, rng), DomainError);

    QField q;
    auto c22 = canonicalAlgebra(q, {2, 2}, {});
    auto arm = regularSimples(c22, TubeId<Rational>::atArm(1), rng);
    auto s2 = sBracket(arm[0], 2, rng);
    for (int v = 0; v < c22->vertexCount(); ++v) CHECK(s2.dim(v) == arm[0].dim(v) + arm[1].dim(v));
    CHECK(isIndecomposable(s2, rng));
    CHECK(defect(*c22, s2.dims()) == 0);

    // S[r-1] sits inside S[r] with quotient tau^-(r-1) S
    auto alg = canonicalAlgebra(q, {2, 3}, {});
    auto simples = regularSimples(alg, TubeId<Rational>::atArm(2), rng);
    for (std::size_t i = 0; i < simples.size(); ++i) {
        auto top = simples[i];
        for (Index r = 2; r <= 4; ++r) {
            top = tauInverse(top);
            auto big = sBracket(simples[i], r, rng);
            auto small = sBracket(simples[i], r - 1, rng);
            CHECK(isIndecomposable(big, rng));
            bool found = false;
            for (const auto& f : homBasis(small, big)) {
                if (!f.isInjective()) continue;
                found = isIsomorphic(cokernel(f).object, top, rng).has_value();
                if (found) break;
            }
            CHECK(found);
        }
    }
    auto pos = sBracket(alg, TubePosition<Rational>{TubeId<Rational>::atArm(2), 1, 3}, rng);
    CHECK(isIsomorphic(pos, sBracket(simples[1], 3, rng), rng));
}

TEST_CASE("regular composition series") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    Rng rng(8);
    auto series = regularSeries(kroneckerJordan(kron, 3, k.zero()), rng);
    REQUIRE(series.size() == 1);
    CHECK(series[0].tube == TubeId<Fp>::atPoint(linear(k, 0)));
    CHECK(series[0].factors == std::vector<Index>{0, 0, 0});

    auto s = regularSimples(kron, TubeId<Fp>::atInfinity(), rng)[0];
    auto single = regularSeries(s, rng);
    REQUIRE(single.size() == 1);
    CHECK(single[0].factors == std::vector<Index>{0});
    CHECK(single[0].tube.infinite);

    QField q;
    auto c22 = canonicalAlgebra(q, {2, 2}, {});
    auto arm = regularSimples(c22, TubeId<Rational>::atArm(2), rng);
    auto s2 = sBracket(arm[0], 2, rng);
    auto rs = regularSeries(s2, rng);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].tube == TubeId<Rational>::atArm(2));
    // factors S, tau^- S; in a tube of rank two tau^- S = tau S
    CHECK(rs[0].factors == std::vector<Index>{0, 1});

    // dims of factors add up
    auto mixed = directSum<Rational>({s2, regularSimples(c22, TubeId<Rational>::atPoint(linearQ(3)), rng)[0]}).object;
    DimVector total(static_cast<std::size_t>(c22->vertexCount()), 0);
    for (const auto& part : regularSeries(mixed, rng))
        for (const auto& f : part.factorModules)
            for (int v = 0; v < c22->vertexCount(); ++v) total[static_cast<std::size_t>(v)] += f.dim(v);
    CHECK(total == mixed.dims());
    CHECK_THROWS_AS(regularSeries(projectiveAt(c22, 0), rng), DomainError);
}

TEST_CASE("tube membership and partitions") {
    QField q;
    auto kron = canonicalAlgebra(q, {}, {});
    Rng rng(9);
    auto s0 = kroneckerJordan(kron, 2, Rational(0));
    auto s1 = kroneckerJordan(kron, 1, Rational(1));
    CHECK(tubeOf(s0, rng) == TubeId<Rational>::atPoint(linearQ(0)));
    auto quad = kroneckerPair(kron, identity(q, 2), companionMatrix(Polynomial<Rational>({Rational(1), Rational(0), Rational(1)}), q));
    CHECK(tubeOf(quad, rng).mu.degree() == 2);

    auto m = randomConjugate(directSum<Rational>({s0, s1}).object, rng);
    auto part = partitionByTubes(m, {TubeId<Rational>::atPoint(linearQ(0))}, rng);
    CHECK(part.iso.isIsomorphism());
    CHECK(isIsomorphic(part.inside, s0, rng));
    CHECK(isIsomorphic(part.outside, s1, rng));
    CHECK(homDim(part.inside, part.outside) == 0);
    CHECK(homDim(part.outside, part.inside) == 0);

    auto all = partitionByTubes(m, {TubeId<Rational>::atPoint(linearQ(0)), TubeId<Rational>::atPoint(linearQ(1))}, rng);
    CHECK(all.outside.isZero());
    CHECK(all.inside.dims() == m.dims());
    auto none = partitionByTubes(Representation<Rational>::zero(kron), {}, rng);
    CHECK(none.inside.isZero());
    CHECK(none.outside.isZero());
    CHECK_THROWS_AS(partitionByTubes(projectiveAt(kron, 0), {}, rng), DomainError);

    // exceptional tubes on C(2,2,2)
    auto alg = canonicalAlgebra(q, {2, 2, 2}, {Rational(2)});
    for (int arm = 1; arm <= 3; ++arm)
        for (const auto& s : regularSimples(alg, TubeId<Rational>::atArm(arm), rng)) CHECK(tubeOf(s, rng) == TubeId<Rational>::atArm(arm));
}

TEST_CASE("torsion part") {
    FpField k(5);
    auto kron = canonicalAlgebra(k, {}, {});
    Rng rng(10);
    const int v0 = kron->vertexIndex("0"), vc = kron->vertexIndex("c");
    auto reg = kroneckerJordan(kron, 2, k.fromInt(1));
    CHECK(torsionPart(reg, rng).object.dims() == reg.dims());
    CHECK(torsionPart(projectiveAt(kron, vc), rng).object.isZero());

    auto m = randomConjugate(directSum<Fp>({projectiveAt(kron, vc), kroneckerJordan(kron, 1, k.zero()), simpleAt(kron, v0)}).object, rng);
    auto tm = torsionPart(m, rng);
    CHECK(tm.object.dims() == DimVector{2, 1});
    CHECK(tm.inclusion.isInjective());
    // the quotient has no regular part
    auto rest = quotient(tm).object;
    CHECK(splitTrisect(rest, rng).t.isZero());
    CHECK(splitTrisect(rest, rng).q.isZero());

    // an extension of S(0) by S_0 is generated by regular modules
    auto space = ext1Space(simpleAt(kron, v0), kroneckerJordan(kron, 1, k.zero()));
    REQUIRE(space.dim() > 0);
    auto e = realizeExtension(space.basisElement(0)).b;
    CHECK(torsionPart(e, rng).object.dims() == e.dims());
    // S(0) is a quotient of S_0
    bool onto = false;
    for (const auto& f : homBasis(kroneckerJordan(kron, 1, k.zero()), simpleAt(kron, v0))) onto = onto || f.isSurjective();
    CHECK(onto);
}

TEST_CASE("Hom and Ext vanishing between p, t and q") {
    Rng rng(11);
    QField q;
    for (const auto& alg : {canonicalAlgebra(q, {}, {}), canonicalAlgebra(q, {2, 2, 2}, {Rational(2)})}) {
        std::vector<Representation<Rational>> p, t, qq;
        for (int v = 0; v < alg->vertexCount(); ++v) {
            p.push_back(projectiveAt(alg, v));
            p.push_back(tauInverse(projectiveAt(alg, v)));
            qq.push_back(injectiveAt(alg, v));
            qq.push_back(tau(injectiveAt(alg, v)));
        }
        for (const auto& s : regularSimples(alg, TubeId<Rational>::atPoint(linearQ(3)), rng)) t.push_back(sBracket(s, 2, rng));
        for (int arm = 1; arm <= alg->armCount(); ++arm)
            for (const auto& s : regularSimples(alg, TubeId<Rational>::atArm(arm), rng)) t.push_back(s);
        auto drop = [&](std::vector<Representation<Rational>>& v) {
            std::erase_if(v, [](const auto& x) { return x.isZero(); });
        };
        drop(p);
        drop(qq);
        for (const auto& x : p) CHECK(classify(x, rng) == TrisectLabel::P);
        for (const auto& x : t) CHECK(classify(x, rng) == TrisectLabel::T);
        for (const auto& x : qq) CHECK(classify(x, rng) == TrisectLabel::Q);
        for (const auto& y : p) {
            for (const auto& x : t) CHECK(homDim(x, y) == 0);
            for (const auto& x : qq) CHECK(homDim(x, y) == 0);
        }
        for (const auto& x : qq)
            for (const auto& y : t) CHECK(homDim(x, y) == 0);
        for (const auto& y : qq) {
            for (const auto& x : p) CHECK(ext1Dim(x, y) == 0);
            for (const auto& x : t) CHECK(ext1Dim(x, y) == 0);
        }
    }
}
