#include "canrep/algebra.hpp"
#include "canrep/factor.hpp"

#include <doctest.h>

using namespace canrep;

namespace {

DimVector dimsOf(const Algebra<Rational>& alg, std::initializer_list<std::pair<const char*, Index>> entries) {
    DimVector d(static_cast<std::size_t>(alg.vertexCount()), 0);
    for (const auto& [label, value] : entries) d[static_cast<std::size_t>(alg.vertexIndex(label))] = value;
    return d;
}

}  // namespace

TEST_CASE("canonical algebra shapes") {
    FpField f5(5);
    auto kron = canonicalAlgebra(f5, {}, {});
    CHECK(kron->vertexCount() == 2);
    CHECK(kron->arrowCount() == 2);
    CHECK(kron->relations().empty());

    QField q;
    auto c222 = canonicalAlgebra(q, {2, 2, 2}, {Rational(2)});
    CHECK(c222->vertexCount() == 5);
    CHECK(c222->arrowCount() == 6);
    CHECK(c222->relations().size() == 1);

    auto c22 = canonicalAlgebra(q, {2, 2}, {});
    CHECK(c22->vertexCount() == 4);
    CHECK(c22->arrowCount() == 4);
    CHECK(c22->relations().empty());

    auto c2 = canonicalAlgebra(q, {3}, {});
    CHECK(c2->vertexCount() == 4);
    CHECK(c2->arrowCount() == 4);
}

TEST_CASE("canonical algebra rejects bad input") {
    QField q;
    CHECK_THROWS_AS(canonicalAlgebra(q, {2, 1}, {}), DomainError);
    CHECK_THROWS_AS(canonicalAlgebra(q, {2, 2, 2}, {}), DomainError);
    CHECK_THROWS_AS(canonicalAlgebra(q, {2, 2, 2}, {Rational(0)}), DomainError);
    CHECK_THROWS_AS(canonicalAlgebra(q, {2, 2, 2}, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(canonicalAlgebra(q, {2, 2, 2, 2}, {Rational(3), Rational(3)}), DomainError);
    CHECK_NOTHROW(canonicalAlgebra(q, {2, 2, 2, 2}, {Rational(3), Rational(-1)}));
}

TEST_CASE("opposite algebra round trip") {
    QField q;
    auto alg = canonicalAlgebra(q, {2, 3, 2}, {Rational(5)});
    auto op = alg->op();
    CHECK(op->isOpposite());
    CHECK(op->op().get() == alg.get());
    CHECK(op->sourceVertex() == alg->sinkVertex());
    for (int a = 0; a < alg->vertexCount(); ++a)
        for (int b = 0; b < alg->vertexCount(); ++b) CHECK(op->pathDim(b, a) == alg->pathDim(a, b));
}

TEST_CASE("path spaces: relation drops one dimension") {
    QField q;
    auto alg = canonicalAlgebra(q, {2, 2, 2}, {Rational(2)});
    const int src = alg->sourceVertex(), snk = alg->sinkVertex();
    CHECK(alg->paths(src, snk).monomials.size() == 3);
    CHECK(alg->pathDim(src, snk) == 2);
    // x3 reduces to x2 - 2 x1
    Path x3{src, snk, {alg->armArrow(3, 1), alg->armArrow(3, 2)}};
    Vec<Rational> coords = alg->reduce(src, snk, x3.arrows);
    Vec<Rational> x1 = alg->reduce(src, snk, {alg->armArrow(1, 1), alg->armArrow(1, 2)});
    Vec<Rational> x2 = alg->reduce(src, snk, {alg->armArrow(2, 1), alg->armArrow(2, 2)});
    CHECK(sameMatrix<Rational>(coords, x2 - Rational(2) * x1));
}

TEST_CASE("cartan matrix and euler form") {
    FpField f5(5);
    auto kron = canonicalAlgebra(f5, {}, {});
    IntMat c = cartanMatrix(*kron);
    CHECK(c(0, 0) == 1);
    CHECK(c(0, 1) == 2);
    CHECK(c(1, 0) == 0);
    CHECK(c(1, 1) == 1);

    QField q;
    auto k = canonicalAlgebra(q, {}, {});
    DimVector ones = dimsOf(*k, {{"0", 1}, {"c", 1}});
    DimVector pc = dimsOf(*k, {{"c", 1}});
    CHECK(eulerForm(*k, ones, pc) == -1);
    CHECK(eulerForm(*k, ones, ones) == 0);

    // hereditary formula on C(2,2)
    auto c22 = canonicalAlgebra(q, {2, 2}, {});
    Rng rng(3);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        DimVector d(4), e(4);
        for (auto& x : d) x = small(rng);
        for (auto& x : e) x = small(rng);
        long long expected = 0;
        for (int v = 0; v < 4; ++v) expected += d[static_cast<std::size_t>(v)] * e[static_cast<std::size_t>(v)];
        for (const auto& a : c22->arrows()) expected -= d[static_cast<std::size_t>(a.source)] * e[static_cast<std::size_t>(a.target)];
        CHECK(eulerForm(*c22, d, e) == expected);
    }
    // <dim P(i), e> = e_i
    auto c222 = canonicalAlgebra(q, {2, 2, 2}, {Rational(2)});
    IntMat cart = cartanMatrix(*c222);
    CHECK(cart(c222->sourceVertex(), c222->sinkVertex()) == 2);
    for (int i = 0; i < 5; ++i) {
        DimVector p(5), e(5);
        for (int j = 0; j < 5; ++j) p[static_cast<std::size_t>(j)] = cart(i, j);
        for (auto& x : e) x = small(rng);
        CHECK(eulerForm(*c222, p, e) == e[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("defect form") {
    QField q;
    auto k = canonicalAlgebra(q, {}, {});
    CHECK(defect(*k, dimsOf(*k, {{"c", 1}})) == -1);
    CHECK(defect(*k, dimsOf(*k, {{"0", 1}})) == 1);
    CHECK(defect(*k, dimsOf(*k, {{"0", 1}, {"c", 1}})) == 0);
    auto c = canonicalAlgebra(q, {2, 3, 4}, {Rational(7)});
    CHECK(defect(*c, DimVector(static_cast<std::size_t>(c->vertexCount()), 1)) == 0);
    Rng rng(11);
    std::uniform_int_distribution<int> small(0, 5);
    for (int trial = 0; trial < 30; ++trial) {
        DimVector d(static_cast<std::size_t>(c->vertexCount())), e(d.size()), s(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = small(rng);
            e[i] = small(rng);
            s[i] = d[i] + e[i];
        }
        CHECK(defect(*c, s) == defect(*c, d) + defect(*c, e));
    }
    CHECK(defectFromMultiplicities(3, 1, 1, 2) == 5);
    CHECK(defectFromMultiplicities(3, 1, 2, 1) == 1);
}

TEST_CASE("deterministic construction") {
    FpField f7(7);
    auto a = canonicalAlgebra(f7, {2, 2, 3}, {f7.fromInt(3)});
    auto b = canonicalAlgebra(f7, {2, 2, 3}, {f7.fromInt(3)});
    CHECK(a->vertexLabels() == b->vertexLabels());
    CHECK(cartanMatrix(*a) == cartanMatrix(*b));
    for (int x = 0; x < a->vertexCount(); ++x)
        for (int y = 0; y < a->vertexCount(); ++y)
            CHECK(sameMatrix(a->paths(x, y).reduction, b->paths(x, y).reduction));
}

TEST_CASE("polynomial factoring") {
    Rng rng(5);
    FpField f5(5);
    auto poly = [&](std::vector<long> c) {
        std::vector<Fp> v;
        for (long x : c) v.push_back(f5.fromInt(x));
        return Polynomial<Fp>(v);
    };
    CHECK(*isIrreducible(poly({2, 0, 1}), f5, rng));       // t^2 + 2
    CHECK_FALSE(*isIrreducible(poly({1, 0, 1}), f5, rng)); // t^2 + 1 = (t-2)(t-3)
    auto factors = *irreducibleFactors(poly({4, 0, 0, 0, 1}), f5, rng);  // t^4 - 1
    CHECK(factors.size() == 4);
    CHECK(monicIrreducibles(f5, 1).size() == 5);
    CHECK(monicIrreducibles(f5, 2).size() == 10);
    CHECK(monicIrreducibles(FpField(2), 3).size() == 2);
    CHECK(monicIrreducibles(FpField(3), 4).size() == 18);

    // random products of known irreducibles
    for (int trial = 0; trial < 30; ++trial) {
        auto irr2 = monicIrreducibles(f5, 2);
        auto a = irr2[static_cast<std::size_t>(trial % 10)];
        auto b = irr2[static_cast<std::size_t>((trial * 3 + 1) % 10)];
        auto l = poly({trial % 5, 1});
        auto p = a * a * b * l;
        auto sq = *squarefreePart(p, f5);
        CHECK(sq == (a == b ? a * l : a * b * l));
        auto fs = *irreducibleFactors(sq, f5, rng);
        Polynomial<Fp> prod(f5.one());
        for (auto& f : fs) {
            CHECK(*isIrreducible(f, f5, rng));
            prod = prod * f;
        }
        CHECK(prod == sq);
    }

    QField q;
    auto qp = [&](std::vector<long> c) {
        std::vector<Rational> v;
        for (long x : c) v.push_back(Rational(x));
        return Polynomial<Rational>(v);
    };
    CHECK(*isIrreducible(qp({1, 0, 1}), q, rng));
    CHECK_FALSE(*isIrreducible(qp({-4, 0, 1}), q, rng));
    CHECK(*isIrreducible(qp({-2, 0, 0, 1}), q, rng));
    CHECK_FALSE(isIrreducible(qp({1, 0, 0, 0, 1}), q, rng).has_value());
    auto qf = *irreducibleFactors(qp({-6, 11, -6, 1}), q, rng);
    CHECK(qf.size() == 3);
    CHECK(*squarefreePart(qp({0, 0, 1}), q) == qp({0, 1}));
}
