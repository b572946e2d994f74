#include "support.hpp"

#include "canrep/io.hpp"
#include "canrep/trisection.hpp"

#include <doctest.h>

using namespace canrep;
using namespace support;

namespace {

template <class F>
void checkRoundTrip(const Representation<F>& m) {
    const auto text = representationJson(m).dump();
    const auto j = Json::parse(text);
    const auto spec = parseAlgebraSpec(j.at("algebra"));
    const auto back = parseRepresentation(m.algebraPtr(), j);
    CHECK(back == m);
    CHECK(back.satisfiesRelations());
    // a fresh algebra built from the written spec reads the same data
    const auto rebuilt = buildAlgebra(m.field(), spec);
    const auto again = parseRepresentation(rebuilt, j);
    CHECK(representationJson(again).dump() == text);
}

}  // namespace

TEST_CASE("field and algebra specs") {
    for (const char* text : {R"({"kind":"Q"})", R"({"kind":"Fp","p":5})", R"({"kind":"Qt"})", R"({"kind":"Fpt","p":7})"}) {
        const auto spec = parseFieldSpec(Json::parse(text));
        CHECK(parseFieldSpec(fieldSpecJson(spec)) == spec);
    }
    CHECK_THROWS_AS(parseFieldSpec(Json::parse(R"({"kind":"Fp","p":6})")), ParseError);
    CHECK_THROWS_AS(parseFieldSpec(Json::parse(R"({"kind":"Fp"})")), ParseError);
    CHECK_THROWS_AS(parseFieldSpec(Json::parse(R"({"kind":"R"})")), ParseError);

    const auto spec = parseAlgebraSpec(Json::parse(R"({"field":{"kind":"Fp","p":5},"weights":[2,2,2],"params":["2"]})"));
    CHECK(spec.weights == std::vector<int>{2, 2, 2});
    FpField k(5);
    const auto alg = buildAlgebra(k, spec);
    CHECK(alg->vertexCount() == 5);
    CHECK(algebraSpecJson(algebraSpecOf(*alg)) == algebraSpecJson(spec));
    CHECK_THROWS_AS(parseAlgebraSpec(Json::parse(R"({"weights":[2]})")), ParseError);
    CHECK_THROWS_AS(parseAlgebraSpec(Json::parse(R"({"field":{"kind":"Q"},"weights":[-1]})")), ParseError);
}

TEST_CASE("representations round trip") {
    Rng rng(11);
    QField q;
    const auto kronQ = canonicalAlgebra(q, {}, {});
    checkRoundTrip(kroneckerJordan(kronQ, 3, Rational(-7, 3)));
    checkRoundTrip(Representation<Rational>::zero(kronQ));

    FpField k(5);
    const auto c222 = canonicalAlgebra(k, {2, 2, 2}, {k.fromInt(2)});
    for (int v = 0; v < c222->vertexCount(); ++v) {
        checkRoundTrip(projectiveAt(c222, v));
        checkRoundTrip(randomConjugate(injectiveAt(c222, v), rng));
    }
    for (const auto& s : regularSimples(c222, TubeId<Fp>::atArm(2), rng)) checkRoundTrip(s);

    QtField qt(q);
    const auto kronT = canonicalAlgebra(qt, {}, {});
    const auto t = qt.variable();
    Mat<RationalFunction<Rational>> b = zeros(qt, 1, 1);
    b(0, 0) = (t * t + qt.one()) / (t - qt.one());
    checkRoundTrip(kroneckerPair(kronT, identity(qt, 1), b));
    FptField ft(k);
    const auto kronFt = canonicalAlgebra(ft, {}, {});
    Mat<RationalFunction<Fp>> c = zeros(ft, 1, 1);
    c(0, 0) = ft.variable();
    checkRoundTrip(kroneckerPair(kronFt, identity(ft, 1), c));
}

TEST_CASE("morphisms round trip") {
    FpField k(5);
    const auto kron = canonicalAlgebra(k, {}, {});
    const auto pc = projectiveAt(kron, kron->sinkVertex());
    const auto p0 = projectiveAt(kron, kron->sourceVertex());
    for (const auto& f : homBasis(pc, p0)) {
        const auto back = parseMorphism(pc, p0, Json::parse(morphismJson(f).dump()));
        CHECK(back == f);
    }
    CHECK_THROWS_AS(parseMorphism(pc, p0, Json::parse(R"({"maps":{}})")), ParseError);
}

TEST_CASE("malformed representation files") {
    FpField k(5);
    const auto kron = canonicalAlgebra(k, {}, {});
    const auto c222 = canonicalAlgebra(k, {2, 2, 2}, {k.fromInt(2)});
    const auto parse = [&](const AlgebraPtr<Fp>& alg, const char* text) { return parseRepresentation(alg, Json::parse(text)); };

    CHECK(parse(kron, R"({"dims":{"0":1}})").dims() == DimVector{1, 0});
    CHECK_THROWS_AS(parse(kron, R"({"dims":{"z":1}})"), ParseError);
    CHECK_THROWS_AS(parse(kron, R"({"dims":{"0":-1}})"), ParseError);
    CHECK_THROWS_AS(parse(kron, R"({"arrows":{}})"), ParseError);
    CHECK_THROWS_AS(parse(kron, R"({"dims":{"0":1,"c":1},"arrows":{"x1_1":[["1"]]}})"), ParseError);
    CHECK_THROWS_AS(parse(kron, R"({"dims":{"0":1,"c":1},"arrows":{"x1_1":[["1"]],"x2_1":[["1","0"]]}})"), ParseError);
    CHECK_THROWS_AS(parse(kron, R"({"dims":{"0":1,"c":1},"arrows":{"x1_1":[["1"]],"x2_1":[["1"]],"y":[["1"]]}})"), ParseError);
    CHECK_THROWS(parse(kron, R"({"dims":{"0":1,"c":1},"arrows":{"x1_1":[["1/0"]],"x2_1":[["1"]]}})"));
    CHECK(parse(kron, R"({"dims":{"0":1,"c":1},"arrows":{"x1_1":[[6]],"x2_1":[["-1"]]}})").arrow(1)(0, 0) == k.fromInt(4));
    CHECK_THROWS(parse(kron, R"({"dims":{"0":1,"c":1},"arrows":{"x1_1":[["1"]],"x2_1":[["3/2"]]}})"));

    // all arrows 1 breaks the third-arm relation when the parameter is 2
    std::string all = R"j({"dims":{"0":1,"(1,1)":1,"(2,1)":1,"(3,1)":1,"c":1},"arrows":{)j";
    for (int arm = 1; arm <= 3; ++arm)
        for (int j = 1; j <= 2; ++j) all += "\"x" + std::to_string(arm) + "_" + std::to_string(j) + "\":[[\"1\"]],";
    all.back() = '}';
    all += "}";
    CHECK_THROWS_AS(parse(c222, all.c_str()), DomainError);
}
