#pragma once

#include "canrep/representation.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace canrep {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Field, weights and parameter strings of a canonical algebra as written in files.
struct AlgebraSpec {
    FieldSpec field;
    std::vector<int> weights;
    std::vector<std::string> params;
};

/// {"kind": "Q"}, {"kind": "Fp", "p": 5}, {"kind": "Qt"} or {"kind": "Fpt", "p": 5}.
FieldSpec parseFieldSpec(const Json& j);
Json fieldSpecJson(const FieldSpec& spec);

AlgebraSpec parseAlgebraSpec(const Json& j);
Json algebraSpecJson(const AlgebraSpec& spec);

template <class F>
AlgebraSpec algebraSpecOf(const Algebra<F>& alg);
template <class F>
AlgebraPtr<F> buildAlgebra(const Field<F>& k, const AlgebraSpec& spec);

template <class F>
Json matrixJson(const Field<F>& k, const Mat<F>& m);
template <class F>
Mat<F> parseMatrix(const Field<F>& k, const Json& j, Index rows, Index cols);

/// {"algebra": ..., "dims": {label: n}, "arrows": {label: rows}}.
template <class F>
Json representationJson(const Representation<F>& m);
/// Reads "dims" and "arrows"; the "algebra" entry is resolved by the caller.
template <class F>
Representation<F> parseRepresentation(const AlgebraPtr<F>& alg, const Json& j);

/// {"maps": {label: rows}}.
template <class F>
Json morphismJson(const Morphism<F>& f);
template <class F>
Morphism<F> parseMorphism(const Representation<F>& source, const Representation<F>& target, const Json& j);

/// Calls fn(field) with the concrete Field<F> named by the spec.
template <class Fn>
decltype(auto) withField(const FieldSpec& spec, Fn&& fn) {
    switch (spec.kind) {
        case FieldSpec::Kind::Rationals: return fn(QField{});
        case FieldSpec::Kind::PrimeField: return fn(FpField(spec.p));
        case FieldSpec::Kind::RationalFunctions: break;
    }
    if (spec.p == 0) return fn(QtField(QField{}));
    return fn(FptField(FpField(spec.p)));
}

}  // namespace canrep
