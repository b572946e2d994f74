#include "canrep/io.hpp"

namespace canrep {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string scalarString(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("scalars must be strings or integers, got " + j.dump());
}

long long nonNegative(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a nonnegative integer");
    return j.get<long long>();
}

}  // namespace

FieldSpec parseFieldSpec(const Json& j) {
    const auto kind = member(j, "kind");
    if (!kind.is_string()) throw ParseError("field kind must be a string");
    const auto k = kind.get<std::string>();
    const auto prime = [&] {
        const auto p = nonNegative(member(j, "p"), "p");
        if (!isPrime(static_cast<std::uint64_t>(p)) || p >= (1LL << 31)) throw ParseError("p must be a prime below 2^31");
        return static_cast<std::uint32_t>(p);
    };
    if (k == "Q") return FieldSpec::rationals();
    if (k == "Fp") return FieldSpec::prime(prime());
    if (k == "Qt") return FieldSpec::functionsOverRationals();
    if (k == "Fpt") return FieldSpec::functionsOverPrime(prime());
    throw ParseError("unknown field kind \"" + k + "\"");
}

Json fieldSpecJson(const FieldSpec& spec) {
    Json j;
    switch (spec.kind) {
        case FieldSpec::Kind::Rationals: j["kind"] = "Q"; break;
        case FieldSpec::Kind::PrimeField:
            j["kind"] = "Fp";
            j["p"] = spec.p;
            break;
        case FieldSpec::Kind::RationalFunctions:
            j["kind"] = spec.p == 0 ? "Qt" : "Fpt";
            if (spec.p != 0) j["p"] = spec.p;
            break;
    }
    return j;
}

AlgebraSpec parseAlgebraSpec(const Json& j) {
    AlgebraSpec spec;
    spec.field = parseFieldSpec(member(j, "field"));
    if (j.contains("weights")) {
        if (!j["weights"].is_array()) throw ParseError("weights must be an array");
        for (const auto& w : j["weights"]) spec.weights.push_back(static_cast<int>(nonNegative(w, "weight")));
    }
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw ParseError("params must be an array");
        for (const auto& p : j["params"]) spec.params.push_back(scalarString(p));
    }
    return spec;
}

Json algebraSpecJson(const AlgebraSpec& spec) {
    Json j;
    j["field"] = fieldSpecJson(spec.field);
    j["weights"] = spec.weights;
    j["params"] = spec.params;
    return j;
}

template <class F>
AlgebraSpec algebraSpecOf(const Algebra<F>& alg) {
    AlgebraSpec spec{alg.field().spec(), alg.weights(), {}};
    for (const auto& p : alg.params()) spec.params.push_back(alg.field().format(p));
    return spec;
}

template <class F>
AlgebraPtr<F> buildAlgebra(const Field<F>& k, const AlgebraSpec& spec) {
    if (k.spec() != spec.field) throw std::logic_error("field does not match the algebra spec");
    std::vector<F> params;
    for (const auto& p : spec.params) params.push_back(k.parse(p));
    return canonicalAlgebra(k, spec.weights, params);
}

template <class F>
Json matrixJson(const Field<F>& k, const Mat<F>& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(k.format(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Mat<F> parseMatrix(const Field<F>& k, const Json& j, Index rows, Index cols) {
    if (!j.is_array()) throw ParseError("a matrix must be an array of rows");
    Mat<F> m = zeros(k, rows, cols);
    if (cols == 0 && j.size() == 0) return m;
    if (static_cast<Index>(j.size()) != rows)
        throw ParseError("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    for (Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (Index c = 0; c < cols; ++c) m(r, c) = k.parse(scalarString(row[static_cast<std::size_t>(c)]));
    }
    return m;
}

template <class F>
Json representationJson(const Representation<F>& m) {
    const auto& alg = m.algebra();
    Json j;
    j["algebra"] = algebraSpecJson(algebraSpecOf(alg));
    Json dims = Json::object();
    for (int v = 0; v < alg.vertexCount(); ++v) dims[alg.vertexLabel(v)] = m.dim(v);
    j["dims"] = dims;
    Json arrows = Json::object();
    for (int a = 0; a < alg.arrowCount(); ++a) arrows[alg.arrow(a).label] = matrixJson(m.field(), m.arrow(a));
    j["arrows"] = arrows;
    return j;
}

template <class F>
Representation<F> parseRepresentation(const AlgebraPtr<F>& alg, const Json& j) {
    const auto& dimsJ = member(j, "dims");
    if (!dimsJ.is_object()) throw ParseError("dims must be an object keyed by vertex label");
    DimVector dims(static_cast<std::size_t>(alg->vertexCount()), 0);
    for (const auto& [label, value] : dimsJ.items()) {
        int v = -1;
        try {
            v = alg->vertexIndex(label);
        } catch (const DomainError&) {
            throw ParseError("unknown vertex \"" + label + "\"");
        }
        dims[static_cast<std::size_t>(v)] = nonNegative(value, "dimension at " + label);
    }
    std::vector<Mat<F>> arrows;
    const Json empty = Json::object();
    const auto& arrowsJ = j.contains("arrows") ? j.at("arrows") : empty;
    if (!arrowsJ.is_object()) throw ParseError("arrows must be an object keyed by arrow label");
    for (const auto& [label, value] : arrowsJ.items()) {
        bool known = false;
        for (const auto& a : alg->arrows()) known = known || a.label == label;
        if (!known) throw ParseError("unknown arrow \"" + label + "\"");
    }
    for (const auto& a : alg->arrows()) {
        const Index rows = dims[static_cast<std::size_t>(a.target)], cols = dims[static_cast<std::size_t>(a.source)];
        if (arrowsJ.contains(a.label))
            arrows.push_back(parseMatrix(alg->field(), arrowsJ.at(a.label), rows, cols));
        else if (rows == 0 || cols == 0)
            arrows.push_back(zeros(alg->field(), rows, cols));
        else
            throw ParseError("missing matrix for arrow \"" + a.label + "\"");
    }
    return Representation<F>(alg, dims, arrows);
}

template <class F>
Json morphismJson(const Morphism<F>& f) {
    const auto& alg = f.source().algebra();
    Json maps = Json::object();
    for (int v = 0; v < alg.vertexCount(); ++v) maps[alg.vertexLabel(v)] = matrixJson(f.source().field(), f.at(v));
    return Json{{"maps", maps}};
}

template <class F>
Morphism<F> parseMorphism(const Representation<F>& source, const Representation<F>& target, const Json& j) {
    const auto& alg = source.algebra();
    const auto& maps = member(j, "maps");
    std::vector<Mat<F>> out;
    for (int v = 0; v < alg.vertexCount(); ++v) {
        const Index rows = target.dim(v), cols = source.dim(v);
        const auto& label = alg.vertexLabel(v);
        if (maps.contains(label))
            out.push_back(parseMatrix(source.field(), maps.at(label), rows, cols));
        else if (rows == 0 || cols == 0)
            out.push_back(zeros(source.field(), rows, cols));
        else
            throw ParseError("missing map at vertex \"" + label + "\"");
    }
    return Morphism<F>(source, target, out);
}

#define CANREP_INSTANTIATE(F)                                                                          \
    template AlgebraSpec algebraSpecOf(const Algebra<F>&);                                             \
    template AlgebraPtr<F> buildAlgebra(const Field<F>&, const AlgebraSpec&);                          \
    template Json matrixJson(const Field<F>&, const Mat<F>&);                                          \
    template Mat<F> parseMatrix(const Field<F>&, const Json&, Index, Index);                           \
    template Json representationJson(const Representation<F>&);                                        \
    template Representation<F> parseRepresentation(const AlgebraPtr<F>&, const Json&);                 \
    template Json morphismJson(const Morphism<F>&);                                                    \
    template Morphism<F> parseMorphism(const Representation<F>&, const Representation<F>&, const Json&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
