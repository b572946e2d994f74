// canrep: command-line front end for the representation library.

#include "canrep/approx.hpp"
#include "canrep/io.hpp"
#include "canrep/tubular.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace canrep;
namespace fs = std::filesystem;

struct Options {
    std::string command;
    std::string algebra, rep, source, target;
    std::string tube, tubes, ratios;
    std::string format = "json";
    std::string base = "Q";
    std::uint32_t p = 0;
    long long seed = 0;
    Index depth = 1, socle = 0, length = 1;
    Index budget = 8, dimBudget = 16;
    bool inverse = false;
};

Json readJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// The algebra spec of a representation file: inline, or a path relative to the file.
AlgebraSpec specOfRepFile(const std::string& path, const Json& j) {
    if (!j.contains("algebra")) throw ParseError(path + ": missing field \"algebra\" (or pass --algebra)");
    const auto& a = j.at("algebra");
    if (a.is_string()) return parseAlgebraSpec(readJson((fs::path(path).parent_path() / a.get<std::string>()).string()));
    return parseAlgebraSpec(a);
}

bool sameSpec(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.field == b.field && a.weights == b.weights && a.params == b.params;
}

std::vector<std::string> splitList(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

template <class F>
std::string dimsText(const Algebra<F>& alg, const DimVector& d) {
    std::string out;
    for (int v = 0; v < alg.vertexCount(); ++v) {
        if (v) out += ',';
        out += alg.vertexLabel(v) + ":" + std::to_string(d[static_cast<std::size_t>(v)]);
    }
    return out;
}

template <class F>
Json dimsJson(const Algebra<F>& alg, const DimVector& d) {
    Json j = Json::object();
    for (int v = 0; v < alg.vertexCount(); ++v) j[alg.vertexLabel(v)] = d[static_cast<std::size_t>(v)];
    return j;
}

template <class F>
Json sequenceJson(const ShortExactSequence<F>& s) {
    return Json{{"a", representationJson(s.a)},
                {"b", representationJson(s.b)},
                {"c", representationJson(s.c)},
                {"iota", morphismJson(s.iota)},
                {"pi", morphismJson(s.pi)}};
}

template <class F>
std::vector<TubeId<F>> parseTubes(const Field<F>& k, const std::string& text) {
    std::vector<TubeId<F>> out;
    for (const auto& t : splitList(text)) out.push_back(parseTube(k, t));
    if (out.empty()) throw DomainError("invalid_tube", "--tubes needs at least one tube");
    return out;
}

/// Inputs resolved against one algebra.
template <class F>
struct Inputs {
    AlgebraPtr<F> alg;
    Representation<F> rep, source, target;
};

template <class F>
class Runner {
public:
    Runner(const Options& o, const Field<F>& k, const AlgebraSpec& spec, const std::vector<std::pair<std::string, Json>>& reps)
        : o_(o), rng_(static_cast<std::uint64_t>(o.seed)) {
        in_.alg = buildAlgebra(k, spec);
        for (const auto& [role, j] : reps) {
            auto m = parseRepresentation(in_.alg, j);
            if (role == "rep") in_.rep = m;
            if (role == "source") in_.source = m;
            if (role == "target") in_.target = m;
        }
    }

    std::string run() {
        Json out;
        out["canrep_format"] = kFormatVersion;
        out["command"] = o_.command;
        const auto& c = o_.command;
        if (c == "classify") classify(out);
        else if (c == "defect") defectReport(out);
        else if (c == "decompose") decomposeReport(out);
        else if (c == "hom") hom(out);
        else if (c == "ext") ext(out);
        else if (c == "tau") tauReport(out);
        else if (c == "tube-simples") tubeSimplesReport(out);
        else if (c == "sbracket") sbracket(out);
        else if (c == "split-trisect") split(out);
        else if (c == "partition-tubes") partition(out);
        else if (c == "omega-left") omegaLeft(out);
        else if (c == "omega-right") omegaRight(out);
        else if (c == "endolength") out["endolength"] = endolength(in_.rep);
        else if (c == "peg-growth") return pegGrowth(out);
        else if (c == "slope") return slopeReport(out);
        else if (c == "slope-check") slopeCheck(out);
        else if (c == "chain") chain(out);
        else throw std::logic_error("unhandled command " + c);
        return out.dump(2) + "\n";
    }

private:
    const Algebra<F>& alg() const { return *in_.alg; }

    void classify(Json& out) {
        out["label"] = labelName(canrep::classify(in_.rep, rng_));
        out["defect"] = defect(alg(), in_.rep.dims());
    }

    void defectReport(Json& out) {
        out["dims"] = dimsJson(alg(), in_.rep.dims());
        out["defect"] = defect(alg(), in_.rep.dims());
    }

    void decomposeReport(Json& out) {
        Json parts = Json::array();
        if (!in_.rep.isZero())
            for (const auto& s : decompose(in_.rep, rng_).summands)
                parts.push_back(Json{{"multiplicity", s.multiplicity}, {"module", representationJson(s.module)}});
        out["summands"] = parts;
    }

    void hom(Json& out) {
        const auto basis = homBasis(in_.source, in_.target);
        out["dim"] = basis.size();
        Json list = Json::array();
        for (const auto& f : basis) list.push_back(morphismJson(f));
        out["basis"] = list;
    }

    void ext(Json& out) {
        const auto space = ext1Space(in_.source, in_.target);
        out["dim"] = space.dim();
        Json list = Json::array();
        for (const auto& e : space.basis()) list.push_back(sequenceJson(realizeExtension(e)));
        out["extensions"] = list;
    }

    void tauReport(Json& out) {
        const auto r = o_.inverse ? tauInverseWithReport(in_.rep) : tauWithReport(in_.rep);
        out["module"] = representationJson(r.module);
        Json dropped = Json::array();
        for (int v : r.dropped) dropped.push_back(alg().vertexLabel(v));
        out["dropped"] = dropped;
    }

    void tubeSimplesReport(Json& out) {
        const auto tube = parseTube(alg().field(), o_.tube);
        const auto simples = regularSimples(in_.alg, tube, rng_);
        out["tube"] = canonicalTube(alg(), tube).format();
        Json list = Json::array();
        for (const auto& s : simples) list.push_back(representationJson(s));
        out["simples"] = list;
        out["period"] = simples.size();
    }

    void sbracket(Json& out) {
        const TubePosition<F> pos{parseTube(alg().field(), o_.tube), o_.socle, o_.length};
        out["module"] = representationJson(sBracket(in_.alg, pos, rng_));
    }

    void split(Json& out) {
        const auto s = splitTrisect(in_.rep, rng_);
        out["p"] = representationJson(s.p);
        out["t"] = representationJson(s.t);
        out["q"] = representationJson(s.q);
    }

    void partition(Json& out) {
        const auto s = partitionByTubes(in_.rep, parseTubes(alg().field(), o_.tubes), rng_);
        out["inside"] = representationJson(s.inside);
        out["outside"] = representationJson(s.outside);
    }

    TruncationParams<F> params() const { return {parseTubes(alg().field(), o_.tubes), o_.depth}; }

    void omegaLeft(Json& out) {
        const auto p = params();
        const auto a = leftOmegaApproxTruncated(in_.rep, p, rng_);
        const auto& s = a.sequence;
        bool vanishing = true, torsionfree = true, preserved = true, inTubes = true;
        for (const auto& simple : a.simples) {
            const auto into = ext1Space(simple, s.b);
            for (const auto& e : ext1Basis(simple, s.a)) vanishing = vanishing && into.isZero(pushforward(e, s.iota).cocycle);
            torsionfree = torsionfree && homDim(simple, s.a) == 0;
        }
        if (torsionfree)
            for (const auto& simple : a.simples) preserved = preserved && homDim(simple, s.b) == 0;
        for (const auto& part : regularSeries(s.c, rng_)) {
            bool listed = false;
            for (const auto& t : p.tubes) listed = listed || canonicalTube(alg(), t) == part.tube;
            inTubes = inTubes && listed && static_cast<Index>(part.factors.size()) <= p.depth;
        }
        out["sequence"] = sequenceJson(s);
        out["multiplicities"] = a.multiplicities;
        out["stripped_dims"] = dimsJson(alg(), a.stripped.dims());
        out["certificates"] = Json{{"exact", s.verify()},
                                   {"ext_vanishing", vanishing},
                                   {"torsionfree_preserved", preserved},
                                   {"cokernel_in_tubes", inTubes}};
    }

    void omegaRight(Json& out) {
        const auto p = params();
        const auto a = rightOmegaApproxTruncated(in_.rep, p, rng_);
        const auto& s = a.sequence;
        bool torsionfree = true, preprojective = true;
        for (const auto& simple : tubeSimples(in_.alg, p, rng_)) torsionfree = torsionfree && homDim(simple, s.a) == 0;
        if (!s.a.isZero())
            for (const auto& part : decompose(s.a, rng_).parts)
                preprojective = preprojective && canrep::classify(part, rng_) == TrisectLabel::P;
        out["sequence"] = sequenceJson(s);
        Json cover = Json::array();
        for (std::size_t i = 0; i < a.socles.size(); ++i)
            cover.push_back(Json{{"socle_dims", dimsJson(alg(), a.socles[i].dims())}, {"length", a.lengths[i]}});
        out["cover"] = cover;
        out["certificates"] =
            Json{{"exact", s.verify()}, {"kernel_torsionfree", torsionfree}, {"kernel_preprojective", preprojective}};
    }

    std::string pegGrowth(Json& out) {
        const auto simples = regularSimples(in_.alg, parseTube(alg().field(), o_.tube), rng_);
        if (o_.socle < 0 || o_.socle >= static_cast<Index>(simples.size()))
            throw DomainError("invalid_tube", "socle index out of range");
        const auto g = pegHomGrowth(in_.rep, simples[static_cast<std::size_t>(o_.socle)], o_.depth, rng_);
        if (o_.format == "tsv") {
            std::string tsv = "r\thom_dim\tmonomorphism\n";
            for (std::size_t r = 0; r < g.dims.size(); ++r)
                tsv += std::to_string(r + 1) + "\t" + std::to_string(g.dims[r]) + "\t" + (g.witnesses[r] ? "yes" : "no") + "\n";
            return tsv;
        }
        out["dims"] = g.dims;
        Json witnesses = Json::array();
        for (const auto& w : g.witnesses) witnesses.push_back(w ? morphismJson(*w) : Json(nullptr));
        out["witnesses"] = witnesses;
        return out.dump(2) + "\n";
    }

    SlopeScale scale() {
        const auto pool = searchIndecomposables(in_.alg, SearchOptions{o_.budget, 600}, rng_);
        return calibrateSlopes(alg(), pool);
    }

    std::string slopeReport(Json& out) {
        const auto sc = scale();
        std::vector<Representation<F>> parts;
        if (!in_.rep.isZero()) parts = decompose(in_.rep, rng_).parts;
        std::string tsv = "dims\tdelta0\tdelta_inf\tslope\tfamily\n";
        Json rows = Json::array();
        for (const auto& m : parts) {
            const auto& d = m.dims();
            const bool sloped = hasSlope(sc.forms, d);
            const auto s = sloped ? slope(sc, d).format() : std::string("-");
            const auto family = tubularFamily(sc.forms, d);
            tsv += dimsText(alg(), d) + "\t" + std::to_string(deltaZero(sc.forms, d)) + "\t" +
                   std::to_string(deltaInfty(sc.forms, d)) + "\t" + s + "\t" + family + "\n";
            rows.push_back(Json{{"dims", dimsJson(alg(), d)},
                                {"delta0", deltaZero(sc.forms, d)},
                                {"delta_inf", deltaInfty(sc.forms, d)},
                                {"slope", sloped ? Json(s) : Json(nullptr)},
                                {"family", family}});
        }
        if (o_.format == "tsv") return tsv;
        out["calibration"] = dimsJson(alg(), sc.calibration);
        out["summands"] = rows;
        return out.dump(2) + "\n";
    }

    void slopeCheck(Json& out) {
        const auto v = slopeOrderCheck(in_.source, in_.target, scale());
        out["ok"] = v.ok;
        out["slope_source"] = v.slopeM.format();
        out["slope_target"] = v.slopeN.format();
        out["hom_nonzero"] = v.witness.has_value();
    }

    void chain(Json& out) {
        std::vector<Rational> ratios;
        for (const auto& r : splitList(o_.ratios)) ratios.push_back(Rational::parse(r));
        const auto pool = searchIndecomposables(in_.alg, SearchOptions{o_.budget, 600}, rng_);
        const auto sc = calibrateSlopes(alg(), pool);
        const auto ch = chainTowardSlope(in_.alg, ratios, sc, pool, o_.dimBudget, rng_);
        Json modules = Json::array(), inclusions = Json::array(), cokernels = Json::array();
        for (std::size_t i = 0; i < ch.modules.size(); ++i)
            modules.push_back(Json{{"slope", ch.slopes[i].format()}, {"module", representationJson(ch.modules[i])}});
        for (const auto& f : ch.inclusions) inclusions.push_back(Json{{"map", morphismJson(f)}, {"injective", f.isInjective()}});
        for (const auto& c : ch.cokernels) cokernels.push_back(representationJson(c));
        out["modules"] = modules;
        out["inclusions"] = inclusions;
        out["cokernels"] = cokernels;
    }

    const Options& o_;
    Rng rng_;
    Inputs<F> in_;
};

std::string generic(const Options& o) {
    Json out;
    out["canrep_format"] = kFormatVersion;
    out["command"] = o.command;
    const auto report = [&](const auto& g) {
        out["module"] = representationJson(g);
        out["end_dim"] = homDim(g, g);
        out["endolength"] = endolength(g);
    };
    if (o.base == "Q")
        report(kroneckerGeneric(QField{}));
    else if (o.base == "Fp")
        report(kroneckerGeneric(FpField(FieldSpec::prime(o.p).p)));
    else
        throw ParseError("--base must be Q or Fp");
    return out.dump(2) + "\n";
}

std::string run(const Options& o) {
    if (o.command == "generic") return generic(o);
    if (o.format != "json" && o.format != "tsv") throw ParseError("--format must be json or tsv");
    if (o.format == "tsv" && o.command != "slope" && o.command != "peg-growth")
        throw ParseError("tsv output is available for slope and peg-growth");

    std::optional<AlgebraSpec> spec;
    if (!o.algebra.empty()) spec = parseAlgebraSpec(readJson(o.algebra));
    std::vector<std::pair<std::string, Json>> reps;
    for (const auto& [role, path] : {std::pair<std::string, std::string>{"rep", o.rep}, {"source", o.source}, {"target", o.target}}) {
        if (path.empty()) continue;
        auto j = readJson(path);
        if (!o.algebra.empty() && !j.contains("algebra")) {
            reps.emplace_back(role, std::move(j));
            continue;
        }
        const auto own = specOfRepFile(path, j);
        if (!spec) spec = own;
        else if (!sameSpec(*spec, own)) throw ParseError(path + ": algebra differs from the other inputs");
        reps.emplace_back(role, std::move(j));
    }
    if (!spec) throw ParseError("no algebra given; pass --algebra or a representation file");
    return withField(spec->field, [&](const auto& k) {
        using F = typename std::decay_t<decltype(k)>::Scalar;
        return Runner<F>(o, k, *spec, reps).run();
    });
}

Json errorJson(const std::string& code, const std::string& message) {
    return Json{{"canrep_format", kFormatVersion}, {"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations of canonical algebras"};
    app.require_subcommand(1);
    Options o;

    // Decomposition results depend on the seed, so those commands require it; elsewhere it defaults to 0.
    const auto seeded = [&](CLI::App* sub, bool required = false) {
        auto* opt = sub->add_option("--seed", o.seed, "random seed");
        if (required) opt->required();
    };
    const auto withRep = [&](CLI::App* sub) {
        sub->add_option("--rep", o.rep, "representation file")->required()->check(CLI::ExistingFile);
        sub->add_option("--algebra", o.algebra, "algebra file")->check(CLI::ExistingFile);
    };
    const auto withPair = [&](CLI::App* sub) {
        sub->add_option("--source", o.source, "source representation file")->required()->check(CLI::ExistingFile);
        sub->add_option("--target", o.target, "target representation file")->required()->check(CLI::ExistingFile);
        sub->add_option("--algebra", o.algebra, "algebra file")->check(CLI::ExistingFile);
    };
    const auto withAlgebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "algebra file")->required()->check(CLI::ExistingFile);
    };
    const auto sub = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&o, name] { o.command = name; });
        return s;
    };

    auto* c = sub("classify", "trisection label and defect of an indecomposable");
    withRep(c);
    seeded(c);
    withRep(sub("defect", "defect of a dimension vector"));
    c = sub("decompose", "indecomposable summands with multiplicities");
    withRep(c);
    seeded(c, true);
    withPair(sub("hom", "basis of Hom(source, target)"));
    withPair(sub("ext", "Ext^1(source, target) with realized extensions"));
    c = sub("tau", "Auslander-Reiten translate");
    withRep(c);
    c->add_flag("--inverse", o.inverse, "apply the inverse translate");
    c = sub("tube-simples", "regular simples of a tube");
    withAlgebra(c);
    c->add_option("--tube", o.tube, "arm:i, pt:inf or pt:<polynomial>")->required();
    seeded(c);
    c = sub("sbracket", "uniserial regular module S[r]");
    withAlgebra(c);
    c->add_option("--tube", o.tube, "tube")->required();
    c->add_option("--socle", o.socle, "index of the regular socle in the tube");
    c->add_option("--length", o.length, "regular length")->required();
    seeded(c);
    c = sub("split-trisect", "split into p, t and q parts");
    withRep(c);
    seeded(c, true);
    c = sub("partition-tubes", "split a regular module by tube support");
    withRep(c);
    c->add_option("--tubes", o.tubes, "comma separated tubes")->required();
    seeded(c, true);
    for (const char* name : {"omega-left", "omega-right"}) {
        c = sub(name, std::string(name) == "omega-left" ? "truncated left approximation" : "truncated right approximation");
        withRep(c);
        c->add_option("--tubes", o.tubes, "comma separated tubes")->required();
        c->add_option("--depth", o.depth, "truncation depth")->required();
        seeded(c);
    }
    c = sub("generic", "generic Kronecker module over K(t)");
    c->add_option("--base", o.base, "Q or Fp");
    c->add_option("--p", o.p, "prime for --base Fp");
    withRep(sub("endolength", "length over the endomorphism ring"));
    c = sub("peg-growth", "dim Hom(P, S[r]) for r = 1..depth");
    withRep(c);
    c->add_option("--tube", o.tube, "tube")->required();
    c->add_option("--socle", o.socle, "index of the regular socle in the tube");
    c->add_option("--depth", o.depth, "largest regular length")->required();
    c->add_option("--format", o.format, "json or tsv");
    seeded(c);
    c = sub("slope", "defects and slopes of the summands");
    withRep(c);
    c->add_option("--budget", o.budget, "dimension budget of the calibration search");
    c->add_option("--format", o.format, "json or tsv");
    seeded(c, true);
    c = sub("slope-check", "Hom vanishing against the slope order");
    withPair(c);
    c->add_option("--budget", o.budget, "dimension budget of the calibration search");
    seeded(c);
    c = sub("chain", "monomorphisms through increasing slopes");
    withAlgebra(c);
    c->add_option("--ratios", o.ratios, "comma separated increasing rationals")->required();
    c->add_option("--budget", o.budget, "dimension budget of the module search");
    c->add_option("--dim-budget", o.dimBudget, "dimension budget of chain members");
    seeded(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << errorJson("usage", e.what()).dump(2) << "\n";
        return 2;
    }

    try {
        std::cout << run(o);
        return 0;
    } catch (const ParseError& e) {
        std::cout << errorJson("parse_error", e.what()).dump(2) << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cout << errorJson("parse_error", e.what()).dump(2) << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cout << errorJson(e.code(), e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cout << errorJson("invalid_argument", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cout << errorJson("domain_error", e.what()).dump(2) << "\n";
        return 1;
    }
}
