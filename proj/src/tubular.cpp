#include "canrep/tubular.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace canrep {

namespace {

bool dimsBefore(const DimVector& a, const DimVector& b) {
    const auto ta = std::accumulate(a.begin(), a.end(), Index{0});
    const auto tb = std::accumulate(b.begin(), b.end(), Index{0});
    return ta != tb ? ta < tb : a < b;
}

// Primitive nonnegative generator of the radical of the symmetrized Euler form
// restricted to the vertices other than `killed`.
template <class F>
DimVector radicalVector(const Algebra<F>& alg, int killed) {
    const int n = alg.vertexCount();
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != killed) keep.push_back(v);
    QField q;
    const auto m = static_cast<Index>(keep.size());
    Mat<Rational> sym = zeros(q, m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            DimVector a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
            a[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])] = 1;
            b[static_cast<std::size_t>(keep[static_cast<std::size_t>(j)])] = 1;
            sym(i, j) = Rational(eulerForm(alg, a, b) + eulerForm(alg, b, a));
        }
    const Mat<Rational> ker = kernelBasis(sym, q);
    if (ker.cols() != 1) throw std::logic_error("quotient Euler form does not have a rank one radical");
    mpz_class den = 1, num = 0;
    for (Index i = 0; i < m; ++i) {
        den = lcm(den, ker(i, 0).denominator());
    }
    std::vector<mpz_class> ints(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) {
        const mpq_class scaled = ker(i, 0).raw() * den;
        ints[static_cast<std::size_t>(i)] = scaled.get_num();
        num = gcd(num, ints[static_cast<std::size_t>(i)]);
    }
    DimVector h(static_cast<std::size_t>(n), 0);
    int sign = 0;
    for (Index i = 0; i < m; ++i) {
        const mpz_class v = ints[static_cast<std::size_t>(i)] / num;
        if (sign == 0 && v != 0) sign = v > 0 ? 1 : -1;
        h[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])] = sign * v.get_si();
    }
    return h;
}

template <class F>
std::vector<long long> formAgainst(const Algebra<F>& alg, const DimVector& h) {
    const int n = alg.vertexCount();
    std::vector<long long> c(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        DimVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(v)] = 1;
        c[static_cast<std::size_t>(v)] = eulerForm(alg, h, e);
    }
    long long g = 0;
    for (auto x : c) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : c) x /= g;
    return c;
}

long long evaluateForm(const std::vector<long long>& form, const DimVector& d) {
    if (form.size() != d.size()) throw DomainError("dim_mismatch", "dimension vector length differs from vertex count");
    long long acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) acc += form[i] * d[i];
    return acc;
}

template <class F>
std::vector<typename Field<F>::Scalar> samplePoints(const Field<F>& k) {
    std::vector<F> out;
    if (k.finite())
        for (std::uint64_t i = 0; i < k.order() && i < 16; ++i) out.push_back(k.element(i));
    else
        for (long i = -3; i <= 3; ++i) out.push_back(k.fromInt(i));
    return out;
}

template <class F>
class Pool {
public:
    Pool(Index budget, std::size_t cap) : budget_(budget), cap_(cap) {}

    bool full() const { return items_.size() >= cap_; }
    const std::vector<Representation<F>>& items() const { return items_; }

    bool add(const Representation<F>& x, Rng& rng) {
        if (x.isZero() || x.totalDim() > budget_ || full()) return false;
        for (const auto& y : items_)
            if (y.dims() == x.dims() && isIsomorphic(x, y, rng)) return false;
        items_.push_back(x);
        return true;
    }

    bool addParts(const Representation<F>& x, Rng& rng) {
        if (x.isZero() || x.totalDim() > budget_ + budget_) return false;
        bool grew = false;
        for (const auto& part : decompose(x, rng).parts) grew = add(part, rng) || grew;
        return grew;
    }

private:
    Index budget_;
    std::size_t cap_;
    std::vector<Representation<F>> items_;
};

template <class F>
std::optional<Morphism<F>> findMonomorphism(const Representation<F>& a, const Representation<F>& b, Rng& rng) {
    if (a.isZero()) return Morphism<F>::zero(a, b);
    const auto space = homSpace(a, b);
    for (Index i = 0; i < space.dim(); ++i)
        if (space.basisElement(i).isInjective()) return space.basisElement(i);
    for (int attempt = 0; attempt < 12 && space.dim() > 1; ++attempt) {
        Vec<F> c(space.dim());
        for (Index i = 0; i < c.size(); ++i) c(i) = a.field().random(rng);
        auto f = space.element(c);
        if (f.isInjective()) return f;
    }
    return std::nullopt;
}

}  // namespace

template <class F>
bool isTubular(const Algebra<F>& alg) {
    auto w = alg.weights();
    std::sort(w.begin(), w.end());
    const std::vector<std::vector<int>> types{{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
    return std::find(types.begin(), types.end(), w) != types.end();
}

template <class F>
TubularForms tubularForms(const Algebra<F>& alg) {
    if (!isTubular(alg)) throw DomainError("not_tubular", "the weight type is not tubular");
    const int source = alg.sourceVertex();
    const int sink = alg.sinkVertex();
    TubularForms out;
    out.h0 = radicalVector(alg, source);
    out.hInf = radicalVector(alg, sink);
    out.delta0Coeffs = formAgainst(alg, out.h0);
    out.deltaInfCoeffs = formAgainst(alg, out.hInf);
    DimVector pc(static_cast<std::size_t>(alg.vertexCount()), 0), s0 = pc;
    pc[static_cast<std::size_t>(sink)] = 1;
    s0[static_cast<std::size_t>(source)] = 1;
    if (evaluateForm(out.delta0Coeffs, pc) > 0)
        for (auto& x : out.delta0Coeffs) x = -x;
    if (evaluateForm(out.deltaInfCoeffs, s0) < 0)
        for (auto& x : out.deltaInfCoeffs) x = -x;
    return out;
}

long long deltaZero(const TubularForms& forms, const DimVector& d) {
    return evaluateForm(forms.delta0Coeffs, d);
}

long long deltaInfty(const TubularForms& forms, const DimVector& d) {
    return evaluateForm(forms.deltaInfCoeffs, d);
}

template <class F>
long long deltaZero(const Algebra<F>& alg, const DimVector& d) {
    return deltaZero(tubularForms(alg), d);
}

template <class F>
long long deltaInfty(const Algebra<F>& alg, const DimVector& d) {
    return deltaInfty(tubularForms(alg), d);
}

template <class F>
std::string tubularFamily(const Algebra<F>& alg, const DimVector& d) {
    return tubularFamily(tubularForms(alg), d);
}

std::string tubularFamily(const TubularForms& forms, const DimVector& d) {
    const long long d0 = evaluateForm(forms.delta0Coeffs, d), dInf = evaluateForm(forms.deltaInfCoeffs, d);
    if (d0 < 0) return "p0";
    if (dInf > 0) return "qinf";
    if (d0 == 0) return "t0";
    if (dInf == 0) return "tinf";
    return "t";
}

template <class F>
std::vector<Representation<F>> searchIndecomposables(const AlgebraPtr<F>& alg, const SearchOptions& opts, Rng& rng) {
    Pool<F> pool(opts.budget, opts.maxPool);
    for (int v = 0; v < alg->vertexCount(); ++v) {
        pool.add(simpleAt(alg, v), rng);
        pool.add(projectiveAt(alg, v), rng);
        pool.add(injectiveAt(alg, v), rng);
    }
    for (int arm = 1; arm <= alg->armCount(); ++arm)
        if (alg->arms()[static_cast<std::size_t>(arm - 1)] >= 2)
            for (const auto& s : regularSimples(alg, TubeId<F>::atArm(arm), rng)) pool.add(s, rng);
    std::vector<TubeId<F>> points{TubeId<F>::atInfinity()};
    for (const auto& a : samplePoints(alg->field()))
        points.push_back(TubeId<F>::atPoint(Polynomial<F>(std::vector<F>{-a, alg->field().one()})));
    for (const auto& p : points) {
        try {
            validateTube(*alg, p, rng);
        } catch (const DomainError&) {
            continue;
        }
        pool.add(regularSimples(alg, p, rng).front(), rng);
    }

    std::size_t translated = 0;
    std::set<std::pair<std::size_t, std::size_t>> tried;
    for (bool grew = true; grew && !pool.full();) {
        grew = false;
        for (; translated < pool.items().size() && !pool.full(); ++translated) {
            const auto x = pool.items()[translated];
            grew = pool.addParts(tau(x), rng) || grew;
            grew = pool.addParts(tauInverse(x), rng) || grew;
        }
        const std::size_t size = pool.items().size();
        for (std::size_t i = 0; i < size && !pool.full(); ++i)
            for (std::size_t j = 0; j < size && !pool.full(); ++j) {
                const auto& c = pool.items()[i];
                const auto& a = pool.items()[j];
                if (c.totalDim() + a.totalDim() > opts.budget || !tried.insert({i, j}).second) continue;
                const auto space = ext1Space(c, a);
                if (space.dim() == 0) continue;
                const auto first = realizeExtension(space.basisElement(0)).b;
                grew = pool.addParts(first, rng) || grew;
                if (space.dim() > 1) {
                    Vec<F> coords(space.dim());
                    for (Index t = 0; t < coords.size(); ++t) coords(t) = alg->field().random(rng);
                    grew = pool.addParts(realizeExtension(space.element(coords)).b, rng) || grew;
                }
            }
    }
    auto out = pool.items();
    std::stable_sort(out.begin(), out.end(),
                     [](const Representation<F>& a, const Representation<F>& b) { return dimsBefore(a.dims(), b.dims()); });
    return out;
}

template <class F>
SlopeScale calibrateSlopes(const Algebra<F>& alg, const std::vector<Representation<F>>& pool) {
    const auto forms = tubularForms(alg);
    std::optional<DimVector> best;
    for (const auto& m : pool) {
        const auto& d = m.dims();
        if (evaluateForm(forms.delta0Coeffs, d) <= 0 || evaluateForm(forms.deltaInfCoeffs, d) >= 0) continue;
        if (!best || dimsBefore(d, *best)) best = d;
    }
    if (!best) throw DomainError("no_calibration", "no module with both defects nonzero in the search pool");
    const long long d0 = evaluateForm(forms.delta0Coeffs, *best), dInf = evaluateForm(forms.deltaInfCoeffs, *best);
    return {forms, *best, Rational(-dInf, d0)};
}

bool hasSlope(const TubularForms& forms, const DimVector& d) {
    const auto f = tubularFamily(forms, d);
    return f != "p0" && f != "qinf";
}

Slope slope(const SlopeScale& scale, const DimVector& d) {
    const auto& forms = scale.forms;
    const long long d0 = evaluateForm(forms.delta0Coeffs, d), dInf = evaluateForm(forms.deltaInfCoeffs, d);
    if (d0 < 0 || dInf > 0 || (d0 == 0 && dInf == 0)) throw DomainError("no_slope", "the module lies in p0 or qinf");
    if (dInf == 0) return Slope::infinity();
    return Slope::finite(scale.factor * Rational(d0, -dInf));
}

template <class F>
SlopeVerdict<F> slopeOrderCheck(const Representation<F>& m, const Representation<F>& n, const SlopeScale& scale) {
    SlopeVerdict<F> out;
    out.slopeM = slope(scale, m.dims());
    out.slopeN = slope(scale, n.dims());
    const auto hom = homBasis(m, n);
    if (!hom.empty()) out.witness = hom.front();
    out.ok = !(out.slopeM > out.slopeN && out.witness);
    return out;
}

template <class F>
SlopeChain<F> chainTowardSlope(const AlgebraPtr<F>& alg, const std::vector<Rational>& ratios, const SlopeScale& scale,
                               const std::vector<Representation<F>>& pool, Index dimBudget, Rng& rng) {
    if (!isTubular(*alg)) throw DomainError("not_tubular", "slopes need a tubular algebra");
    if (ratios.empty()) throw DomainError("invalid_ratios", "at least one ratio is needed");
    for (std::size_t i = 0; i + 1 < ratios.size(); ++i)
        if (!(ratios[i] < ratios[i + 1])) throw DomainError("invalid_ratios", "ratios must increase strictly");
    SlopeChain<F> out;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const auto target = Slope::finite(ratios[i]);
        std::vector<Representation<F>> members;
        for (const auto& m : pool)
            if (hasSlope(scale.forms, m.dims()) && slope(scale, m.dims()) == target) members.push_back(m);
        std::vector<Representation<F>> candidates = members;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a; b < members.size(); ++b)
                if (members[a].totalDim() + members[b].totalDim() <= dimBudget)
                    candidates.push_back(directSum<F>({members[a], members[b]}).object);
        bool placed = false;
        for (const auto& c : candidates) {
            if (c.totalDim() > dimBudget) continue;
            if (i == 0) {
                out.modules.push_back(c);
                placed = true;
                break;
            }
            const auto& prev = out.modules.back();
            if (c.totalDim() <= prev.totalDim()) continue;
            if (auto mono = findMonomorphism(prev, c, rng)) {
                out.inclusions.push_back(*mono);
                out.cokernels.push_back(cokernel(*mono).object);
                out.modules.push_back(c);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw DomainError("unrealizable", "no module of slope " + ratios[i].toString() + " admits a monomorphism at index " +
                                                  std::to_string(i) + " within dimension " + std::to_string(dimBudget));
        out.slopes.push_back(target);
    }
    return out;
}

#define CANREP_INSTANTIATE(F)                                                                                            \
    template bool isTubular(const Algebra<F>&);                                                                          \
    template TubularForms tubularForms(const Algebra<F>&);                                                               \
    template long long deltaZero(const Algebra<F>&, const DimVector&);                                                   \
    template long long deltaInfty(const Algebra<F>&, const DimVector&);                                                  \
    template std::string tubularFamily(const Algebra<F>&, const DimVector&);                                             \
    template std::vector<Representation<F>> searchIndecomposables(const AlgebraPtr<F>&, const SearchOptions&, Rng&);     \
    template SlopeScale calibrateSlopes(const Algebra<F>&, const std::vector<Representation<F>>&);                       \
    template SlopeVerdict<F> slopeOrderCheck(const Representation<F>&, const Representation<F>&, const SlopeScale&);     \
    template SlopeChain<F> chainTowardSlope(const AlgebraPtr<F>&, const std::vector<Rational>&, const SlopeScale&,       \
                                            const std::vector<Representation<F>>&, Index, Rng&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
