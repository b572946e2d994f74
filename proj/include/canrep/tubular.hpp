#pragma once

#include "canrep/trisection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canrep {

/// Weight types (2,2,2,2), (3,3,3), (2,4,4) and (2,3,6) up to order.
template <class F>
bool isTubular(const Algebra<F>& alg);

/// The radical vectors of the two tame concealed quotients, obtained by
/// killing the source (h0) or the sink (hInf), and the defects they induce.
struct TubularForms {
    DimVector h0;
    DimVector hInf;
    /// delta0(d) = sum_v delta0Coeffs[v] d_v, likewise for deltaInf.
    std::vector<long long> delta0Coeffs;
    std::vector<long long> deltaInfCoeffs;
};

template <class F>
TubularForms tubularForms(const Algebra<F>& alg);
template <class F>
long long deltaZero(const Algebra<F>& alg, const DimVector& d);
template <class F>
long long deltaInfty(const Algebra<F>& alg, const DimVector& d);

/// A slope in Q+ or the endpoint infinity.
struct Slope {
    bool infinite = false;
    Rational value;

    static Slope finite(Rational v) { return {false, std::move(v)}; }
    static Slope infinity() { return {true, Rational(0)}; }
    std::string format() const { return infinite ? "∞" : value.toString(); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
};

long long deltaZero(const TubularForms& forms, const DimVector& d);
long long deltaInfty(const TubularForms& forms, const DimVector& d);

/// Family of an indecomposable by its two defects: "p0", "t0", "t", "tinf" or "qinf".
std::string tubularFamily(const TubularForms& forms, const DimVector& d);
template <class F>
std::string tubularFamily(const Algebra<F>& alg, const DimVector& d);

struct SearchOptions {
    Index budget = 12;
    std::size_t maxPool = 600;
};

/// Indecomposables of total dimension at most the budget reachable from the
/// simple, projective, injective and regular simple modules by tau, tau^-1 and
/// middle terms of extensions; pairwise non-isomorphic, sorted by total
/// dimension then dimension vector.
template <class F>
std::vector<Representation<F>> searchIndecomposables(const AlgebraPtr<F>& alg, const SearchOptions& opts, Rng& rng);

/// Scale factor fixed by a calibration module of slope 1.
struct SlopeScale {
    TubularForms forms;
    DimVector calibration;
    /// slope(d) = factor * delta0(d) / -deltaInf(d).
    Rational factor;
};

/// Calibrates on the smallest indecomposable in the pool with delta0 > 0 and
/// deltaInf < 0 (ties broken by dimension vector).
template <class F>
SlopeScale calibrateSlopes(const Algebra<F>& alg, const std::vector<Representation<F>>& pool);

bool hasSlope(const TubularForms& forms, const DimVector& d);
/// Throws DomainError("no_slope") for modules in p0 or qinf.
Slope slope(const SlopeScale& scale, const DimVector& d);

template <class F>
struct SlopeVerdict {
    bool ok = true;
    Slope slopeM;
    Slope slopeN;
    /// A nonzero map m -> n when one exists.
    std::optional<Morphism<F>> witness;
};

/// Fails exactly when slope(m) > slope(n) and Hom(m, n) != 0.
template <class F>
SlopeVerdict<F> slopeOrderCheck(const Representation<F>& m, const Representation<F>& n, const SlopeScale& scale);

template <class F>
struct SlopeChain {
    std::vector<Representation<F>> modules;
    std::vector<Slope> slopes;
    /// inclusions[i]: modules[i] -> modules[i+1].
    std::vector<Morphism<F>> inclusions;
    std::vector<Representation<F>> cokernels;
};

/// M_1 -> M_2 -> ... with M_i in add t_{alpha_i}, built from pool modules.
/// Throws DomainError("unrealizable") naming the first stuck index.
template <class F>
SlopeChain<F> chainTowardSlope(const AlgebraPtr<F>& alg, const std::vector<Rational>& ratios, const SlopeScale& scale,
                               const std::vector<Representation<F>>& pool, Index dimBudget, Rng& rng);

}  // namespace canrep
