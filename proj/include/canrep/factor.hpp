#pragma once

#include "canrep/field.hpp"
#include "canrep/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace canrep {

/// Product of the distinct monic irreducible factors of p (p nonzero).
/// Empty when the field gives no way to extract p-th roots.
template <class F>
std::optional<Polynomial<F>> squarefreePart(const Polynomial<F>& p, const Field<F>& k);

/// Distinct monic irreducible factors of a squarefree polynomial, or nothing
/// when the field has no complete factoring routine for this input
/// (Q: inputs that do not reduce to degree <= 3 after removing rational
/// roots; Q(t) and F_p(t): anything beyond linear).
template <class F>
std::optional<std::vector<Polynomial<F>>> irreducibleFactors(const Polynomial<F>& squarefree, const Field<F>& k,
                                                            Rng& rng);

template <>
std::optional<Polynomial<Rational>> squarefreePart(const Polynomial<Rational>&, const Field<Rational>&);
template <>
std::optional<Polynomial<Fp>> squarefreePart(const Polynomial<Fp>&, const Field<Fp>&);
template <>
std::optional<Polynomial<RationalFunction<Rational>>> squarefreePart(const Polynomial<RationalFunction<Rational>>&,
                                                                     const Field<RationalFunction<Rational>>&);
template <>
std::optional<Polynomial<RationalFunction<Fp>>> squarefreePart(const Polynomial<RationalFunction<Fp>>&,
                                                               const Field<RationalFunction<Fp>>&);
template <>
std::optional<std::vector<Polynomial<Rational>>> irreducibleFactors(const Polynomial<Rational>&, const Field<Rational>&, Rng&);
template <>
std::optional<std::vector<Polynomial<Fp>>> irreducibleFactors(const Polynomial<Fp>&, const Field<Fp>&, Rng&);
template <>
std::optional<std::vector<Polynomial<RationalFunction<Rational>>>> irreducibleFactors(
    const Polynomial<RationalFunction<Rational>>&, const Field<RationalFunction<Rational>>&, Rng&);
template <>
std::optional<std::vector<Polynomial<RationalFunction<Fp>>>> irreducibleFactors(const Polynomial<RationalFunction<Fp>>&,
                                                                               const Field<RationalFunction<Fp>>&, Rng&);

/// Irreducibility of a polynomial, when decidable by the routines above.
template <class F>
std::optional<bool> isIrreducible(const Polynomial<F>& p, const Field<F>& k, Rng& rng);

/// a^e mod m.
template <class F>
Polynomial<F> powmod(Polynomial<F> a, std::uint64_t e, const Polynomial<F>& m) {
    Polynomial<F> result = Polynomial<F>(m.leading() / m.leading()) % m;
    a = a % m;
    while (e > 0) {
        if (e & 1) result = (result * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return result;
}

/// All monic irreducible polynomials of the given degree over a prime field.
std::vector<Polynomial<Fp>> monicIrreducibles(const Field<Fp>& k, int degree);

}  // namespace canrep
