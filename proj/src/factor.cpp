#include "canrep/factor.hpp"

#include <algorithm>
#include <functional>

namespace canrep {

namespace {

template <class F>
Polynomial<F> lcm(const Polynomial<F>& a, const Polynomial<F>& b) {
    return ((a * b) / gcd(a, b)).monic();
}

Polynomial<Fp> pthRoot(const Polynomial<Fp>& p, std::uint32_t q) {
    std::vector<Fp> c;
    const auto& src = p.coeffs();
    for (std::size_t i = 0; i < src.size(); i += q) c.push_back(src[i]);
    return Polynomial<Fp>(std::move(c));
}

std::vector<Polynomial<Fp>> equalDegreeSplit(const Polynomial<Fp>& g, int d, const Field<Fp>& k, Rng& rng) {
    const int n = g.degree();
    if (n == d) return {g.monic()};
    const std::uint32_t p = k.modulus();
    const Polynomial<Fp> one(k.one());
    for (;;) {
        std::vector<Fp> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = k.random(rng);
        Polynomial<Fp> a(std::move(c));
        if (a.degree() < 1) continue;
        Polynomial<Fp> b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            Polynomial<Fp> term = a % g;
            b = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b += term;
            }
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            Polynomial<Fp> frob = a % g, norm = a % g;
            for (int i = 1; i < d; ++i) {
                frob = powmod(frob, p, g);
                norm = (norm * frob) % g;
            }
            b = powmod(norm, (p - 1) / 2, g) - one;
        }
        Polynomial<Fp> h = gcd(b, g);
        if (h.degree() <= 0 || h.degree() >= n) continue;
        auto left = equalDegreeSplit(h, d, k, rng);
        auto right = equalDegreeSplit(g / h, d, k, rng);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
}

std::vector<Polynomial<Fp>> factorSquarefreeFp(Polynomial<Fp> f, const Field<Fp>& k, Rng& rng) {
    std::vector<Polynomial<Fp>> out;
    f = f.monic();
    const Polynomial<Fp> x = Polynomial<Fp>::monomial(k.one(), 1);
    Polynomial<Fp> h = x % f;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = powmod(h, k.modulus(), f);
        Polynomial<Fp> g = gcd(h - x, f);
        if (g.degree() > 0) {
            auto parts = equalDegreeSplit(g, d, k, rng);
            out.insert(out.end(), parts.begin(), parts.end());
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back(f.monic());
    return out;
}

mpz_class absz(const mpz_class& z) { return z < 0 ? mpz_class(-z) : z; }

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::optional<std::vector<Polynomial<Rational>>> factorSquarefreeQ(Polynomial<Rational> f) {
    std::vector<Polynomial<Rational>> out;
    f = f.monic();
    // strip x factors, then rational roots via the rational root theorem
    if (f.degree() >= 1 && f.coeff(0).isZero()) {
        out.push_back(Polynomial<Rational>::monomial(Rational(1), 1));
        f = f / out.back();
    }
    if (f.degree() >= 1) {
        mpz_class l = 1;
        for (const auto& c : f.coeffs()) l = lcm(l, c.denominator());
        const mpz_class a0 = absz((f.coeff(0) * Rational(mpq_class(l))).numerator());
        const mpz_class an = absz((f.leading() * Rational(mpq_class(l))).numerator());
        if (a0 > mpz_class("1000000000000") || an > mpz_class("1000000000000")) return std::nullopt;
        for (const auto& num : divisors(a0)) {
            for (const auto& den : divisors(an)) {
                for (int s : {1, -1}) {
                    if (f.degree() < 1) break;
                    Rational r(mpq_class(s * num, den));
                    if (f.evaluate(r).isZero()) {
                        Polynomial<Rational> lin({-r, Rational(1)});
                        out.push_back(lin);
                        f = f / lin;
                    }
                }
            }
        }
    }
    if (f.degree() >= 4) return std::nullopt;
    if (f.degree() >= 1) out.push_back(f.monic());
    return out;
}

}  // namespace

template <>
std::optional<Polynomial<Rational>> squarefreePart(const Polynomial<Rational>& p, const Field<Rational>&) {
    if (p.degree() <= 0) return Polynomial<Rational>(Rational(1));
    return (p / gcd(p, p.derivative())).monic();
}

template <>
std::optional<Polynomial<Fp>> squarefreePart(const Polynomial<Fp>& p, const Field<Fp>& k) {
    if (p.degree() <= 0) return Polynomial<Fp>(k.one());
    const Polynomial<Fp> d = p.derivative();
    if (d.isZero()) return squarefreePart(pthRoot(p, k.modulus()), k);
    const Polynomial<Fp> c = gcd(p, d);
    const Polynomial<Fp> w = (p / c).monic();
    return lcm(w, *squarefreePart(c, k));
}

template <class K>
std::optional<Polynomial<RationalFunction<K>>> squarefreePartRF(const Polynomial<RationalFunction<K>>& p,
                                                                const Field<RationalFunction<K>>& k) {
    if (p.degree() <= 0) return Polynomial<RationalFunction<K>>(k.one());
    const auto d = p.derivative();
    if (d.isZero()) return std::nullopt;
    const auto c = gcd(p, d);
    if (k.characteristic() != 0 && c.degree() > 0) return std::nullopt;
    return (p / c).monic();
}

template <>
std::optional<Polynomial<RationalFunction<Rational>>> squarefreePart(const Polynomial<RationalFunction<Rational>>& p,
                                                                     const Field<RationalFunction<Rational>>& k) {
    return squarefreePartRF(p, k);
}

template <>
std::optional<Polynomial<RationalFunction<Fp>>> squarefreePart(const Polynomial<RationalFunction<Fp>>& p,
                                                               const Field<RationalFunction<Fp>>& k) {
    return squarefreePartRF(p, k);
}

template <>
std::optional<std::vector<Polynomial<Fp>>> irreducibleFactors(const Polynomial<Fp>& f, const Field<Fp>& k, Rng& rng) {
    if (f.degree() <= 0) return std::vector<Polynomial<Fp>>{};
    return factorSquarefreeFp(f, k, rng);
}

template <>
std::optional<std::vector<Polynomial<Rational>>> irreducibleFactors(const Polynomial<Rational>& f, const Field<Rational>&,
                                                                    Rng&) {
    if (f.degree() <= 0) return std::vector<Polynomial<Rational>>{};
    return factorSquarefreeQ(f);
}

template <>
std::optional<std::vector<Polynomial<RationalFunction<Rational>>>> irreducibleFactors(
    const Polynomial<RationalFunction<Rational>>& f, const Field<RationalFunction<Rational>>&, Rng&) {
    if (f.degree() <= 0) return std::vector<Polynomial<RationalFunction<Rational>>>{};
    if (f.degree() == 1) return std::vector{f.monic()};
    return std::nullopt;
}

template <>
std::optional<std::vector<Polynomial<RationalFunction<Fp>>>> irreducibleFactors(
    const Polynomial<RationalFunction<Fp>>& f, const Field<RationalFunction<Fp>>&, Rng&) {
    if (f.degree() <= 0) return std::vector<Polynomial<RationalFunction<Fp>>>{};
    if (f.degree() == 1) return std::vector{f.monic()};
    return std::nullopt;
}

template <class F>
std::optional<bool> isIrreducible(const Polynomial<F>& p, const Field<F>& k, Rng& rng) {
    if (p.degree() < 1) return false;
    auto r = squarefreePart(p, k);
    if (!r) return std::nullopt;
    if (r->degree() != p.degree()) return false;
    auto factors = irreducibleFactors(*r, k, rng);
    if (!factors) return std::nullopt;
    return factors->size() == 1;
}

template std::optional<bool> isIrreducible(const Polynomial<Rational>&, const Field<Rational>&, Rng&);
template std::optional<bool> isIrreducible(const Polynomial<Fp>&, const Field<Fp>&, Rng&);
template std::optional<bool> isIrreducible(const Polynomial<RationalFunction<Rational>>&,
                                           const Field<RationalFunction<Rational>>&, Rng&);
template std::optional<bool> isIrreducible(const Polynomial<RationalFunction<Fp>>&, const Field<RationalFunction<Fp>>&,
                                           Rng&);

std::vector<Polynomial<Fp>> monicIrreducibles(const Field<Fp>& k, int degree) {
    std::vector<Polynomial<Fp>> out;
    const std::uint64_t p = k.modulus();
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= p;
    Rng rng(0x5eed);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Fp> c(static_cast<std::size_t>(degree + 1), k.zero());
        std::uint64_t x = code;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<std::size_t>(i)] = k.element(x % p);
            x /= p;
        }
        c[static_cast<std::size_t>(degree)] = k.one();
        Polynomial<Fp> poly(std::move(c));
        if (*isIrreducible(poly, k, rng)) out.push_back(poly);
    }
    return out;
}

}  // namespace canrep
