#pragma once

#include "canrep/prime_field.hpp"
#include "canrep/rational.hpp"
#include "canrep/rational_function.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace canrep {

using Rng = std::mt19937_64;

/// Which exact field a computation runs over.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField, RationalFunctions };
    Kind kind = Kind::Rationals;
    /// Prime modulus for PrimeField; for RationalFunctions, 0 means Q(t) and a
    /// prime means F_p(t).
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {Kind::Rationals, 0}; }
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec functionsOverRationals() { return {Kind::RationalFunctions, 0}; }
    static FieldSpec functionsOverPrime(std::uint32_t p);

    std::string name() const;
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.kind == b.kind && a.p == b.p; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

bool isPrime(std::uint64_t n);

/// Error raised when text does not denote a scalar of the expected field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class F>
class Field;

template <>
class Field<Rational> {
public:
    using Scalar = Rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational fromInt(long v) const { return Rational(v); }
    Rational fromDecimal(const std::string& digits) const { return Rational::parse(digits); }
    /// Small integers; enough for Schwartz-Zippel style sampling.
    Rational random(Rng& rng) const {
        std::uniform_int_distribution<long> d(-97, 97);
        return Rational(d(rng));
    }
    bool finite() const { return false; }
    std::uint64_t order() const { return 0; }
    Rational element(std::uint64_t i) const { return Rational(static_cast<long>(i)); }
    unsigned characteristic() const { return 0; }
    Rational parse(const std::string& text) const;
    std::string format(const Rational& x) const { return x.toString(); }
    friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
class Field<Fp> {
public:
    using Scalar = Fp;

    explicit Field(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec::prime(p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp fromInt(long v) const { return Fp(v, p_); }
    Fp fromDecimal(const std::string& digits) const;
    Fp random(Rng& rng) const {
        std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
        return Fp(d(rng), p_);
    }
    bool finite() const { return true; }
    std::uint64_t order() const { return p_; }
    Fp element(std::uint64_t i) const { return Fp(static_cast<std::int64_t>(i % p_), p_); }
    unsigned characteristic() const { return p_; }
    Fp parse(const std::string& text) const;
    std::string format(const Fp& x) const { return bind(x).toString(); }
    Fp bind(const Fp& x) const { return x.bound() ? x : Fp(x.value(), p_); }
    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

template <class K>
class Field<RationalFunction<K>> {
public:
    using Scalar = RationalFunction<K>;
    using Poly = Polynomial<K>;

    explicit Field(Field<K> base) : base_(std::move(base)) {}

    const Field<K>& base() const { return base_; }
    FieldSpec spec() const {
        return base_.characteristic() == 0 ? FieldSpec::functionsOverRationals()
                                           : FieldSpec::functionsOverPrime(base_.characteristic());
    }
    Scalar zero() const { return Scalar(Poly(), Poly(base_.one())); }
    Scalar one() const { return Scalar(base_.one()); }
    Scalar fromInt(long v) const { return constant(base_.fromInt(v)); }
    Scalar fromDecimal(const std::string& digits) const { return constant(base_.fromDecimal(digits)); }
    Scalar constant(const K& c) const { return isZero(c) ? zero() : Scalar(c); }
    /// The transcendental generator t.
    Scalar variable() const { return Scalar(Poly::monomial(base_.one(), 1)); }
    Scalar random(Rng& rng) const { return constant(base_.random(rng)); }
    bool finite() const { return false; }
    std::uint64_t order() const { return 0; }
    Scalar element(std::uint64_t i) const { return fromInt(static_cast<long>(i)); }
    unsigned characteristic() const { return base_.characteristic(); }
    Scalar parse(const std::string& text) const;
    std::string format(const Scalar& x) const { return x.toString(); }
    friend bool operator==(const Field& a, const Field& b) { return a.base_ == b.base_; }

private:
    Field<K> base_;
};

/// Parses an arithmetic expression in the variable t (integers, + - * / ^,
/// parentheses, implicit multiplication) into an element of K(t).
template <class K>
RationalFunction<K> parseRationalFunction(const Field<K>& base, const std::string& text);

template <class K>
typename Field<RationalFunction<K>>::Scalar Field<RationalFunction<K>>::parse(const std::string& text) const {
    return parseRationalFunction(base_, text);
}

/// Parses a polynomial in t over K; rejects proper fractions.
template <class K>
Polynomial<K> parsePolynomial(const Field<K>& base, const std::string& text) {
    RationalFunction<K> f = parseRationalFunction(base, text);
    if (!f.isPolynomial()) throw ParseError("not a polynomial: " + text);
    return f.numerator();
}

using QField = Field<Rational>;
using FpField = Field<Fp>;
using QtField = Field<RationalFunction<Rational>>;
using FptField = Field<RationalFunction<Fp>>;

}  // namespace canrep

/// Expands X(F) once per supported scalar type; used for explicit instantiation.
#define CANREP_FOR_EACH_SCALAR(X)             \
    X(::canrep::Rational)                     \
    X(::canrep::Fp)                           \
    X(::canrep::RationalFunction<::canrep::Rational>) \
    X(::canrep::RationalFunction<::canrep::Fp>)
