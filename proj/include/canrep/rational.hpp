#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>

namespace canrep {

/// Exact rational number, always stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den) : q_(num, den) { q_.canonicalize(); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool isZero() const { return sgn(q_) == 0; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    std::string toString() const { return q_.get_str(); }

    Rational inverse() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

private:
    mpq_class q_;
};

inline bool isZero(const Rational& r) { return r.isZero(); }
inline std::string formatScalar(const Rational& r) { return r.toString(); }

}  // namespace canrep

namespace Eigen {
template <>
struct NumTraits<canrep::Rational> : GenericNumTraits<canrep::Rational> {
    using Real = canrep::Rational;
    using NonInteger = canrep::Rational;
    using Literal = canrep::Rational;
    using Nested = canrep::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
