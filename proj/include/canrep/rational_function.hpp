#pragma once

#include "canrep/polynomial.hpp"

#include <Eigen/Core>

#include <ostream>
#include <stdexcept>
#include <string>

namespace canrep {

/// Element of K(t): a reduced fraction num/den with monic denominator, so that
/// equality of values is equality of representations.
template <class K>
class RationalFunction {
public:
    using Poly = Polynomial<K>;

    RationalFunction() : num_(), den_(K(1)) {}
    RationalFunction(int literal) : num_(K(literal)), den_(K(1)) {}
    explicit RationalFunction(const K& c) : num_(c), den_(c / c) {
        if (num_.isZero()) den_ = Poly(K(1));
    }
    explicit RationalFunction(Poly p) : num_(std::move(p)), den_(K(1)) {
        if (!num_.isZero()) den_ = Poly(num_.leading() / num_.leading());
    }
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_.degree() == 0; }

    RationalFunction inverse() const {
        if (num_.isZero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    RationalFunction& operator*=(const RationalFunction& o) {
        if (num_.isZero() || o.num_.isZero()) return *this = RationalFunction();
        return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -a.num_;
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string toString(const std::string& var = "t") const {
        if (isPolynomial()) return num_.toString(var);
        auto wrap = [&](const Poly& p) {
            std::string s = p.toString(var);
            return (p.degree() >= 1 && s.find_first_of("+-", 1) != std::string::npos) || s.find('/') != std::string::npos
                       ? "(" + s + ")"
                       : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.toString(); }

private:
    void normalize() {
        if (den_.isZero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.isZero()) {
            den_ = Poly(den_.leading() / den_.leading());
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const K lead = den_.leading();
        if (!(lead == lead / lead)) {
            const K inv = (lead / lead) / lead;
            num_ = Poly(inv) * num_;
            den_ = den_.monic();
        }
    }

    Poly num_;
    Poly den_;
};

template <class K>
bool isZero(const RationalFunction<K>& f) {
    return f.isZero();
}

template <class K>
std::string formatScalar(const RationalFunction<K>& f) {
    return f.toString();
}

}  // namespace canrep

namespace Eigen {
template <class K>
struct NumTraits<canrep::RationalFunction<K>> : GenericNumTraits<canrep::RationalFunction<K>> {
    using Real = canrep::RationalFunction<K>;
    using NonInteger = Real;
    using Literal = Real;
    using Nested = Real;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 64
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
