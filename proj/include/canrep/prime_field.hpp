#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace canrep {

/// Element of a prime field F_p with p < 2^31 carried alongside the value.
///
/// Values built from bare integer literals (as Eigen does for Zero() and
/// Identity()) start out "unbound" (modulus 0) and adopt the modulus of the
/// first bound operand they meet. Code in this library always constructs
/// bound elements through Field<Fp>.
class Fp {
public:
    Fp() = default;
    Fp(int literal) : value_(literal), modulus_(0) {}
    Fp(std::int64_t v, std::uint32_t p) : modulus_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        v %= static_cast<std::int64_t>(p);
        if (v < 0) v += p;
        value_ = v;
    }

    std::uint32_t modulus() const { return modulus_; }
    bool bound() const { return modulus_ != 0; }
    /// Canonical representative in [0, p) (the raw literal when unbound).
    std::int64_t value() const { return value_; }
    bool isZero() const { return value_ == 0; }
    std::string toString() const { return std::to_string(value_); }

    Fp inverse() const {
        if (modulus_ == 0) {
            if (value_ == 1 || value_ == -1) return *this;
            throw std::domain_error("Fp: cannot invert an unbound literal");
        }
        if (value_ == 0) throw std::domain_error("Fp: division by zero");
        std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::int64_t t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Fp(x0, modulus_);
    }

    Fp& operator+=(const Fp& o) {
        const std::uint32_t p = pick(o);
        if (p == 0) {
            value_ += o.value_;
            return *this;
        }
        std::int64_t s = rebind(p).value_ + o.rebind(p).value_;
        if (s >= p) s -= p;
        value_ = s;
        modulus_ = p;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        const std::uint32_t p = pick(o);
        if (p == 0) {
            value_ -= o.value_;
            return *this;
        }
        std::int64_t s = rebind(p).value_ - o.rebind(p).value_;
        if (s < 0) s += p;
        value_ = s;
        modulus_ = p;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        const std::uint32_t p = pick(o);
        if (p == 0) {
            value_ *= o.value_;
            return *this;
        }
        value_ = (rebind(p).value_ * o.rebind(p).value_) % p;
        modulus_ = p;
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) {
        Fp r = a;
        r.value_ = a.modulus_ ? (a.value_ == 0 ? 0 : a.modulus_ - a.value_) : -a.value_;
        return r;
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint32_t p = a.modulus_ ? a.modulus_ : b.modulus_;
        if (p == 0) return a.value_ == b.value_;
        return a.rebind(p).value_ == b.rebind(p).value_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

private:
    std::uint32_t pick(const Fp& o) const { return modulus_ ? modulus_ : o.modulus_; }
    Fp rebind(std::uint32_t p) const {
        if (p == 0 || modulus_ == p) return *this;
        if (modulus_ != 0) throw std::logic_error("Fp: mixing different moduli");
        return Fp(value_, p);
    }
    std::int64_t value_ = 0;
    std::uint32_t modulus_ = 0;
};

inline bool isZero(const Fp& x) { return x.isZero(); }
inline std::string formatScalar(const Fp& x) { return x.toString(); }

}  // namespace canrep

namespace Eigen {
template <>
struct NumTraits<canrep::Fp> : GenericNumTraits<canrep::Fp> {
    using Real = canrep::Fp;
    using NonInteger = canrep::Fp;
    using Literal = canrep::Fp;
    using Nested = canrep::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
