#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canrep {

namespace detail {
template <class K>
bool scalarIsZero(const K& k) {
    return isZero(k);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field K, coefficients low to high.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const K& constant) : c_{constant} { trim(); }

    static Polynomial monomial(const K& coeff, std::size_t degree) {
        std::vector<K> c(degree + 1, coeff - coeff);
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial: zero has no leading coefficient");
        return c_.back();
    }
    bool isMonic() const { return !c_.empty() && c_.back() == leadingOne(); }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        K inv = leadingOne() / c_.back();
        std::vector<K> c = c_;
        for (auto& x : c) x *= inv;
        return Polynomial(std::move(c));
    }

    K evaluate(const K& x) const {
        K acc = x - x;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K k = c_[i] - c_[i];
            for (std::size_t j = 0; j < i; ++j) k += c_[i];
            d[i - 1] = k;
        }
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zeroLike(o));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zeroLike(o));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.isZero() || b.isZero()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const K& s, const Polynomial& a) { return Polynomial(s) * a; }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.isZero()) throw std::domain_error("Polynomial: division by zero");
        Polynomial r = a;
        if (a.degree() < b.degree()) return {Polynomial(), r};
        std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), b.c_.back() - b.c_.back());
        const K lead = b.c_.back();
        while (!r.isZero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            const K f = r.c_.back() / lead;
            q[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Monic greatest common divisor (zero if both are zero).
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.isZero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Human-readable form in the variable `var`, e.g. "t^2-3*t+1".
    std::string toString(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (detail::scalarIsZero(c_[k])) continue;
            std::string coeff = formatScalar(c_[k]);
            bool negative = !coeff.empty() && coeff[0] == '-';
            if (negative) coeff = coeff.substr(1);
            if (!out.empty() || negative) out += negative ? "-" : "+";
            const bool unit = coeff == "1";
            if (k == 0) {
                out += coeff;
            } else {
                if (!unit) out += (coeff.find_first_of("/+-") != std::string::npos ? "(" + coeff + ")" : coeff) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.toString(); }

private:
    static K zeroLike(const Polynomial& o) { return o.c_.empty() ? K(0) : o.c_[0] - o.c_[0]; }
    K leadingOne() const { return c_.back() / c_.back(); }
    void trim() {
        while (!c_.empty() && detail::scalarIsZero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

}  // namespace canrep
