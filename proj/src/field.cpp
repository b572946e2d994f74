#include "canrep/field.hpp"

#include <cctype>

namespace canrep {

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    const std::size_t slash = s.find('/');
    auto digitsOnly = [&](std::size_t a, std::size_t b) {
        if (a >= b) return false;
        for (std::size_t i = a; i < b; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const std::size_t numEnd = slash == std::string::npos ? s.size() : slash;
    if (!digitsOnly(start, numEnd) || (slash != std::string::npos && !digitsOnly(slash + 1, s.size())))
        throw ParseError("malformed rational: " + text);
    if (s[0] == '+') s = s.substr(1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (isZero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!isPrime(p) || p >= (1u << 31)) throw std::invalid_argument("FieldSpec: p must be a prime below 2^31");
    return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::functionsOverPrime(std::uint32_t p) {
    if (!isPrime(p) || p >= (1u << 31)) throw std::invalid_argument("FieldSpec: p must be a prime below 2^31");
    return {Kind::RationalFunctions, p};
}

std::string FieldSpec::name() const {
    switch (kind) {
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(p);
        case Kind::RationalFunctions: return p == 0 ? "Q(t)" : "F" + std::to_string(p) + "(t)";
    }
    return "?";
}

Rational Field<Rational>::parse(const std::string& text) const { return Rational::parse(text); }

Field<Fp>::Field(std::uint32_t p) : p_(p) {
    if (!isPrime(p) || p >= (1u << 31)) throw std::invalid_argument("Field<Fp>: p must be a prime below 2^31");
}

Fp Field<Fp>::fromDecimal(const std::string& digits) const {
    std::int64_t v = 0;
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("malformed integer: " + digits);
        v = (v * 10 + (ch - '0')) % p_;
    }
    return Fp(v, p_);
}

Fp Field<Fp>::parse(const std::string& text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty F_p element");
    const bool negative = s[0] == '-';
    Fp v = fromDecimal(negative || s[0] == '+' ? s.substr(1) : s);
    return negative ? -v : v;
}

namespace {

template <class K>
class ExpressionParser {
public:
    using RF = RationalFunction<K>;
    ExpressionParser(const Field<K>& base, const std::string& text) : base_(base), field_(base), s_(text) {}

    RF run() {
        RF v = expr();
        skip();
        if (pos_ != s_.size()) fail();
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail() { throw ParseError("malformed expression: " + s_); }

    RF expr() {
        RF v = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            RF rhs = term();
            v = c == '+' ? v + rhs : v - rhs;
        }
        return v;
    }
    RF term() {
        RF v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                RF rhs = unary();
                if (c == '/' && rhs.isZero()) fail();
                v = c == '*' ? v * rhs : v / rhs;
            } else if (c == '(' || c == 't' || c == 'T' || std::isdigit(static_cast<unsigned char>(c))) {
                v = v * power();
            } else {
                return v;
            }
        }
    }
    RF unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }
    RF power() {
        RF base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_ || pos_ - start > 4) fail();
            const int e = std::stoi(s_.substr(start, pos_ - start));
            RF r = field_.one();
            for (int i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }
    RF atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RF v = expr();
            if (peek() != ')') fail();
            ++pos_;
            return v;
        }
        if (c == 't' || c == 'T') {
            ++pos_;
            return field_.variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return field_.fromDecimal(s_.substr(start, pos_ - start));
        }
        fail();
    }

    const Field<K>& base_;
    Field<RationalFunction<K>> field_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

template <class K>
RationalFunction<K> parseRationalFunction(const Field<K>& base, const std::string& text) {
    return ExpressionParser<K>(base, text).run();
}

template RationalFunction<Rational> parseRationalFunction(const Field<Rational>&, const std::string&);
template RationalFunction<Fp> parseRationalFunction(const Field<Fp>&, const std::string&);

}  // namespace canrep
