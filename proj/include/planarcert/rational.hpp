#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace planarcert {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always kept in lowest terms with a positive denominator.
// Every certified quantity in this library is a Rational; floating point is
// allowed only in progress output, never on a verification path.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long long v) : num_(v) {}
    Rational(BigInt v) : num_(std::move(v)) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_, already_normalized{}); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross-multiplication preserves order.
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical fraction string: "p/q", or just "p" when q == 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" and "p/q"; inverse of to_string.
    static Rational from_string(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    // Approximation for progress output only.
    double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct already_normalized {};
    Rational(BigInt num, BigInt den, already_normalized) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static BigInt parse_int(std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("Rational: empty number in fraction string");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("Rational: sign without digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: bad digit in fraction string");
        return BigInt(std::string(s));
    }

    BigInt num_ = 0;
    BigInt den_ = 1;
};

inline Rational rational(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

} // namespace planarcert
