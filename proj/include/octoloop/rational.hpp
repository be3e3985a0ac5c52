#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar on arbitrary-precision integers.
 *
 * Every value is kept in lowest terms with a positive denominator, so
 * equality is plain member comparison and the exhaustive table checks can
 * compare values structurally. No operation ever rounds.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace octoloop {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero())
            throw std::domain_error("division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    bool operator==(const Rational&) const = default;

    std::strong_ordering operator<=>(const Rational& y) const {
        // denominators are positive, so cross-multiplication preserves order
        const BigInt lhs = num_ * y.den_;
        const BigInt rhs = y.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs == rhs) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void reduce() {
        if (den_ == 0)
            throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace octoloop
