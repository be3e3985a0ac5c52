#pragma once

/**
 * @file octonion.hpp
 * @brief Exact octonions stored as quaternion pairs a + L b.
 *
 * The product is the one doubling step
 *     (A + LB)(C + LD) = (AC - D·conj(B)) + L(CB + conj(A)·D),
 * which fixes the whole multiplication once the quaternion table is fixed.
 * The product is not associative; associator() measures the failure.
 */

#include "quaternion.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octoloop {

inline constexpr std::array<std::string_view, 8> kBasisNames = {
    "1", "i", "j", "k", "L", "Li", "Lj", "Lk"};

struct Octonion {
    Quaternion a; // quaternion part
    Quaternion b; // L part; the value is a + L b

    Octonion() = default;
    Octonion(Quaternion a_, Quaternion b_) : a(std::move(a_)), b(std::move(b_)) {}

    static Octonion zero() { return {}; }
    static Octonion one() { return {Quaternion::one(), {}}; }
    static Octonion scalar(Rational r) { return {{std::move(r), 0, 0, 0}, {}}; }

    /// Basis unit by flat slot in the order 1, i, j, k, L, Li, Lj, Lk.
    static Octonion unit(std::size_t slot, int sign = 1) {
        if (slot >= 8)
            throw std::out_of_range("octonion basis slot");
        Octonion o;
        if (slot < 4)
            o.a = Quaternion::unit(slot, sign);
        else
            o.b = Quaternion::unit(slot - 4, sign);
        return o;
    }

    /// Flat coefficient view in the order 1, i, j, k, L, Li, Lj, Lk.
    std::array<Rational, 8> coeffs() const {
        return {a.a, a.b, a.c, a.d, b.a, b.b, b.c, b.d};
    }

    static Octonion from_coeffs(const std::array<Rational, 8>& c) {
        return {Quaternion(c[0], c[1], c[2], c[3]), Quaternion(c[4], c[5], c[6], c[7])};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    bool operator==(const Octonion&) const = default;

    Octonion operator-() const { return {-a, -b}; }

    friend Octonion operator+(const Octonion& x, const Octonion& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Octonion operator-(const Octonion& x, const Octonion& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Octonion operator*(const Octonion& x, const Octonion& y) {
        return {x.a * y.a - y.b * conj(x.b), y.a * x.b + conj(x.a) * y.b};
    }
    friend Octonion operator*(const Rational& s, const Octonion& x) {
        return {s * x.a, s * x.b};
    }
};

inline Octonion conj(const Octonion& x) { return {conj(x.a), -x.b}; }

inline Rational norm(const Octonion& x) { return norm(x.a) + norm(x.b); }

inline Octonion inverse(const Octonion& x) {
    if (x.is_zero())
        throw std::domain_error("inverse of the zero octonion");
    return norm(x).reciprocal() * conj(x);
}

inline Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
    return (x * y) * z - x * (y * z);
}

/// Signed linear combination over 1, i, j, k, L, Li, Lj, Lk, zero terms
/// omitted; "0" for the zero value. Example: "-2Li", "1 - 2i".
inline std::string to_string(const Octonion& x) {
    const auto c = x.coeffs();
    std::string out;
    for (std::size_t slot = 0; slot < 8; ++slot) {
        if (c[slot].is_zero())
            continue;
        const bool neg = c[slot].is_negative();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const Rational mag = c[slot].abs();
        if (slot == 0)
            out += mag.str();
        else {
            if (!mag.is_one())
                out += mag.str();
            out += kBasisNames[slot];
        }
    }
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Octonion& x) {
    return os << to_string(x);
}

} // namespace octoloop
