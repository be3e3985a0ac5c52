#pragma once

/**
 * @file quaternion.hpp
 * @brief Exact quaternions a + bi + cj + dk and the covering map onto
 *        rational rotation matrices.
 *
 * Multiplication follows i^2 = j^2 = k^2 = ijk = -1, so ij = k, jk = i,
 * ki = j and the reversed products carry a minus sign.
 */

#include "rational.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace octoloop {

struct Quaternion {
    Rational a, b, c, d; // coefficients of 1, i, j, k

    Quaternion() = default;
    Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {1, 0, 0, 0}; }

    /// Basis unit by coefficient slot: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
    static Quaternion unit(std::size_t slot, int sign = 1) {
        Quaternion q;
        Rational s{sign};
        switch (slot) {
        case 0: q.a = s; break;
        case 1: q.b = s; break;
        case 2: q.c = s; break;
        case 3: q.d = s; break;
        default: throw std::out_of_range("quaternion basis slot");
        }
        return q;
    }

    std::array<Rational, 4> coeffs() const { return {a, b, c, d}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

    bool operator==(const Quaternion&) const = default;

    Quaternion operator-() const { return {-a, -b, -c, -d}; }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
    }
    friend Quaternion operator*(const Rational& s, const Quaternion& q) {
        return {s * q.a, s * q.b, s * q.c, s * q.d};
    }
};

inline Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

inline Rational norm(const Quaternion& q) {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

/// 3x3 rational matrix; the image of a unit quaternion is always special
/// orthogonal, exactly.
struct RotationMatrix {
    std::array<std::array<Rational, 3>, 3> m{};

    static RotationMatrix identity() {
        RotationMatrix r;
        for (std::size_t i = 0; i < 3; ++i)
            r.m[i][i] = 1;
        return r;
    }

    bool operator==(const RotationMatrix&) const = default;

    RotationMatrix operator*(const RotationMatrix& o) const {
        RotationMatrix r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    r.m[i][j] += m[i][k] * o.m[k][j];
        return r;
    }

    RotationMatrix transposed() const {
        RotationMatrix r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }

    Rational det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    bool is_special_orthogonal() const {
        return transposed() * *this == identity() && det() == Rational(1);
    }
};

/// Image of a unit quaternion under the double cover of the rotation group:
/// column m holds the coefficients of q * e_m * conj(q) for e_m in {i, j, k}.
/// Rejects non-unit input.
inline RotationMatrix rotation_matrix(const Quaternion& q) {
    if (norm(q) != Rational(1))
        throw std::domain_error("rotation_matrix requires a unit quaternion");
    RotationMatrix r;
    for (std::size_t col = 0; col < 3; ++col) {
        const Quaternion image = q * Quaternion::unit(col + 1) * conj(q);
        // conjugation preserves pure quaternions
        if (!image.a.is_zero())
            throw std::logic_error("conjugation action left the pure subspace");
        r.m[0][col] = image.b;
        r.m[1][col] = image.c;
        r.m[2][col] = image.d;
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.a << ", " << q.b << ", " << q.c << ", " << q.d << ")";
}

} // namespace octoloop
