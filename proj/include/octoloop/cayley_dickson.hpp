#pragma once

/**
 * @file cayley_dickson.hpp
 * @brief Generic Cayley–Dickson tower over the rationals, dim 1 to 32.
 *
 * Serves as an independent oracle for the quaternion and octonion tables and
 * exhibits where the construction degenerates: associativity dies at dim 8,
 * alternativity (and with it the absence of zero divisors) at dim 16.
 *
 * Conjugate placement per level: from the quaternions upward the pairing is
 *     (A,B)(C,D) = (AC - D·conj(B), CB + conj(A)·D),
 * below them it is the classical placement
 *     (A,B)(C,D) = (AC - conj(D)·B, DA + B·conj(C)),
 * which reproduces ij = k, jk = i, ki = j on the positional basis. No single
 * placement yields both the classical quaternion table and the doubled
 * octonion table, so the level threshold is part of the convention.
 */

#include "octonion.hpp"
#include "quaternion.hpp"
#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace octoloop {

inline constexpr std::size_t kMaxCDDim = 32;

inline bool is_supported_cd_dim(std::size_t dim) {
    return dim != 0 && dim <= kMaxCDDim && (dim & (dim - 1)) == 0;
}

struct CDElement {
    std::vector<Rational> coeffs;

    CDElement() = default;
    explicit CDElement(std::vector<Rational> c) : coeffs(std::move(c)) {
        if (!is_supported_cd_dim(coeffs.size()))
            throw std::invalid_argument("unsupported Cayley-Dickson dimension");
    }

    std::size_t dim() const { return coeffs.size(); }

    static CDElement zero(std::size_t dim) {
        if (!is_supported_cd_dim(dim))
            throw std::invalid_argument("unsupported Cayley-Dickson dimension");
        return CDElement(std::vector<Rational>(dim));
    }

    static CDElement basis(std::size_t dim, std::size_t index, long long coeff = 1) {
        CDElement e = zero(dim);
        if (index >= dim)
            throw std::out_of_range("basis index exceeds dimension");
        e.coeffs[index] = Rational(coeff);
        return e;
    }

    bool is_zero() const {
        for (const Rational& c : coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool operator==(const CDElement&) const = default;

    CDElement operator-() const {
        CDElement r = *this;
        for (Rational& c : r.coeffs)
            c = -c;
        return r;
    }

    friend CDElement operator+(const CDElement& x, const CDElement& y) {
        if (x.dim() != y.dim())
            throw std::invalid_argument("dimension mismatch");
        CDElement r = x;
        for (std::size_t s = 0; s < r.coeffs.size(); ++s)
            r.coeffs[s] += y.coeffs[s];
        return r;
    }
    friend CDElement operator-(const CDElement& x, const CDElement& y) {
        if (x.dim() != y.dim())
            throw std::invalid_argument("dimension mismatch");
        CDElement r = x;
        for (std::size_t s = 0; s < r.coeffs.size(); ++s)
            r.coeffs[s] -= y.coeffs[s];
        return r;
    }
};

namespace detail {

inline void cd_conj_span(std::span<const Rational> in, std::span<Rational> out) {
    const std::size_t n = in.size();
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const std::size_t h = n / 2;
    cd_conj_span(in.first(h), out.first(h));
    for (std::size_t s = h; s < n; ++s)
        out[s] = -in[s];
}

inline void cd_mul_span(std::span<const Rational> x, std::span<const Rational> y,
                        std::span<Rational> out) {
    const std::size_t n = x.size();
    if (n == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = n / 2;
    const auto A = x.first(h), B = x.subspan(h);
    const auto C = y.first(h), D = y.subspan(h);
    std::vector<Rational> cj(h), t1(h), t2(h);
    if (h >= 4) {
        // (AC - D·conj(B), CB + conj(A)·D)
        cd_conj_span(B, cj);
        cd_mul_span(A, C, t1);
        cd_mul_span(D, cj, t2);
        for (std::size_t s = 0; s < h; ++s)
            out[s] = t1[s] - t2[s];
        cd_conj_span(A, cj);
        cd_mul_span(C, B, t1);
        cd_mul_span(cj, D, t2);
        for (std::size_t s = 0; s < h; ++s)
            out[h + s] = t1[s] + t2[s];
    } else {
        // (AC - conj(D)·B, DA + B·conj(C))
        cd_conj_span(D, cj);
        cd_mul_span(A, C, t1);
        cd_mul_span(cj, B, t2);
        for (std::size_t s = 0; s < h; ++s)
            out[s] = t1[s] - t2[s];
        cd_conj_span(C, cj);
        cd_mul_span(D, A, t1);
        cd_mul_span(B, cj, t2);
        for (std::size_t s = 0; s < h; ++s)
            out[h + s] = t1[s] + t2[s];
    }
}

} // namespace detail

inline CDElement cd_conj(const CDElement& x) {
    CDElement r = CDElement::zero(x.dim());
    detail::cd_conj_span(x.coeffs, r.coeffs);
    return r;
}

inline CDElement cd_mul(const CDElement& x, const CDElement& y) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("dimension mismatch");
    CDElement r = CDElement::zero(x.dim());
    detail::cd_mul_span(x.coeffs, y.coeffs, r.coeffs);
    return r;
}

inline Rational cd_norm(const CDElement& x) {
    Rational n;
    for (const Rational& c : x.coeffs)
        n += c * c;
    return n;
}

struct SignedIndex {
    std::size_t index = 0;
    bool negative = false;
    bool operator==(const SignedIndex&) const = default;
};

using SignedTable = std::vector<std::vector<SignedIndex>>;

namespace detail {

inline std::optional<SignedIndex> extract_signed_index(std::span<const Rational> coeffs) {
    std::optional<SignedIndex> found;
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (coeffs[s].is_zero())
            continue;
        if (found || coeffs[s].abs() != Rational(1))
            return std::nullopt;
        found = SignedIndex{s, coeffs[s].is_negative()};
    }
    return found;
}

} // namespace detail

/// Signed multiplication table of the positive basis vectors; every basis
/// product must itself be a signed basis vector.
inline SignedTable build_table(std::size_t dim) {
    if (!is_supported_cd_dim(dim) || dim > 16)
        throw std::invalid_argument("build_table supports dims 1, 2, 4, 8, 16");
    SignedTable t(dim, std::vector<SignedIndex>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const CDElement p = cd_mul(CDElement::basis(dim, r), CDElement::basis(dim, c));
            const auto e = detail::extract_signed_index(p.coeffs);
            if (!e)
                throw std::logic_error("basis product is not a signed basis vector");
            t[r][c] = *e;
        }
    }
    return t;
}

/// 4x4 table computed directly from Quaternion multiplication.
inline SignedTable quaternion_reference_table() {
    SignedTable t(4, std::vector<SignedIndex>(4));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const auto p = (Quaternion::unit(r) * Quaternion::unit(c)).coeffs();
            const auto e = detail::extract_signed_index(p);
            if (!e)
                throw std::logic_error("quaternion basis product is not signed basis");
            t[r][c] = *e;
        }
    }
    return t;
}

/// 8x8 table computed directly from Octonion multiplication.
inline SignedTable octonion_reference_table() {
    SignedTable t(8, std::vector<SignedIndex>(8));
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const auto p = (Octonion::unit(r) * Octonion::unit(c)).coeffs();
            const auto e = detail::extract_signed_index(p);
            if (!e)
                throw std::logic_error("octonion basis product is not signed basis");
            t[r][c] = *e;
        }
    }
    return t;
}

struct TableMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    bool operator==(const TableMismatch&) const = default;
};

inline std::vector<TableMismatch> diff_tables(const SignedTable& a, const SignedTable& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("table size mismatch");
    std::vector<TableMismatch> out;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c)
            if (a[r][c] != b[r][c])
                out.push_back({r, c});
    return out;
}

/// Entry-by-entry comparison of the doubled table with the one generated
/// directly from the hand-written algebra; empty result means agreement.
inline std::vector<TableMismatch> compare_tables(std::size_t dim) {
    switch (dim) {
    case 4: return diff_tables(build_table(4), quaternion_reference_table());
    case 8: return diff_tables(build_table(8), octonion_reference_table());
    default: throw std::invalid_argument("compare_tables supports dims 4 and 8");
    }
}

struct ZeroDivisorPair {
    CDElement x;
    CDElement y;
};

namespace detail {

// Candidate with at most two nonzero coefficients; coeff values scan
// 1, -1, 2, -2, ... up to the bound.
struct SparseCandidate {
    std::size_t idx[2];
    long long val[2];
    int terms;
};

template <typename Fn>
inline bool scan_sparse_candidates(std::size_t dim, long long bound, Fn&& fn) {
    std::vector<long long> values;
    for (long long v = 1; v <= bound; ++v) {
        values.push_back(v);
        values.push_back(-v);
    }
    for (std::size_t a = 0; a < dim; ++a)
        for (long long va : values)
            if (fn(SparseCandidate{{a, 0}, {va, 0}, 1}))
                return true;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b)
            for (long long va : values)
                for (long long vb : values)
                    if (fn(SparseCandidate{{a, b}, {va, vb}, 2}))
                        return true;
    return false;
}

} // namespace detail

/// Searches elements with at most two nonzero coefficients in
/// {-bound, ..., bound} for a pair with product exactly zero. Products of
/// the candidates expand through the signed basis table (at most four terms),
/// so the scan never multiplies full elements; callers re-verify the result
/// with cd_mul.
inline std::optional<ZeroDivisorPair> find_zero_divisor(std::size_t dim, long long bound) {
    if (dim != 8 && dim != 16)
        throw std::invalid_argument("find_zero_divisor supports dims 8 and 16");
    if (bound < 1)
        throw std::invalid_argument("coefficient bound must be at least 1");
    const SignedTable table = build_table(dim);

    const auto realize = [dim](const detail::SparseCandidate& c) {
        CDElement e = CDElement::zero(dim);
        for (int t = 0; t < c.terms; ++t)
            e.coeffs[c.idx[t]] = Rational(c.val[t]);
        return e;
    };

    std::optional<ZeroDivisorPair> result;
    detail::scan_sparse_candidates(dim, bound, [&](const detail::SparseCandidate& x) {
        return detail::scan_sparse_candidates(dim, bound, [&](const detail::SparseCandidate& y) {
            std::vector<long long> acc(dim, 0);
            for (int s = 0; s < x.terms; ++s) {
                for (int t = 0; t < y.terms; ++t) {
                    const SignedIndex e = table[x.idx[s]][y.idx[t]];
                    acc[e.index] += (e.negative ? -1 : 1) * x.val[s] * y.val[t];
                }
            }
            for (long long v : acc)
                if (v != 0)
                    return false;
            result = ZeroDivisorPair{realize(x), realize(y)};
            return true;
        });
    });
    return result;
}

/// Terms like "e1 + e10 - 2e4"; "0" for the zero element.
inline std::string cd_to_string(const CDElement& x) {
    std::string out;
    for (std::size_t s = 0; s < x.coeffs.size(); ++s) {
        const Rational& c = x.coeffs[s];
        if (c.is_zero())
            continue;
        if (out.empty())
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? " - " : " + ";
        const Rational mag = c.abs();
        if (!mag.is_one())
            out += mag.str();
        out += "e" + std::to_string(s);
    }
    return out.empty() ? "0" : out;
}

} // namespace octoloop
