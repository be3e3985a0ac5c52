#pragma once

/**
 * @file loop16.hpp
 * @brief The 16-element loop of signed basis octonions.
 *
 * The table is derived from octonion multiplication rather than entered by
 * hand, so it cannot drift from the doubling formula. Words evaluate
 * left-normed: ((w1·w2)·w3)···, matching left-to-right operation order.
 */

#include "octonion.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octoloop {

enum class BasisIndex : unsigned char { one = 0, i, j, k, L, Li, Lj, Lk };

inline constexpr std::array<BasisIndex, 8> kAllBasisIndices = {
    BasisIndex::one, BasisIndex::i,  BasisIndex::j,  BasisIndex::k,
    BasisIndex::L,   BasisIndex::Li, BasisIndex::Lj, BasisIndex::Lk};

// The seven nontrivial generators, in table order.
inline constexpr std::array<BasisIndex, 7> kGenerators = {
    BasisIndex::i,  BasisIndex::j,  BasisIndex::k, BasisIndex::L,
    BasisIndex::Li, BasisIndex::Lj, BasisIndex::Lk};

inline std::string_view basis_name(BasisIndex b) {
    return kBasisNames[static_cast<std::size_t>(b)];
}

struct SignedBasis {
    BasisIndex index = BasisIndex::one;
    bool negative = false;

    bool operator==(const SignedBasis&) const = default;
    SignedBasis operator-() const { return {index, !negative}; }
};

inline constexpr SignedBasis kOne{BasisIndex::one, false};

inline std::string name(SignedBasis x) {
    std::string s = x.negative ? "-" : "";
    s += basis_name(x.index);
    return s;
}

/// Inverse of name(): the exact serialized spellings, nothing else.
inline std::optional<SignedBasis> parse_basis_name(std::string_view s) {
    SignedBasis out;
    if (!s.empty() && s.front() == '-') {
        out.negative = true;
        s.remove_prefix(1);
    }
    for (std::size_t slot = 0; slot < 8; ++slot) {
        if (s == kBasisNames[slot]) {
            out.index = static_cast<BasisIndex>(slot);
            return out;
        }
    }
    return std::nullopt;
}

inline Octonion embed(SignedBasis x) {
    return Octonion::unit(static_cast<std::size_t>(x.index), x.negative ? -1 : 1);
}

/// The inverse of embed(), defined exactly on the signed basis octonions.
inline std::optional<SignedBasis> extract(const Octonion& x) {
    const auto c = x.coeffs();
    std::optional<SignedBasis> found;
    for (std::size_t slot = 0; slot < 8; ++slot) {
        if (c[slot].is_zero())
            continue;
        if (found || c[slot].abs() != Rational(1))
            return std::nullopt;
        found = SignedBasis{static_cast<BasisIndex>(slot), c[slot].is_negative()};
    }
    return found;
}

class LoopTable {
public:
    LoopTable() {
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                const Octonion p = Octonion::unit(r) * Octonion::unit(c);
                const auto entry = extract(p);
                if (!entry)
                    throw std::logic_error("basis product is not a signed basis element");
                entries_[r][c] = *entry;
            }
        }
    }

    SignedBasis entry(BasisIndex r, BasisIndex c) const {
        return entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

private:
    std::array<std::array<SignedBasis, 8>, 8> entries_;
};

inline const LoopTable& loop_table() {
    static const LoopTable table;
    return table;
}

inline SignedBasis loop_mul(SignedBasis x, SignedBasis y) {
    SignedBasis r = loop_table().entry(x.index, y.index);
    r.negative = r.negative != (x.negative != y.negative);
    return r;
}

/// Left-normed product of a word; the empty word is +1.
inline SignedBasis eval_word(std::span<const SignedBasis> word) {
    SignedBasis acc = kOne;
    for (const SignedBasis g : word)
        acc = loop_mul(acc, g);
    return acc;
}

/// The three observables of the apparatus state that encodes x. The sign of
/// x plays no role; the index bits carry the whole orientation ledger:
/// bit 2 = flag side (L part present), bit 1 = arrow direction (up for j, k),
/// bit 0 = arrow face (black for i, k).
struct StatePredicates {
    bool pointing_up = false;
    bool flag_right = false;
    bool black_arrowhead = false;

    bool operator==(const StatePredicates&) const = default;
};

inline StatePredicates predicates(SignedBasis x) {
    const auto bits = static_cast<unsigned>(x.index);
    return {(bits & 2u) != 0, (bits & 4u) != 0, (bits & 1u) != 0};
}

} // namespace octoloop
