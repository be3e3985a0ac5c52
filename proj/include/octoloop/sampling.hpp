#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded deterministic sampling for the random property suites.
 *
 * Draws come straight from mt19937_64 with modulo reduction so the streams
 * (and therefore the reports) are identical across platforms;
 * std::uniform_int_distribution would not be.
 */

#include "expr.hpp"
#include "loop16.hpp"
#include "octonion.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace octoloop {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool flip() { return (rng_() & 1u) != 0; }

    /// Value in [-9, 9] with a small denominator.
    Rational rational() { return Rational(uniform(-9, 9), uniform(1, 3)); }

    Quaternion quaternion() { return {rational(), rational(), rational(), rational()}; }

    Octonion octonion() { return {quaternion(), quaternion()}; }

    SignedBasis signed_basis() {
        return {static_cast<BasisIndex>(uniform(0, 7)), flip()};
    }

    BasisIndex generator() { return kGenerators[static_cast<std::size_t>(uniform(0, 6))]; }

    std::vector<BasisIndex> generator_word(std::size_t min_len, std::size_t max_len) {
        std::vector<BasisIndex> w(static_cast<std::size_t>(
            uniform(static_cast<long long>(min_len), static_cast<long long>(max_len))));
        for (BasisIndex& g : w)
            g = generator();
        return w;
    }

    std::vector<SignedBasis> basis_word(std::size_t min_len, std::size_t max_len) {
        std::vector<SignedBasis> w(static_cast<std::size_t>(
            uniform(static_cast<long long>(min_len), static_cast<long long>(max_len))));
        for (SignedBasis& g : w)
            g = signed_basis();
        return w;
    }

    /// Random canonical AST: nonnegative rational leaves (sign lives in
    /// negate nodes), all node kinds reachable.
    ExprPtr expr_ast(int max_depth) {
        if (max_depth <= 0) {
            if (flip())
                return make_basis(static_cast<BasisIndex>(uniform(0, 7)));
            return make_rational(Rational(uniform(0, 9), uniform(1, 9)));
        }
        switch (uniform(0, 6)) {
        case 0: return make_basis(static_cast<BasisIndex>(uniform(0, 7)));
        case 1: return make_rational(Rational(uniform(0, 9), uniform(1, 9)));
        case 2: return make_negate(expr_ast(max_depth - 1));
        case 3: return make_conj(expr_ast(max_depth - 1));
        case 4: return make_sum(expr_ast(max_depth - 1), expr_ast(max_depth - 1));
        case 5: return make_difference(expr_ast(max_depth - 1), expr_ast(max_depth - 1));
        default: return make_product(expr_ast(max_depth - 1), expr_ast(max_depth - 1));
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace octoloop
