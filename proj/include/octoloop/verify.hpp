#pragma once

/**
 * @file verify.hpp
 * @brief Verification suites shared by the CLI and the acceptance runner.
 *
 * Each suite returns its name, a pass flag, the number of individual checks
 * it ran and a short detail line (counts on success, the first
 * counterexample on failure). Everything is exact; there are no tolerances.
 */

#include "apparatus.hpp"
#include "cayley_dickson.hpp"
#include "expr.hpp"
#include "loop16.hpp"
#include "octonion.hpp"
#include "quaternion.hpp"
#include "sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace octoloop {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::size_t checks = 0;
    std::string detail;
};

namespace detail {

inline void fail(SuiteResult& r, const std::string& counterexample) {
    if (r.pass) {
        r.pass = false;
        r.detail = counterexample;
    }
}

} // namespace detail

/// The five L-identities over x, y in {i, j, k}, plus the defining powers.
inline SuiteResult verify_identity_suite() {
    SuiteResult r;
    r.name = "identity-suite";
    const Octonion L = Octonion::unit(4);
    const Octonion minus_one = -Octonion::one();

    ++r.checks;
    if (L * L != minus_one)
        detail::fail(r, "LL != -1");
    for (std::size_t xs = 1; xs <= 3; ++xs) {
        const Octonion x = Octonion::unit(xs);
        ++r.checks;
        if (x * L != -(L * x))
            detail::fail(r, "xL != -Lx for x=" + std::string(kBasisNames[xs]));
        for (std::size_t ys = 1; ys <= 3; ++ys) {
            const Octonion y = Octonion::unit(ys);
            const std::string pair = std::string(kBasisNames[xs]) + "," + std::string(kBasisNames[ys]);
            ++r.checks;
            if ((L * x) * y != L * (y * x))
                detail::fail(r, "(Lx)y != L(yx) for " + pair);
            ++r.checks;
            if ((L * x) * (L * y) != y * x)
                detail::fail(r, "(Lx)(Ly) != yx for " + pair);
            ++r.checks;
            if (x * (L * y) != -(L * (x * y)))
                detail::fail(r, "x(Ly) != -L(xy) for " + pair);
        }
    }
    for (std::size_t xs = 1; xs <= 3; ++xs) {
        ++r.checks;
        if (Octonion::unit(xs) * Octonion::unit(xs) != minus_one)
            detail::fail(r, std::string(kBasisNames[xs]) + "^2 != -1");
    }
    ++r.checks;
    if ((Octonion::unit(1) * Octonion::unit(2)) * Octonion::unit(3) != minus_one)
        detail::fail(r, "(ij)k != -1");
    if (r.pass)
        r.detail = std::to_string(r.checks) + " identities hold exactly";
    return r;
}

/// The worked examples, asserted exactly as stated. The j*(L*i) expectation
/// of -Lk contradicts the identity x(Ly) = -L(xy), under which the value is
/// +Lk; the check is kept as stated and reports the computed value.
inline SuiteResult verify_worked_examples() {
    SuiteResult r;
    r.name = "worked-examples";
    const auto eval_str = [](const char* src) { return eval_ast(*parse(src)); };

    ++r.checks;
    if (eval_str("(L*j)*k") != embed({BasisIndex::Li, true}))
        detail::fail(r, "eval \"(L*j)*k\" = " + to_string(eval_str("(L*j)*k")) + ", required -Li");
    ++r.checks;
    if (eval_str("L*(j*k)") != embed({BasisIndex::Li, false}))
        detail::fail(r, "eval \"L*(j*k)\" = " + to_string(eval_str("L*(j*k)")) + ", required Li");
    ++r.checks;
    if (eval_str("j*(L*i)") != embed({BasisIndex::Lk, true}))
        detail::fail(r, "eval \"j*(L*i)\" = " + to_string(eval_str("j*(L*i)")) +
                            ", required -Lk (that value is inconsistent with x(Ly) = -L(xy))");
    const std::vector<BasisIndex> ij = {BasisIndex::i, BasisIndex::j};
    const std::vector<BasisIndex> ji = {BasisIndex::j, BasisIndex::i};
    ++r.checks;
    if (run_word(ij).final != SignedBasis{BasisIndex::k, false})
        detail::fail(r, "word [i, j] != k");
    ++r.checks;
    if (run_word(ji).final != SignedBasis{BasisIndex::k, true})
        detail::fail(r, "word [j, i] != -k");
    if (r.pass)
        r.detail = "all worked examples reproduced";
    return r;
}

/// Apparatus/loop equivalence on all 112 pairs and every word up to the
/// given length.
inline SuiteResult verify_model_equivalence(int max_word_len,
                                            const SignConvention& conv = default_convention()) {
    SuiteResult r;
    r.name = "model-equivalence";
    const ModelReport m = check_model(conv, max_word_len);
    r.pass = m.pass;
    r.checks = m.pair_checks + m.word_checks;
    if (m.pass)
        r.detail = std::to_string(m.pair_checks) + "/" + std::to_string(m.pair_checks) +
                   " state-generator pairs, " + std::to_string(m.word_checks) +
                   " words up to length " + std::to_string(max_word_len);
    else
        r.detail = m.counterexample;
    return r;
}

/// From every state, g twice flips only twist parity and g four times is the
/// identity.
inline SuiteResult verify_belt_trick() {
    SuiteResult r;
    r.name = "belt-trick";
    for (const BasisIndex idx : kAllBasisIndices) {
        for (const bool neg : {false, true}) {
            const ApparatusState s = encode({idx, neg});
            for (const BasisIndex g : kGenerators) {
                const ApparatusState s2 = apply_generator(apply_generator(s, g), g);
                ApparatusState expected = s;
                expected.twist ^= 1u;
                ++r.checks;
                if (s2 != expected)
                    detail::fail(r, "g^2 is not a twist flip at state " + name(decode(s)) +
                                        ", generator " + std::string(basis_name(g)));
                const ApparatusState s4 = apply_generator(apply_generator(s2, g), g);
                ++r.checks;
                if (s4 != s)
                    detail::fail(r, "g^4 is not the identity at state " + name(decode(s)) +
                                        ", generator " + std::string(basis_name(g)));
            }
        }
    }
    if (r.pass)
        r.detail = "g^2 flips twist and g^4 is trivial from all 16 states";
    return r;
}

/// Doubled tables match the hand-written algebra entry-for-entry.
inline SuiteResult verify_table_comparison() {
    SuiteResult r;
    r.name = "table-comparison";
    for (const std::size_t dim : {std::size_t{4}, std::size_t{8}}) {
        const auto mismatches = compare_tables(dim);
        r.checks += dim * dim;
        if (!mismatches.empty())
            detail::fail(r, "dim " + std::to_string(dim) + ": " +
                                std::to_string(mismatches.size()) + " mismatches, first at (" +
                                std::to_string(mismatches.front().row) + ", " +
                                std::to_string(mismatches.front().col) + ")");
    }
    if (r.pass)
        r.detail = "16 + 64 entries, zero mismatches";
    return r;
}

/// Moufang identity on all 4096 signed-basis triples, alternative and
/// flexible laws on all 256 pairs.
inline SuiteResult verify_loop_properties() {
    SuiteResult r;
    r.name = "loop-properties";
    std::vector<Octonion> loop;
    for (const BasisIndex idx : kAllBasisIndices)
        for (const bool neg : {false, true})
            loop.push_back(embed({idx, neg}));
    for (const Octonion& x : loop) {
        for (const Octonion& y : loop) {
            ++r.checks;
            if ((x * x) * y != x * (x * y))
                detail::fail(r, "left alternative law fails on loop pair");
            ++r.checks;
            if (y * (x * x) != (y * x) * x)
                detail::fail(r, "right alternative law fails on loop pair");
            ++r.checks;
            if ((x * y) * x != x * (y * x))
                detail::fail(r, "flexible law fails on loop pair");
            for (const Octonion& z : loop) {
                ++r.checks;
                if ((x * y) * (z * x) != (x * (y * z)) * x)
                    detail::fail(r, "Moufang identity fails on loop triple");
            }
        }
    }
    if (r.pass)
        r.detail = "Moufang on 4096 triples, alternative and flexible on 256 pairs";
    return r;
}

/// Norm multiplicativity, alternative/flexible laws and the conjugation
/// antiautomorphism on seeded random rational octonions.
inline SuiteResult verify_random_properties(std::uint64_t seed) {
    SuiteResult r;
    r.name = "random-properties";
    Sampler sampler(seed);
    for (int n = 0; n < 1000; ++n) {
        const Octonion x = sampler.octonion();
        const Octonion y = sampler.octonion();
        ++r.checks;
        if (norm(x * y) != norm(x) * norm(y))
            detail::fail(r, "norm multiplicativity fails on random pair #" + std::to_string(n));
    }
    for (int n = 0; n < 500; ++n) {
        const Octonion x = sampler.octonion();
        const Octonion y = sampler.octonion();
        ++r.checks;
        if ((x * x) * y != x * (x * y) || y * (x * x) != (y * x) * x)
            detail::fail(r, "alternative law fails on random pair #" + std::to_string(n));
        ++r.checks;
        if ((x * y) * x != x * (y * x))
            detail::fail(r, "flexible law fails on random pair #" + std::to_string(n));
        ++r.checks;
        if (conj(x * y) != conj(y) * conj(x))
            detail::fail(r, "conj(xy) != conj(y)conj(x) on random pair #" + std::to_string(n));
    }
    if (r.pass)
        r.detail = "norm multiplicativity on 1000 pairs, laws on 500 pairs";
    return r;
}

/// No zero divisors at dim 8; a verified witness pair at dim 16.
inline SuiteResult verify_tower_degeneration() {
    SuiteResult r;
    r.name = "tower-degeneration";
    ++r.checks;
    if (find_zero_divisor(8, 1))
        detail::fail(r, "unexpected zero divisor at dim 8");
    ++r.checks;
    const auto pair = find_zero_divisor(16, 1);
    if (!pair) {
        detail::fail(r, "no zero divisor found at dim 16");
    } else {
        ++r.checks;
        if (pair->x.is_zero() || pair->y.is_zero() || !cd_mul(pair->x, pair->y).is_zero())
            detail::fail(r, "dim-16 witness does not replay to zero");
        else
            r.detail = "dim 8 clean; dim 16 witness (" + cd_to_string(pair->x) + ") * (" +
                       cd_to_string(pair->y) + ") = 0, replay exact";
    }
    return r;
}

/// solve_signs finds at least one convention; every returned convention
/// passes the full model equivalence; the shipped default is among them.
inline SuiteResult verify_solver(int max_word_len = 6) {
    SuiteResult r;
    r.name = "sign-solver";
    const auto conventions = solve_signs();
    ++r.checks;
    if (conventions.empty()) {
        detail::fail(r, "no consistent sign convention exists");
        return r;
    }
    bool default_found = false;
    for (const SignConvention& conv : conventions) {
        ++r.checks;
        const ModelReport m = check_model(conv, max_word_len);
        if (!m.pass)
            detail::fail(r, "solver convention fails the model: " + m.counterexample);
        if (conv == default_convention())
            default_found = true;
    }
    ++r.checks;
    if (!default_found)
        detail::fail(r, "shipped default convention is not in the solver output");
    if (r.pass)
        r.detail = std::to_string(conventions.size()) +
                   " consistent convention(s), default included";
    return r;
}

/// format -> parse round trip on random ASTs; strict mode rejects an
/// unparenthesized triple product that the default mode folds left.
inline SuiteResult verify_parser(std::uint64_t seed) {
    SuiteResult r;
    r.name = "parser";
    Sampler sampler(seed);
    for (int n = 0; n < 1000; ++n) {
        const ExprPtr t = sampler.expr_ast(6);
        const std::string printed = format_ast(*t);
        ++r.checks;
        try {
            const ExprPtr back = parse(printed, /*strict_parens=*/true);
            if (!ast_equal(*t, *back))
                detail::fail(r, "round trip changed the tree for \"" + printed + "\"");
        } catch (const ParseError& e) {
            detail::fail(r, "round trip failed to reparse \"" + printed + "\": " + e.what());
        }
    }
    ++r.checks;
    try {
        parse("i*j*k", /*strict_parens=*/true);
        detail::fail(r, "strict mode accepted \"i*j*k\"");
    } catch (const ParseError&) {
    }
    ++r.checks;
    if (eval_ast(*parse("i*j*k")) != -Octonion::one())
        detail::fail(r, "default mode \"i*j*k\" != -1");
    if (r.pass)
        r.detail = "1000 round trips, strict rejection, left-normed default";
    return r;
}

/// Double cover: even map, homomorphism, exact special orthogonality on the
/// eight unit quaternions; kernel exactly {1, -1}.
inline SuiteResult verify_double_cover() {
    SuiteResult r;
    r.name = "double-cover";
    std::vector<Quaternion> units;
    for (std::size_t slot = 0; slot < 4; ++slot) {
        units.push_back(Quaternion::unit(slot, 1));
        units.push_back(Quaternion::unit(slot, -1));
    }
    for (const Quaternion& q : units) {
        ++r.checks;
        if (rotation_matrix(q) != rotation_matrix(-q))
            detail::fail(r, "rotation_matrix(q) != rotation_matrix(-q)");
        ++r.checks;
        if (!rotation_matrix(q).is_special_orthogonal())
            detail::fail(r, "image is not special orthogonal");
    }
    for (const Quaternion& q1 : units) {
        for (const Quaternion& q2 : units) {
            ++r.checks;
            if (rotation_matrix(q1 * q2) != rotation_matrix(q1) * rotation_matrix(q2))
                detail::fail(r, "covering map is not a homomorphism");
        }
    }
    std::size_t kernel = 0;
    for (const Quaternion& q : units)
        if (rotation_matrix(q) == RotationMatrix::identity())
            ++kernel;
    ++r.checks;
    if (kernel != 2)
        detail::fail(r, "kernel size " + std::to_string(kernel) + ", expected 2");
    if (r.pass)
        r.detail = "even, multiplicative, exactly orthogonal; kernel {1, -1}";
    return r;
}

/// The suites behind the `verify` command.
inline std::vector<SuiteResult> verify_default_suites(
    int max_word_len, std::uint64_t seed,
    const SignConvention& conv = default_convention()) {
    return {
        verify_model_equivalence(max_word_len, conv),
        verify_table_comparison(),
        verify_loop_properties(),
        verify_random_properties(seed),
    };
}

} // namespace octoloop
