#pragma once

/**
 * @file apparatus.hpp
 * @brief Discrete state machine for the hoop-ribbon-flag apparatus.
 *
 * A state is the observable tuple (flag side, arrow direction, arrow face,
 * twist parity) - 16 states in bijection with the signed basis octonions.
 * Each generator move toggles a fixed subset of the orientation observables
 * and adds a twist parity given by a per-orientation base sign XORed with the
 * rule's conditional reversal predicate. The base signs are solver-determined
 * data; check_model() proves the machine realizes loop multiplication on all
 * 112 state-generator pairs and on every word up to the requested length.
 */

#include "loop16.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octoloop {

enum class FlagSide : unsigned char { left = 0, right = 1 };
enum class ArrowDir : unsigned char { down = 0, up = 1 };
enum class ArrowFace : unsigned char { white = 0, black = 1 };

struct ApparatusState {
    FlagSide flag = FlagSide::left;
    ArrowDir dir = ArrowDir::down;
    ArrowFace face = ArrowFace::white;
    unsigned twist = 0; // parity of full 2π ribbon twists

    bool operator==(const ApparatusState&) const = default;
};

inline constexpr ApparatusState kIdentityState{};

/// Orientation class in 0..7; coincides with the basis index of the decoded
/// element: bit 2 flag, bit 1 direction, bit 0 face.
inline unsigned orientation_class(const ApparatusState& s) {
    return (static_cast<unsigned>(s.flag) << 2) | (static_cast<unsigned>(s.dir) << 1) |
           static_cast<unsigned>(s.face);
}

inline ApparatusState state_from_class(unsigned cls, unsigned twist) {
    return {static_cast<FlagSide>((cls >> 2) & 1u), static_cast<ArrowDir>((cls >> 1) & 1u),
            static_cast<ArrowFace>(cls & 1u), twist & 1u};
}

inline ApparatusState encode(SignedBasis x) {
    return state_from_class(static_cast<unsigned>(x.index), x.negative ? 1u : 0u);
}

inline SignedBasis decode(const ApparatusState& s) {
    return {static_cast<BasisIndex>(orientation_class(s)), s.twist == 1u};
}

/// Reduces a raw 2π-twist count to its parity: a 4π twist is removable, a 2π
/// twist is not. Orientation and flag are untouched.
inline ApparatusState normalize(long long raw_twist, FlagSide flag, ArrowDir dir,
                                ArrowFace face) {
    return {flag, dir, face, static_cast<unsigned>(((raw_twist % 2) + 2) % 2)};
}

/// XOR combination of the three state predicates, with an optional constant
/// term so overrides can express "always".
struct ReversalPredicate {
    bool pointing_up = false;
    bool flag_right = false;
    bool black_arrowhead = false;
    bool always = false;

    bool operator()(const StatePredicates& p) const {
        bool r = always;
        if (pointing_up) r = r != p.pointing_up;
        if (flag_right) r = r != p.flag_right;
        if (black_arrowhead) r = r != p.black_arrowhead;
        return r;
    }

    bool operator==(const ReversalPredicate&) const = default;

    std::string str() const {
        std::string out;
        const auto append = [&out](std::string_view term) {
            if (!out.empty()) out += "^";
            out += term;
        };
        if (always) append("always");
        if (pointing_up) append("pointing_up");
        if (flag_right) append("flag_right");
        if (black_arrowhead) append("black_arrowhead");
        return out.empty() ? "never" : out;
    }
};

using ReversalPredicates = std::array<ReversalPredicate, 7>; // order i, j, k, L, Li, Lj, Lk

/// Conditional reversal clauses of the seven rules.
inline const ReversalPredicates& reversal_predicates() {
    static const ReversalPredicates preds = {{
        {.pointing_up = true, .flag_right = true},                           // i
        {},                                                                  // j
        {.pointing_up = true},                                               // k
        {.pointing_up = true, .flag_right = true},                           // L
        {.pointing_up = true},                                               // Li
        {.flag_right = true, .black_arrowhead = true},                       // Lj
        {.pointing_up = true, .flag_right = true, .black_arrowhead = true},  // Lk
    }};
    return preds;
}

/// One generator move: which observables it toggles, plus its conditional
/// reversal. i turns the arrowhead about the vertical axis (shows the other
/// face), j turns it in the hoop plane (up/down), k flips it under the ribbon
/// (both); the L-family repeats these as hoop moves with the colouring
/// reversed and always carries the flag across.
struct GeneratorRule {
    BasisIndex generator = BasisIndex::one;
    std::uint8_t orientation_toggles = 0; // bit 2 flag, bit 1 direction, bit 0 face
    ReversalPredicate reversal;
};

inline const std::array<GeneratorRule, 7>& generator_rules() {
    static const std::array<GeneratorRule, 7> rules = [] {
        std::array<GeneratorRule, 7> r{};
        for (std::size_t g = 0; g < 7; ++g) {
            r[g].generator = kGenerators[g];
            r[g].orientation_toggles = static_cast<std::uint8_t>(g + 1);
            r[g].reversal = reversal_predicates()[g];
        }
        return r;
    }();
    return rules;
}

/// Base twist-parity deltas: one bit per generator and orientation class
/// (class order 1, i, j, k, L, Li, Lj, Lk).
struct SignConvention {
    std::array<std::array<std::uint8_t, 8>, 7> base_sign{};

    bool operator==(const SignConvention&) const = default;
};

/// The shipped convention, identical to the unique solve_signs() output.
inline const SignConvention& default_convention() {
    static const SignConvention conv{{{
        {0, 1, 0, 1, 1, 0, 0, 1}, // i
        {0, 0, 1, 1, 0, 1, 1, 0}, // j
        {0, 1, 1, 0, 0, 0, 0, 0}, // k
        {0, 1, 0, 0, 0, 1, 0, 0}, // L
        {0, 0, 1, 0, 1, 1, 1, 0}, // Li
        {0, 0, 0, 1, 0, 1, 0, 0}, // Lj
        {0, 1, 0, 0, 0, 0, 1, 0}, // Lk
    }}};
    return conv;
}

inline StatePredicates state_predicates(const ApparatusState& s) {
    return {s.dir == ArrowDir::up, s.flag == FlagSide::right, s.face == ArrowFace::black};
}

inline ApparatusState apply_generator(const ApparatusState& s, BasisIndex g,
                                      const SignConvention& conv = default_convention(),
                                      const ReversalPredicates& preds = reversal_predicates()) {
    if (g == BasisIndex::one)
        return s;
    const std::size_t gi = static_cast<std::size_t>(g) - 1;
    const unsigned cls = orientation_class(s);
    const bool reversed = preds[gi](state_predicates(s));
    const unsigned delta = conv.base_sign[gi][cls] ^ (reversed ? 1u : 0u);
    return state_from_class(cls ^ generator_rules()[gi].orientation_toggles,
                            s.twist ^ delta);
}

struct RunResult {
    SignedBasis final = kOne;
    std::vector<ApparatusState> trace; // word length + 1 states when requested
};

/// Applies the word left to right starting from the identity state.
inline RunResult run_word(std::span<const BasisIndex> word, bool want_trace = false,
                          const SignConvention& conv = default_convention()) {
    RunResult r;
    ApparatusState s = kIdentityState;
    if (want_trace)
        r.trace.push_back(s);
    for (const BasisIndex g : word) {
        s = apply_generator(s, g, conv);
        if (want_trace)
            r.trace.push_back(s);
    }
    r.final = decode(s);
    return r;
}

inline std::string trace_line(std::size_t step, std::string_view op, const ApparatusState& s) {
    std::ostringstream os;
    os << "step " << step << ": " << op
       << " -> flag=" << (s.flag == FlagSide::right ? "right" : "left")
       << " dir=" << (s.dir == ArrowDir::up ? "up" : "down")
       << " face=" << (s.face == ArrowFace::black ? "black" : "white")
       << " twist=" << s.twist << " elem=" << name(decode(s));
    return os.str();
}

struct ModelReport {
    bool pass = true;
    std::size_t pair_checks = 0;
    std::size_t word_checks = 0;
    std::string counterexample; // empty on pass
};

namespace detail {

inline bool sweep_words(const SignConvention& conv, int remaining, const ApparatusState& s,
                        SignedBasis expected, std::vector<BasisIndex>& word,
                        ModelReport& report) {
    if (remaining == 0)
        return true;
    for (const BasisIndex g : kGenerators) {
        word.push_back(g);
        const ApparatusState ns = apply_generator(s, g, conv);
        const SignedBasis nl = loop_mul(expected, SignedBasis{g, false});
        ++report.word_checks;
        if (decode(ns) != nl) {
            std::string w;
            for (const BasisIndex b : word) {
                if (!w.empty()) w += " ";
                w += basis_name(b);
            }
            report.pass = false;
            report.counterexample = "word [" + w + "]: apparatus " + name(decode(ns)) +
                                    ", loop " + name(nl);
            return false;
        }
        if (!sweep_words(conv, remaining - 1, ns, nl, word, report))
            return false;
        word.pop_back();
    }
    return true;
}

} // namespace detail

/// Verifies decode(apply(encode(x), g)) = x·g on all 112 state-generator
/// pairs, then replays every word up to max_word_len against the loop.
inline ModelReport check_model(const SignConvention& conv = default_convention(),
                               int max_word_len = 6,
                               const ReversalPredicates& preds = reversal_predicates()) {
    ModelReport report;
    for (const BasisIndex idx : kAllBasisIndices) {
        for (const bool neg : {false, true}) {
            const SignedBasis x{idx, neg};
            for (const BasisIndex g : kGenerators) {
                ++report.pair_checks;
                const SignedBasis got = decode(apply_generator(encode(x), g, conv, preds));
                const SignedBasis want = loop_mul(x, SignedBasis{g, false});
                if (got != want) {
                    report.pass = false;
                    report.counterexample = "state " + name(x) + ", generator " +
                                            std::string(basis_name(g)) + ": apparatus " +
                                            name(got) + ", loop " + name(want);
                    return report;
                }
            }
        }
    }
    std::vector<BasisIndex> word;
    detail::sweep_words(conv, max_word_len, kIdentityState, kOne, word, report);
    return report;
}

/// Exhaustive search for base-sign maps consistent with the rules. Each
/// generator is independent: its map ranges over all functions of the eight
/// orientation classes with the identity class pinned to 0 (the moves are
/// calibrated by their untwisted action on the identity state). Returns every
/// consistent convention in canonical (bit-pattern ascending) order; empty
/// means the transcribed rules are inconsistent.
inline std::vector<SignConvention> solve_signs(
    const ReversalPredicates& preds = reversal_predicates()) {
    std::array<std::vector<std::array<std::uint8_t, 8>>, 7> per_generator;
    for (std::size_t gi = 0; gi < 7; ++gi) {
        const BasisIndex g = kGenerators[gi];
        for (unsigned mask = 0; mask < 256; ++mask) {
            if (mask & 1u)
                continue; // identity class is calibrated to 0
            std::array<std::uint8_t, 8> base{};
            for (unsigned cls = 0; cls < 8; ++cls)
                base[cls] = (mask >> cls) & 1u;
            SignConvention trial; // only the slot under test matters
            trial.base_sign[gi] = base;
            bool ok = true;
            for (const BasisIndex idx : kAllBasisIndices) {
                for (const bool neg : {false, true}) {
                    const SignedBasis x{idx, neg};
                    const SignedBasis got =
                        decode(apply_generator(encode(x), g, trial, preds));
                    if (got != loop_mul(x, SignedBasis{g, false})) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (ok)
                per_generator[gi].push_back(base);
        }
        if (per_generator[gi].empty())
            return {};
    }
    std::vector<SignConvention> out;
    std::array<std::size_t, 7> pick{};
    for (;;) {
        SignConvention conv;
        for (std::size_t gi = 0; gi < 7; ++gi)
            conv.base_sign[gi] = per_generator[gi][pick[gi]];
        out.push_back(conv);
        std::size_t gi = 7;
        while (gi > 0) {
            --gi;
            if (++pick[gi] < per_generator[gi].size())
                break;
            pick[gi] = 0;
            if (gi == 0)
                return out;
        }
    }
}

} // namespace octoloop
