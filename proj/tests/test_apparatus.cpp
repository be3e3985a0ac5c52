#include <octoloop/apparatus.hpp>
#include <octoloop/sampling.hpp>
#include <octoloop/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace octoloop;

namespace {
SignedBasis sb(BasisIndex idx, bool neg = false) { return {idx, neg}; }

std::vector<SignedBasis> all16() {
    std::vector<SignedBasis> out;
    for (const BasisIndex idx : kAllBasisIndices)
        for (const bool neg : {false, true})
            out.push_back({idx, neg});
    return out;
}
} // namespace

TEST_CASE("encoding ledger") {
    CHECK(encode(sb(BasisIndex::one)) ==
          ApparatusState{FlagSide::left, ArrowDir::down, ArrowFace::white, 0});
    CHECK(encode(sb(BasisIndex::j)) ==
          ApparatusState{FlagSide::left, ArrowDir::up, ArrowFace::white, 0});
    CHECK(encode(sb(BasisIndex::one, true)) ==
          ApparatusState{FlagSide::left, ArrowDir::down, ArrowFace::white, 1});
    CHECK(encode(sb(BasisIndex::L)) ==
          ApparatusState{FlagSide::right, ArrowDir::down, ArrowFace::white, 0});
}

TEST_CASE("decoding ledger") {
    CHECK(decode({FlagSide::left, ArrowDir::down, ArrowFace::white, 0}) == sb(BasisIndex::one));
    CHECK(decode({FlagSide::right, ArrowDir::up, ArrowFace::white, 0}) == sb(BasisIndex::Lj));
    CHECK(decode({FlagSide::left, ArrowDir::up, ArrowFace::black, 1}) ==
          sb(BasisIndex::k, true));
}

TEST_CASE("encode and decode are mutually inverse on all 16 values") {
    for (const SignedBasis x : all16())
        CHECK(decode(encode(x)) == x);
    for (unsigned cls = 0; cls < 8; ++cls)
        for (unsigned twist = 0; twist < 2; ++twist) {
            const ApparatusState s = state_from_class(cls, twist);
            CHECK(encode(decode(s)) == s);
        }
}

TEST_CASE("predicates agree with the encoded state observables") {
    for (const SignedBasis x : all16()) {
        const ApparatusState s = encode(x);
        CHECK(predicates(x) == state_predicates(s));
    }
}

TEST_CASE("single generator applications") {
    CHECK(apply_generator(encode(sb(BasisIndex::one)), BasisIndex::j) ==
          encode(sb(BasisIndex::j)));
    CHECK(apply_generator(encode(sb(BasisIndex::Lj)), BasisIndex::k) ==
          encode(sb(BasisIndex::Li, true)));
    // j then Li lands on +Lk: decode∘apply∘encode equals loop multiplication
    CHECK(apply_generator(encode(sb(BasisIndex::j)), BasisIndex::Li) ==
          encode(loop_mul(sb(BasisIndex::j), sb(BasisIndex::Li))));
    CHECK(loop_mul(sb(BasisIndex::j), sb(BasisIndex::Li)) == sb(BasisIndex::Lk));

    ApparatusState s = encode(sb(BasisIndex::one));
    for (int n = 0; n < 4; ++n)
        s = apply_generator(s, BasisIndex::i);
    CHECK(s == encode(sb(BasisIndex::one)));

    // the identity generator leaves every state alone
    for (const SignedBasis x : all16())
        CHECK(apply_generator(encode(x), BasisIndex::one) == encode(x));
}

TEST_CASE("equivalence with the loop on all 112 pairs") {
    for (const SignedBasis x : all16())
        for (const BasisIndex g : kGenerators)
            CHECK(decode(apply_generator(encode(x), g)) == loop_mul(x, sb(g)));
}

TEST_CASE("flag discipline") {
    for (const SignedBasis x : all16()) {
        const ApparatusState s = encode(x);
        for (const BasisIndex g : {BasisIndex::i, BasisIndex::j, BasisIndex::k})
            CHECK(apply_generator(s, g).flag == s.flag);
        for (const BasisIndex g :
             {BasisIndex::L, BasisIndex::Li, BasisIndex::Lj, BasisIndex::Lk})
            CHECK(apply_generator(s, g).flag != s.flag);
    }
}

TEST_CASE("twist parity is the sign bit") {
    for (const SignedBasis x : all16())
        CHECK(encode(x).twist == (x.negative ? 1u : 0u));
}

TEST_CASE("belt trick orders") {
    const SuiteResult r = verify_belt_trick();
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.checks == 224);
}

TEST_CASE("normalize reduces raw twist counts") {
    CHECK(normalize(2, FlagSide::left, ArrowDir::down, ArrowFace::white).twist == 0u);
    CHECK(normalize(1, FlagSide::left, ArrowDir::down, ArrowFace::white).twist == 1u);
    CHECK(normalize(-3, FlagSide::right, ArrowDir::up, ArrowFace::black).twist == 1u);
    CHECK(normalize(-4, FlagSide::left, ArrowDir::up, ArrowFace::white).twist == 0u);
    const ApparatusState s = normalize(7, FlagSide::right, ArrowDir::up, ArrowFace::black);
    CHECK(s.flag == FlagSide::right);
    CHECK(s.dir == ArrowDir::up);
    CHECK(s.face == ArrowFace::black);
}

TEST_CASE("run_word") {
    const std::vector<BasisIndex> ij = {BasisIndex::i, BasisIndex::j};
    const RunResult r1 = run_word(ij, true);
    CHECK(r1.final == sb(BasisIndex::k));
    CHECK(r1.trace.size() == 3);
    CHECK(r1.trace.front() == kIdentityState);

    const std::vector<BasisIndex> ji = {BasisIndex::j, BasisIndex::i};
    CHECK(run_word(ji).final == sb(BasisIndex::k, true));

    const std::vector<BasisIndex> ljk = {BasisIndex::Lj, BasisIndex::k};
    CHECK(run_word(ljk).final == sb(BasisIndex::Li, true));

    const RunResult empty = run_word({}, true);
    CHECK(empty.final == kOne);
    REQUIRE(empty.trace.size() == 1);
    CHECK(empty.trace.front() == kIdentityState);
}

TEST_CASE("trace line format") {
    CHECK(trace_line(0, "start", kIdentityState) ==
          "step 0: start -> flag=left dir=down face=white twist=0 elem=1");
    CHECK(trace_line(2, "k", encode(sb(BasisIndex::Li, true))) ==
          "step 2: k -> flag=right dir=down face=black twist=1 elem=-Li");
}

TEST_CASE("run_word equals eval_word on random long words") {
    Sampler sampler(41);
    for (int n = 0; n < 10000; ++n) {
        const std::vector<BasisIndex> w = sampler.generator_word(0, 20);
        std::vector<SignedBasis> lw;
        lw.reserve(w.size());
        for (const BasisIndex g : w)
            lw.push_back(sb(g));
        CHECK(run_word(w).final == eval_word(lw));
    }
}

TEST_CASE("check_model sweeps and counts") {
    const ModelReport m = check_model(default_convention(), 3);
    CHECK(m.pass);
    CHECK(m.pair_checks == 112);
    CHECK(m.word_checks == 7 + 49 + 343);
    CHECK(m.counterexample.empty());
}

TEST_CASE("a flipped base sign bit is caught with a named counterexample") {
    SignConvention broken = default_convention();
    broken.base_sign[2][6] ^= 1; // generator k, orientation class Lj
    const ModelReport m = check_model(broken, 1);
    CHECK(!m.pass);
    CHECK(m.counterexample.find("generator k") != std::string::npos);
    CHECK(m.counterexample.find("Lj") != std::string::npos);
}

TEST_CASE("solver output") {
    const auto conventions = solve_signs();
    REQUIRE(!conventions.empty());
    CHECK(conventions.size() == 1);
    CHECK(conventions.front() == default_convention());
    for (const SignConvention& conv : conventions)
        CHECK(check_model(conv, 4).pass);
}

TEST_CASE("corrupted reversal predicates have no consistent convention") {
    ReversalPredicates j_always = reversal_predicates();
    j_always[1] = ReversalPredicate{.always = true};
    CHECK(solve_signs(j_always).empty());

    ReversalPredicates lj_always = reversal_predicates();
    lj_always[5] = ReversalPredicate{.always = true};
    CHECK(solve_signs(lj_always).empty());
}

TEST_CASE("reversal predicate formatting") {
    CHECK(reversal_predicates()[1].str() == "never");
    CHECK(reversal_predicates()[0].str() == "pointing_up^flag_right");
    CHECK(ReversalPredicate{.always = true}.str() == "always");
}
