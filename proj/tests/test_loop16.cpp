#include <octoloop/loop16.hpp>
#include <octoloop/sampling.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>
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

TEST_CASE("pinned loop table entries") {
    CHECK(loop_table().entry(BasisIndex::i, BasisIndex::j) == sb(BasisIndex::k));
    CHECK(loop_table().entry(BasisIndex::L, BasisIndex::L) == sb(BasisIndex::one, true));
    CHECK(loop_table().entry(BasisIndex::i, BasisIndex::Lj) == sb(BasisIndex::Lk, true));
}

TEST_CASE("table shape invariants") {
    for (const BasisIndex r : kAllBasisIndices) {
        // identity row and column
        CHECK(loop_table().entry(BasisIndex::one, r) == sb(r));
        CHECK(loop_table().entry(r, BasisIndex::one) == sb(r));
        // diagonal is -1 away from the identity
        if (r != BasisIndex::one)
            CHECK(loop_table().entry(r, r) == sb(BasisIndex::one, true));
        // rows and columns are permutations when signs are ignored
        std::set<BasisIndex> row, col;
        for (const BasisIndex c : kAllBasisIndices) {
            row.insert(loop_table().entry(r, c).index);
            col.insert(loop_table().entry(c, r).index);
        }
        CHECK(row.size() == 8);
        CHECK(col.size() == 8);
    }
}

TEST_CASE("sign linearity and units") {
    CHECK(loop_mul(sb(BasisIndex::i, true), sb(BasisIndex::j)) == sb(BasisIndex::k, true));
    CHECK(loop_mul(sb(BasisIndex::Li), sb(BasisIndex::Li)) == sb(BasisIndex::one, true));
    for (const SignedBasis x : all16()) {
        CHECK(loop_mul(x, kOne) == x);
        CHECK(loop_mul(kOne, x) == x);
        for (const SignedBasis y : all16()) {
            CHECK(loop_mul(-x, y) == -loop_mul(x, y));
            CHECK(loop_mul(x, -y) == -loop_mul(x, y));
        }
    }
}

TEST_CASE("embedding faithfulness and closure") {
    for (const SignedBasis x : all16()) {
        for (const SignedBasis y : all16()) {
            const Octonion p = embed(x) * embed(y);
            const auto back = extract(p);
            REQUIRE(back.has_value()); // closure: products stay in the loop
            CHECK(*back == loop_mul(x, y));
        }
    }
}

TEST_CASE("word evaluation") {
    const std::vector<SignedBasis> ij = {sb(BasisIndex::i), sb(BasisIndex::j)};
    CHECK(eval_word(ij) == sb(BasisIndex::k));

    const std::vector<SignedBasis> ljk = {sb(BasisIndex::Lj), sb(BasisIndex::k)};
    CHECK(eval_word(ljk) == sb(BasisIndex::Li, true));

    CHECK(eval_word({}) == kOne);

    const std::vector<SignedBasis> iiii(4, sb(BasisIndex::i));
    CHECK(eval_word(iiii) == kOne);
}

TEST_CASE("left-normed recursion on random words") {
    Sampler sampler(31);
    for (int n = 0; n < 500; ++n) {
        std::vector<SignedBasis> w = sampler.basis_word(0, 10);
        const SignedBasis g = sampler.signed_basis();
        const SignedBasis before = eval_word(w);
        w.push_back(g);
        CHECK(eval_word(w) == loop_mul(before, g));
    }
}

TEST_CASE("diassociativity: two-generator words bracket freely") {
    const auto elems = all16();
    for (const SignedBasis a : elems) {
        for (const SignedBasis b : elems) {
            for (int len = 1; len <= 5; ++len) {
                for (unsigned bits = 0; bits < (1u << len); ++bits) {
                    std::vector<SignedBasis> w;
                    for (int s = 0; s < len; ++s)
                        w.push_back((bits >> s) & 1u ? b : a);
                    // left-normed vs right-normed
                    SignedBasis right = w.back();
                    for (int s = len - 2; s >= 0; --s)
                        right = loop_mul(w[static_cast<std::size_t>(s)], right);
                    CHECK(eval_word(w) == right);
                }
            }
        }
    }
}

TEST_CASE("bracketing matters across generator subsets") {
    // ((Lj)k vs L(jk): the canonical non-associativity witness
    const std::vector<SignedBasis> w = {sb(BasisIndex::Lj), sb(BasisIndex::k)};
    const SignedBasis left = eval_word(w);
    const SignedBasis right =
        loop_mul(sb(BasisIndex::L), loop_mul(sb(BasisIndex::j), sb(BasisIndex::k)));
    CHECK(left == sb(BasisIndex::Li, true));
    CHECK(right == sb(BasisIndex::Li, false));
    CHECK(!(left == right));
}

TEST_CASE("predicates") {
    CHECK(predicates(sb(BasisIndex::j)).pointing_up);
    CHECK(predicates(sb(BasisIndex::Lj)).pointing_up);
    CHECK(predicates(sb(BasisIndex::one)) == StatePredicates{false, false, false});
    CHECK(predicates(sb(BasisIndex::Li)).flag_right);
    CHECK(predicates(sb(BasisIndex::Li)).black_arrowhead);
    CHECK(!predicates(sb(BasisIndex::Li)).pointing_up);
    // the sign plays no role
    for (const BasisIndex idx : kAllBasisIndices)
        CHECK(predicates(sb(idx)) == predicates(sb(idx, true)));
}

TEST_CASE("names round trip") {
    CHECK(name(sb(BasisIndex::Li, true)) == "-Li");
    CHECK(name(kOne) == "1");
    for (const SignedBasis x : all16()) {
        const auto back = parse_basis_name(name(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
    CHECK(!parse_basis_name("+i").has_value());
    CHECK(!parse_basis_name("Lm").has_value());
    CHECK(!parse_basis_name("").has_value());
    CHECK(!parse_basis_name("li").has_value());
}
