#include <octoloop/cayley_dickson.hpp>
#include <octoloop/octonion.hpp>
#include <octoloop/sampling.hpp>
#include <octoloop/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace octoloop;

namespace {
Octonion unit(std::size_t slot, int sign = 1) { return Octonion::unit(slot, sign); }
const Octonion oL = unit(4);
} // namespace

TEST_CASE("pinned products") {
    CHECK(oL * oL == -Octonion::one());
    CHECK(unit(6) * unit(3) == unit(5, -1));  // (Lj)k = -Li
    CHECK(unit(5) * unit(6) == unit(3, -1));  // (Li)(Lj) = ji = -k
    CHECK(oL * unit(1) == unit(5));           // L i = Li
    CHECK(unit(2) * unit(5) == unit(7));      // j (Li) = -L(ji) = Lk
}

TEST_CASE("the five L-identities hold exhaustively") {
    const SuiteResult r = verify_identity_suite();
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.checks == 35);
}

TEST_CASE("identity element and bilinear sanity on random values") {
    Sampler sampler(11);
    for (int n = 0; n < 200; ++n) {
        const Octonion x = sampler.octonion();
        CHECK(x * Octonion::one() == x);
        CHECK(Octonion::one() * x == x);
        const Octonion y = sampler.octonion();
        const Octonion z = sampler.octonion();
        CHECK((x + y) * z == x * z + y * z);
        CHECK(z * (x + y) == z * x + z * y);
    }
}

TEST_CASE("products agree with the generic doubling oracle") {
    Sampler sampler(12);
    for (int n = 0; n < 200; ++n) {
        const Octonion x = sampler.octonion();
        const Octonion y = sampler.octonion();
        CDElement cx = CDElement::zero(8);
        CDElement cy = CDElement::zero(8);
        const auto xc = x.coeffs();
        const auto yc = y.coeffs();
        for (std::size_t s = 0; s < 8; ++s) {
            cx.coeffs[s] = xc[s];
            cy.coeffs[s] = yc[s];
        }
        const auto pc = (x * y).coeffs();
        const CDElement p = cd_mul(cx, cy);
        for (std::size_t s = 0; s < 8; ++s)
            CHECK(p.coeffs[s] == pc[s]);
    }
}

TEST_CASE("octonion conjugate") {
    CHECK(conj(Octonion::one()) == Octonion::one());
    CHECK(conj(oL) == -oL);
    Sampler sampler(13);
    for (int n = 0; n < 200; ++n) {
        const Octonion x = sampler.octonion();
        CHECK(conj(conj(x)) == x);
        // x conj(x) is the norm as a scalar
        CHECK(x * conj(x) == Octonion::scalar(norm(x)));
        const Octonion y = sampler.octonion();
        CHECK(conj(x * y) == conj(y) * conj(x));
    }
}

TEST_CASE("octonion norm") {
    CHECK(norm(unit(5)) == Rational(1));
    CHECK(norm(Octonion::zero()) == Rational(0));
    const Octonion x{Quaternion(1, 2, 3, 4), Quaternion(5, 6, 7, 8)};
    CHECK(norm(x) == Rational(204));
    CHECK(norm(x) == norm(x.a) + norm(x.b));
}

TEST_CASE("inverse") {
    CHECK(inverse(unit(1)) == unit(1, -1));
    CHECK(inverse(unit(7)) == unit(7, -1)); // forced by (Lk)^2 = -1
    CHECK_THROWS_AS(inverse(Octonion::zero()), std::domain_error);
    Sampler sampler(14);
    for (int n = 0; n < 100; ++n) {
        Octonion x = sampler.octonion();
        if (x.is_zero())
            x = Octonion::one();
        CHECK(x * inverse(x) == Octonion::one());
        CHECK(inverse(x) * x == Octonion::one());
    }
}

TEST_CASE("associator") {
    CHECK(associator(oL, unit(2), unit(3)) == Rational(-2) * unit(5)); // -2 Li
    CHECK(associator(unit(1), unit(2), unit(3)).is_zero());

    // frozen enumeration result: of the 343 ordered generator triples,
    // exactly the distinct non-collinear ones fail to associate
    std::size_t nonzero = 0;
    for (std::size_t a = 1; a < 8; ++a)
        for (std::size_t b = 1; b < 8; ++b)
            for (std::size_t c = 1; c < 8; ++c)
                if (!associator(unit(a), unit(b), unit(c)).is_zero())
                    ++nonzero;
    CHECK(nonzero == 168);
    // alternativity: associator with a repeated argument vanishes
    for (std::size_t a = 0; a < 8; ++a) {
        for (int sa : {1, -1}) {
            for (std::size_t b = 0; b < 8; ++b) {
                for (int sb : {1, -1}) {
                    const Octonion x = unit(a, sa);
                    const Octonion y = unit(b, sb);
                    CHECK(associator(x, x, y).is_zero());
                    CHECK(associator(y, x, x).is_zero());
                    CHECK(associator(x, y, x).is_zero());
                }
            }
        }
    }
}

TEST_CASE("value printing") {
    CHECK(to_string(Octonion::zero()) == "0");
    CHECK(to_string(unit(5, -1)) == "-Li");
    CHECK(to_string(Rational(-2) * unit(5)) == "-2Li");
    CHECK(to_string(Octonion::one() - Rational(2) * unit(1)) == "1 - 2i");
    CHECK(to_string(Octonion::scalar(Rational(1, 2)) + Rational(3, 2) * unit(2)) ==
          "1/2 + 3/2j");
}
