#include <octoloop/quaternion.hpp>
#include <octoloop/sampling.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace octoloop;

namespace {
const Quaternion qi = Quaternion::unit(1);
const Quaternion qj = Quaternion::unit(2);
const Quaternion qk = Quaternion::unit(3);
} // namespace

TEST_CASE("defining products") {
    CHECK(qi * qj == qk);
    CHECK(qj * qi == -qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qj == -qi);
    CHECK(qk * qi == qj);
    CHECK(qi * qk == -qj);
    CHECK((qi * qj) * qk == -Quaternion::one());
    CHECK(qi * qi == -Quaternion::one());
}

TEST_CASE("identity element and associativity on random values") {
    Sampler sampler(7);
    for (int n = 0; n < 200; ++n) {
        const Quaternion a = sampler.quaternion();
        const Quaternion b = sampler.quaternion();
        const Quaternion c = sampler.quaternion();
        CHECK(Quaternion::one() * a == a);
        CHECK(a * Quaternion::one() == a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("quaternion conjugate") {
    CHECK(conj(Quaternion::one()) == Quaternion::one());
    CHECK(conj(qi) == -qi);
    CHECK(conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4));
}

TEST_CASE("quaternion norm") {
    CHECK(norm(Quaternion::zero()) == Rational(0));
    CHECK(norm(qi) == Rational(1));
    CHECK(norm(Quaternion(1, 2, 3, 4)) == Rational(30));

    // norm is the scalar part of x conj(x); the pure parts vanish
    Sampler sampler(8);
    for (int n = 0; n < 100; ++n) {
        const Quaternion x = sampler.quaternion();
        const Quaternion p = x * conj(x);
        CHECK(p.a == norm(x));
        CHECK(p.b.is_zero());
        CHECK(p.c.is_zero());
        CHECK(p.d.is_zero());
    }
}

TEST_CASE("rotation matrix basics") {
    CHECK(rotation_matrix(Quaternion::one()) == RotationMatrix::identity());

    RotationMatrix diag;
    diag.m[0][0] = 1;
    diag.m[1][1] = -1;
    diag.m[2][2] = -1;
    CHECK(rotation_matrix(qi) == diag);

    CHECK(rotation_matrix(-qj) == rotation_matrix(qj));
    CHECK_THROWS_AS(rotation_matrix(Quaternion(1, 1, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(rotation_matrix(Quaternion::zero()), std::domain_error);
}

TEST_CASE("rotation matrices are exactly special orthogonal") {
    // unit quaternions beyond the basis ones, e.g. (1 + i + j + k)/2
    const Rational h(1, 2);
    const Quaternion q(h, h, h, h);
    REQUIRE(norm(q) == Rational(1));
    CHECK(rotation_matrix(q).is_special_orthogonal());

    const Quaternion r(Rational(3, 5), Rational(4, 5), 0, 0);
    REQUIRE(norm(r) == Rational(1));
    CHECK(rotation_matrix(r).is_special_orthogonal());
    CHECK(rotation_matrix(q * r) == rotation_matrix(q) * rotation_matrix(r));
}
