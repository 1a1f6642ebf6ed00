#include "doctest.h"

#include "ringfactor/exponential.hpp"

#include "test_support.hpp"

using namespace ringfactor;
using testing::Rng;

namespace {

RingElement q(long num, long den = 1) { return RingElement::rational(Rat(num) / Rat(den)); }

RingMatrix mat2(RingElement a, RingElement b, RingElement c, RingElement d) {
    RingMatrix m(2, a.descriptor());
    m.set(0, 0, std::move(a));
    m.set(0, 1, std::move(b));
    m.set(1, 0, std::move(c));
    m.set(1, 1, std::move(d));
    return m;
}

} // namespace

TEST_CASE("log of a 2x2 shear is the shear's strict part") {
    Rng rng(3);
    auto qq = RingDescriptor::rationals();
    for (int trial = 0; trial < 10; ++trial) {
        auto a = testing::random_element(qq, rng);
        auto u = mat2(q(1), a, q(0), q(1));
        auto g = unipotent_log(u);
        CHECK(g == mat2(q(0), a, q(0), q(0)));
        CHECK(nilpotent_exp(g) == u);
    }
}

TEST_CASE("log of the all-ones upper unitriangular 3x3") {
    auto qq = RingDescriptor::rationals();
    RingMatrix u = RingMatrix::identity(3, qq);
    u.set(0, 1, q(1));
    u.set(0, 2, q(1));
    u.set(1, 2, q(1));
    auto g = unipotent_log(u);
    RingMatrix expected(3, qq);
    expected.set(0, 1, q(1));
    expected.set(0, 2, q(1, 2));
    expected.set(1, 2, q(1));
    CHECK(g == expected);
    CHECK(nilpotent_exp(g) == u);
}

TEST_CASE("log of the identity is zero; exp of zero is the identity") {
    auto qq = RingDescriptor::rationals();
    auto id = RingMatrix::identity(4, qq);
    RingMatrix zero(4, qq);
    CHECK(unipotent_log(id) == zero);
    CHECK(nilpotent_exp(zero) == id);
}

TEST_CASE("exp/log roundtrip on random unipotent matrices up to n = 6") {
    const RingDescriptor rings[] = {
        RingDescriptor::rationals(),
        RingDescriptor::jet(RingDescriptor::rationals(), 4),
    };
    Rng rng(71);
    for (const auto& desc : rings) {
        for (int trial = 0; trial < 25; ++trial) {
            size_t n = static_cast<size_t>(rng.pick(2, 6));
            bool upper = rng.pick(0, 1) == 0;
            auto u = testing::random_unitriangular(n, desc, rng, upper);
            CHECK(nilpotent_exp(unipotent_log(u)) == u);
        }
    }
}

TEST_CASE("log rejections") {
    auto qq = RingDescriptor::rationals();
    try {
        (void)unipotent_log(mat2(q(2), q(0), q(0), q(1, 2)));
        FAIL("expected NotUnipotent");
    } catch (const RingError& e) {
        CHECK(e.code() == Errc::NotUnipotent);
    }
    auto zz = RingDescriptor::integers();
    try {
        (void)unipotent_log(RingMatrix::identity(2, zz));
        FAIL("expected RingWithoutRationals");
    } catch (const RingError& e) {
        CHECK(e.code() == Errc::RingWithoutRationals);
    }
    try {
        RingMatrix g(2, qq);
        g.set(0, 0, q(1));
        (void)nilpotent_exp(g);
        FAIL("expected NotNilpotent");
    } catch (const RingError& e) {
        CHECK(e.code() == Errc::NotNilpotent);
    }
}

TEST_CASE("sl_to_exponentials on the rotation matrix") {
    auto x = mat2(q(0), q(-1), q(1), q(0));
    auto cert = sl_to_exponentials(x);
    REQUIRE(cert.logs.size() == 3);
    CHECK(cert.logs[0] == mat2(q(0), q(-1), q(0), q(0)));
    CHECK(cert.logs[1] == mat2(q(0), q(0), q(1), q(0)));
    CHECK(cert.logs[2] == mat2(q(0), q(-1), q(0), q(0)));
    CHECK(replay_exp_certificate(cert));
    CHECK(exp_certificate_shape_ok(cert));
}

TEST_CASE("sl_to_exponentials: identity and random SL3 over jets") {
    auto jr = RingDescriptor::jet(RingDescriptor::rationals(), 4);
    CHECK(sl_to_exponentials(RingMatrix::identity(3, jr)).logs.empty());
    Rng rng(73);
    for (int trial = 0; trial < 8; ++trial) {
        auto x = testing::random_sl(3, jr, rng, 6);
        auto cert = sl_to_exponentials(x);
        CHECK(cert.logs.size() <= 6);
        CHECK(replay_exp_certificate(cert));
    }
}

TEST_CASE("scalar absorption: exp(sI + G) = exp(sI) exp(G) exactly") {
    auto jr = RingDescriptor::jet(RingDescriptor::rationals(), 4);
    Rng rng(79);
    for (int trial = 0; trial < 15; ++trial) {
        // nilpotent scalar: jet with zero constant term
        auto raw = testing::random_element(jr, rng);
        ElemVec coeffs = raw.parts();
        coeffs[0] = RingElement::zero(RingDescriptor::rationals());
        auto s = RingElement::jet(jr, std::move(coeffs));
        auto g = testing::random_unitriangular(2, jr, rng, true) -
                 RingMatrix::identity(2, jr); // strictly upper
        auto sum = RingMatrix::identity(2, jr).scaled(s) + g;
        auto lhs = matrix_exp_nilpotent(sum);
        auto rhs = RingMatrix::identity(2, jr).scaled(nilpotent_elem_exp(s)) * nilpotent_exp(g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gl_to_exponentials") {
    auto j3 = RingDescriptor::jet(RingDescriptor::rationals(), 3);
    auto one = RingElement::one(j3);
    SUBCASE("scalar matrix diag(1+2z, 1+2z)") {
        ElemVec c{RingElement::rational(Rat(1)), RingElement::rational(Rat(2))};
        auto u = RingElement::jet(j3, std::move(c));
        auto x = RingMatrix::identity(2, j3).scaled(u);
        auto cert = gl_to_exponentials(x);
        REQUIRE(cert.logs.size() == 1);
        // log(1+2z) = 2z - 2z^2 on the diagonal
        ElemVec lc{RingElement::rational(Rat(0)), RingElement::rational(Rat(2)),
                   RingElement::rational(Rat(-2))};
        auto expected = RingMatrix::identity(2, j3).scaled(RingElement::jet(j3, std::move(lc)));
        CHECK(cert.logs[0] == expected);
        CHECK(replay_exp_certificate(cert));
    }
    SUBCASE("identity gives no logs") {
        CHECK(gl_to_exponentials(RingMatrix::identity(2, j3)).logs.empty());
    }
    SUBCASE("principal-unit determinant, random instances") {
        auto j4 = RingDescriptor::jet(RingDescriptor::rationals(), 4);
        Rng rng(83);
        for (int trial = 0; trial < 15; ++trial) {
            auto u1 = testing::random_principal_unit(j4, rng);
            auto u2 = testing::random_principal_unit(j4, rng);
            RingMatrix d(2, j4);
            d.set(0, 0, u1);
            d.set(1, 1, u2);
            auto x = d * testing::random_sl(2, j4, rng, 4);
            auto cert = gl_to_exponentials(x);
            CHECK(cert.logs.size() <= 4);
            CHECK(replay_exp_certificate(cert));
            CHECK(exp_certificate_shape_ok(cert));
        }
    }
    SUBCASE("determinant with non-1 constant part is rejected") {
        auto x = RingMatrix::identity(2, j3).scaled(RingElement::from_rat(j3, Rat(2)));
        try {
            (void)gl_to_exponentials(x);
            FAIL("expected NotPrincipalUnit");
        } catch (const RingError& e) {
            CHECK(e.code() == Errc::NotPrincipalUnit);
        }
    }
    SUBCASE("non-invertible input is rejected") {
        auto qq = RingDescriptor::rationals();
        RingMatrix x(2, qq);
        x.set(0, 0, q(1));
        try {
            (void)gl_to_exponentials(x);
            FAIL("expected NotInvertible");
        } catch (const RingError& e) {
            CHECK(e.code() == Errc::NotInvertible);
        }
    }
}

TEST_CASE("gl determinant root identity: det X = f^n") {
    auto j4 = RingDescriptor::jet(RingDescriptor::rationals(), 4);
    Rng rng(89);
    for (int trial = 0; trial < 15; ++trial) {
        auto u = testing::random_principal_unit(j4, rng);
        int n = static_cast<int>(rng.pick(2, 4));
        auto f = unit_nth_root(u, n);
        RingElement p = RingElement::one(j4);
        for (int i = 0; i < n; ++i) p = p * f;
        CHECK(p == u);
    }
}
