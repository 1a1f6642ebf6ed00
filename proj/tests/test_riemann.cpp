#include "doctest.h"

#include <cmath>
#include <random>

#include "ringfactor/riemann.hpp"

#include "test_support.hpp"

using namespace ringfactor;
using analytic::FuncExpr;
using analytic::FuncPtr;

namespace {

RingElement q(long num, long den = 1) { return RingElement::rational(Rat(num) / Rat(den)); }

RingDescriptor poly_ring() { return RingDescriptor::poly(RingDescriptor::rationals()); }

RingElement zp(std::initializer_list<long> coeffs) {
    ElemVec v;
    for (long c : coeffs) v.push_back(q(c));
    return RingElement::poly(poly_ring(), std::move(v));
}

RingMatrix pmat(RingElement a, RingElement b, RingElement c, RingElement d) {
    RingMatrix m(2, poly_ring());
    m.set(0, 0, std::move(a));
    m.set(0, 1, std::move(b));
    m.set(1, 0, std::move(c));
    m.set(1, 1, std::move(d));
    return m;
}

/// SL2 template [[1 + b c, b],[c, 1]] for arbitrary polynomials b, c.
RingMatrix sl2_template(RingElement b, RingElement c) {
    auto one = RingElement::one(poly_ring());
    return pmat(one + b * c, b, c, one);
}

double mat_dist(std::span<const cplx> a, std::span<const cplx> b) {
    double out = 0.0;
    for (size_t k = 0; k < a.size(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
    return out;
}

} // namespace

TEST_CASE("expm agrees with the 2x2 closed form") {
    std::mt19937_64 eng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<cplx, 4> m{cplx(dist(eng), dist(eng)), cplx(dist(eng), dist(eng)),
                              cplx(dist(eng), dist(eng)), cplx(dist(eng), dist(eng))};
        auto pade = expm(std::vector<cplx>(m.begin(), m.end()), 2);
        auto closed = expm2_closed(m);
        double scale = 0.0;
        for (cplx v : closed) scale = std::max(scale, std::abs(v));
        for (size_t k = 0; k < 4; ++k)
            CHECK(std::abs(pade[k] - closed[k]) <= 1e-11 * (1.0 + scale));
    }
}

TEST_CASE("expm of a strictly upper matrix") {
    std::vector<cplx> n{0.0, 3.5, 0.0, 0.0};
    auto e = expm(n, 2);
    CHECK(std::abs(e[0] - 1.0) < 1e-14);
    CHECK(std::abs(e[1] - 3.5) < 1e-13);
    CHECK(std::abs(e[2]) < 1e-14);
    CHECK(std::abs(e[3] - 1.0) < 1e-14);
}

TEST_CASE("double_ev_log") {
    SUBCASE("scalar matrix diag(e, e)") {
        FuncMatrix y(2);
        const double e = std::exp(1.0);
        y.set(0, 0, FuncExpr::constant(e));
        y.set(1, 1, FuncExpr::constant(e));
        auto g = double_ev_log(y, FuncExpr::constant(e), FuncExpr::constant(2.0));
        auto gv = g.sample(0.3);
        CHECK(std::abs(gv[0] - 1.0) < 1e-12);
        CHECK(std::abs(gv[1]) < 1e-12);
        CHECK(std::abs(gv[2]) < 1e-12);
        CHECK(std::abs(gv[3] - 1.0) < 1e-12);
    }
    SUBCASE("constant Jordan-type block [[1/2, 3],[0, 1/2]]") {
        FuncMatrix y(2);
        y.set(0, 0, FuncExpr::constant(0.5));
        y.set(0, 1, FuncExpr::constant(3.0));
        y.set(1, 1, FuncExpr::constant(0.5));
        auto lam = FuncExpr::constant(0.5);
        auto gam = FuncExpr::constant(2.0 * std::log(0.5));
        auto g = double_ev_log(y, lam, gam);
        // exp(G) must reproduce Y, residual checked with the numeric oracle
        SampleGrid grid;
        for (cplx z : grid.points()) {
            auto gv = g.sample(z);
            auto ev = expm(gv, 2);
            auto yv = y.sample(z);
            CHECK(mat_dist(ev, yv) <= 1e-12 * 4);
        }
    }
    SUBCASE("unipotent [[1,1],[0,1]] gives the nilpotent log") {
        FuncMatrix y(2);
        y.set(0, 0, FuncExpr::constant(1.0));
        y.set(0, 1, FuncExpr::constant(1.0));
        y.set(1, 1, FuncExpr::constant(1.0));
        auto g = double_ev_log(y, FuncExpr::constant(1.0), FuncExpr::constant(0.0));
        auto gv = g.sample(1.7);
        CHECK(std::abs(gv[0]) < 1e-12);
        CHECK(std::abs(gv[1] - 1.0) < 1e-12);
        CHECK(std::abs(gv[2]) < 1e-12);
        CHECK(std::abs(gv[3]) < 1e-12);
    }
    SUBCASE("rejects matrices without a double eigenvalue") {
        FuncMatrix y(2);
        y.set(0, 0, FuncExpr::constant(2.0));
        y.set(1, 1, FuncExpr::constant(0.5));
        try {
            (void)double_ev_log(y, FuncExpr::constant(1.0), FuncExpr::constant(0.0));
            FAIL("expected NotDoubleEigenvalue");
        } catch (const RingError& e) {
            CHECK(e.code() == Errc::NotDoubleEigenvalue);
        }
    }
}

TEST_CASE("three_exp_sl2 worked cases") {
    VerifyTolerances tol;
    SUBCASE("identity") {
        auto cert = three_exp_sl2(RingMatrix::identity(2, poly_ring()));
        auto v = verify_exp_certificate(cert);
        CHECK(v.product_residual <= 1e-12);
        CHECK(v.pass(tol));
        CHECK(cert.kind == ThreeExpCase::CZero);
    }
    SUBCASE("constant upper triangular [[2,3],[0,1/2]]") {
        auto x = pmat(zp({2}), zp({3}), zp({}), RingElement::poly(poly_ring(), {q(1, 2)}));
        auto cert = three_exp_sl2(x);
        CHECK(cert.kind == ThreeExpCase::CZero);
        // double eigenvalue of X * diag(a^-2, 1) is a^-1 = 1/2
        auto yv = cert.y.sample(0.9);
        CHECK(std::abs(yv[0] - 0.5) < 1e-12);
        CHECK(std::abs(yv[3] - 0.5) < 1e-12);
        auto v = verify_exp_certificate(cert);
        CHECK(v.pass(tol));
    }
    SUBCASE("lower shear [[1,0],[z,1]]: simple zero of c") {
        auto x = pmat(zp({1}), zp({}), zp({0, 1}), zp({1}));
        auto cert = three_exp_sl2(x);
        CHECK(cert.kind == ThreeExpCase::CNonzero);
        REQUIRE(cert.c_roots.size() == 1);
        CHECK(std::abs(cert.c_roots[0].location) < 1e-9);
        auto v = verify_exp_certificate(cert);
        CHECK(v.product_residual <= 1e-10);
        CHECK(v.pass(tol));
    }
    SUBCASE("rejects non-SL input") {
        auto x = pmat(zp({2}), zp({}), zp({}), zp({1}));
        try {
            (void)three_exp_sl2(x);
            FAIL("expected NotSL");
        } catch (const RingError& e) {
            CHECK(e.code() == Errc::NotSL);
        }
    }
}

TEST_CASE("three_exp_sl2 across root structures") {
    VerifyTolerances tol;
    struct Case {
        RingElement b, c;
    };
    // keep b*c small so exp(alpha_log) stays moderate on the radius-2 grid;
    // the determinant cancellation noise scales with the square of the
    // largest sampled entry
    auto quarter = RingElement::poly(poly_ring(), {q(1, 4)});
    std::vector<Case> cases;
    cases.push_back({quarter, zp({0, 1})});                            // c = z
    cases.push_back({RingElement::poly(poly_ring(), {q(0), q(1, 4)}), zp({-1, 1})}); // c = z-1
    cases.push_back({quarter, zp({0, 0, 1})});                         // c = z^2 (double zero)
    cases.push_back({-quarter, zp({0, -1, 1})});                       // c = z(z-1)
    cases.push_back({quarter, zp({1, 0, 1})});                         // c = z^2 + 1
    cases.push_back({zp({2}), zp({2})});                               // constant nonzero c
    for (const auto& tc : cases) {
        auto x = sl2_template(tc.b, tc.c);
        auto cert = three_exp_sl2(x);
        auto v = verify_exp_certificate(cert);
        CHECK(v.product_residual <= tol.product);
        CHECK(v.discriminant_residual <= tol.discriminant);
        CHECK(v.trace_sign_residual <= tol.trace_sign);
    }
}

TEST_CASE("a*alpha - 1 vanishes to the full root order of c") {
    // c = (z - 1/2)^2, a double zero
    auto cert = three_exp_sl2(sl2_template(RingElement::poly(poly_ring(), {q(1, 4)}),
                                           RingElement::poly(poly_ring(), {q(1, 4), q(-1), q(1)})));
    REQUIRE(cert.c_roots.size() == 1);
    REQUIRE(cert.c_roots[0].multiplicity == 2);
    auto alpha = FuncExpr::exp(cert.alpha_log);
    auto a = cert.target.at(0, 0);
    auto prod_minus_one = FuncExpr::sub(FuncExpr::mul(a, alpha), FuncExpr::constant(1.0));
    analytic::Jet j = analytic::jet_at(prod_minus_one, cert.c_roots[0].location, 4);
    // jets of 1/a were matched through the full multiplicity, so the first
    // multiplicity+1 coefficients vanish
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(j.coefficient(k)) < 1e-9);
}

TEST_CASE("three_exp_sl2 on seeded random SL2 templates") {
    // moderate coefficients keep exp(alpha_log) tame on the grid; the
    // certificate conditioning scales with |b * c'| at the roots of c
    testing::Rng rng(555);
    VerifyTolerances tol;
    int nontrivial = 0;
    for (int trial = 0; trial < 60; ++trial) {
        ElemVec bv;
        long bdeg = rng.pick(0, 1);
        for (long i = 0; i <= bdeg; ++i)
            bv.push_back(RingElement::rational(Rat(rng.pick(-2, 2)) / Rat(16)));
        auto b = RingElement::poly(poly_ring(), std::move(bv));
        ElemVec cv;
        long cdeg = rng.pick(0, 2);
        for (long i = 0; i <= cdeg; ++i) cv.push_back(q(rng.pick(-1, 1)));
        auto c = RingElement::poly(poly_ring(), std::move(cv));
        auto x = sl2_template(b, c);
        auto cert = three_exp_sl2(x);
        auto v = verify_exp_certificate(cert);
        CHECK(v.product_residual <= tol.product);
        CHECK(v.discriminant_residual <= tol.discriminant);
        CHECK(v.trace_sign_residual <= tol.trace_sign);
        if (cert.kind == ThreeExpCase::CNonzero && !cert.c_roots.empty()) ++nontrivial;
    }
    CHECK(nontrivial > 20); // the family genuinely exercises the root machinery
}

TEST_CASE("verify_exp_certificate flags tampering") {
    auto x = sl2_template(zp({1}), zp({0, 1}));
    auto cert = three_exp_sl2(x);
    REQUIRE(verify_exp_certificate(cert).pass({}));
    auto bad = cert;
    bad.logs[1] = FuncMatrix(2); // zero out the second log
    bad.logs[1].set(0, 1, FuncExpr::constant(1.0));
    auto v = verify_exp_certificate(bad);
    CHECK(v.product_residual > 1e-4);
}

TEST_CASE("null homotopy") {
    SUBCASE("identity stays constant") {
        FuncMatrix f = FuncMatrix::identity(2);
        NullHomotopy h(f);
        for (double t : {0.0, 0.3, 0.7, 1.0}) {
            auto v = h.eval(t, cplx(0.4, 0.2));
            CHECK(std::abs(v[0] - 1.0) < 1e-14);
            CHECK(std::abs(v[1]) < 1e-14);
            CHECK(std::abs(v[2]) < 1e-14);
            CHECK(std::abs(v[3] - 1.0) < 1e-14);
        }
    }
    SUBCASE("shear [[1,z],[0,1]] at t = 3/4 becomes [[1, z/2],[0,1]]") {
        FuncMatrix f = FuncMatrix::identity(2);
        f.set(0, 1, FuncExpr::poly({GaussRat(0), GaussRat(1)}));
        NullHomotopy h(f);
        cplx z(0.8, -0.3);
        auto v = h.eval(0.75, z);
        CHECK(std::abs(v[1] - 0.5 * z) < 1e-14);
    }
    SUBCASE("constant rotation contracts through 3 shears with det 1") {
        FuncMatrix f(2);
        f.set(0, 1, FuncExpr::constant(-1.0));
        f.set(1, 0, FuncExpr::constant(1.0));
        NullHomotopy h(f);
        // endpoints
        auto v1 = h.eval(1.0, 0.0);
        CHECK(std::abs(v1[1] + 1.0) < 1e-14);
        auto v0 = h.eval(0.0, 0.0);
        CHECK(std::abs(v0[0] - 1.0) < 1e-15);
        CHECK(std::abs(v0[1]) < 1e-15);
        // det along the tail stage
        for (double t : {0.1, 0.25, 0.4, 0.5}) {
            auto v = h.eval(t, 0.3);
            cplx det = v[0] * v[3] - v[1] * v[2];
            CHECK(std::abs(det - 1.0) < 1e-13);
        }
    }
    SUBCASE("det stays 1 on a (t, z) grid for a random SL3 polynomial matrix") {
        testing::Rng rng(91);
        auto pr = poly_ring();
        auto x = testing::random_sl(3, pr, rng, 4);
        auto f = func_matrix_from_poly(x);
        NullHomotopy h(f);
        double worst = 0.0;
        for (int ti = 0; ti <= 10; ++ti) {
            double t = ti / 10.0;
            for (int zi = 0; zi < 10; ++zi) {
                cplx z = 0.9 * std::exp(cplx(0, 0.628 * zi));
                auto v = h.eval(t, z);
                cplx det = v[0] * (v[4] * v[8] - v[5] * v[7]) - v[1] * (v[3] * v[8] - v[5] * v[6]) +
                           v[2] * (v[3] * v[7] - v[4] * v[6]);
                worst = std::max(worst, std::abs(det - 1.0));
            }
        }
        CHECK(worst <= 1e-12);
    }
    SUBCASE("non-SL input is rejected") {
        FuncMatrix f = FuncMatrix::identity(2);
        f.set(0, 0, FuncExpr::constant(2.0));
        CHECK_THROWS_AS((void)NullHomotopy{f}, RingError);
    }
}
