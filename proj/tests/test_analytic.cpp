#include "doctest.h"

#include <cmath>
#include <random>

#include "ringfactor/analytic.hpp"

using namespace ringfactor;
using namespace ringfactor::analytic;

namespace {

GaussRat gq(long num, long den = 1) { return GaussRat(Rat(num) / Rat(den), Rat(0)); }

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("evaluate basics") {
    auto z = FuncExpr::variable();
    CHECK(close(evaluate(FuncExpr::exp(z), 0.0), 1.0));
    auto p = FuncExpr::poly({gq(1), gq(2)}); // 1 + 2z
    CHECK(close(evaluate(p, cplx(0, 1)), cplx(1, 2)));
}

TEST_CASE("annotated quotient evaluates through the removable singularity") {
    auto z = FuncExpr::variable();
    auto num = FuncExpr::poly({gq(-1), gq(0), gq(1)}); // z^2 - 1
    auto den = FuncExpr::poly({gq(-1), gq(1)});        // z - 1
    auto f = FuncExpr::div(num, den, {{cplx(1.0), 1}});
    CHECK(close(evaluate(f, cplx(1.0)), 2.0));
    CHECK(close(evaluate(f, cplx(1.0) + cplx(1e-5, 1e-5)), 2.0 + cplx(1e-5, 1e-5), 1e-10));
    CHECK(close(evaluate(f, cplx(3.0)), 4.0));

    auto bare = FuncExpr::div(num, den);
    CHECK_THROWS_AS((void)evaluate(bare, cplx(1.0)), RingError);
    (void)z;
}

TEST_CASE("jet extraction") {
    auto z = FuncExpr::variable();
    SUBCASE("exp(z) at 0") {
        Jet j = jet_at(FuncExpr::exp(z), 0.0, 2);
        CHECK(close(j.coefficient(0), 1.0));
        CHECK(close(j.coefficient(1), 1.0));
        CHECK(close(j.coefficient(2), 0.5));
    }
    SUBCASE("geometric series 1/(1-z)") {
        auto one = FuncExpr::constant(1.0);
        auto den = FuncExpr::poly({gq(1), gq(-1)}); // 1 - z
        Jet j = jet_at(FuncExpr::div(one, den), 0.0, 3);
        for (int k = 0; k <= 3; ++k) CHECK(close(j.coefficient(k), 1.0));
    }
    SUBCASE("product rule against finite differences") {
        // f = exp(z) * (1 + z) / (2 + z), jet at a few base points
        auto f = FuncExpr::div(
            FuncExpr::mul(FuncExpr::exp(z), FuncExpr::poly({gq(1), gq(1)})),
            FuncExpr::poly({gq(2), gq(1)}));
        for (cplx base : {cplx(0.0), cplx(0.5, 0.3), cplx(-0.2, 1.0)}) {
            Jet j = jet_at(f, base, 2);
            const double h = 1e-5;
            cplx fp = (evaluate(f, base + h) - evaluate(f, base - h)) / (2 * h);
            cplx fpp = (evaluate(f, base + h) - 2.0 * evaluate(f, base) + evaluate(f, base - h)) /
                       (h * h);
            CHECK(close(j.coefficient(0), evaluate(f, base), 1e-12));
            CHECK(close(j.coefficient(1), fp, 1e-6));
            CHECK(close(j.coefficient(2), fpp / 2.0, 1e-4));
        }
    }
    SUBCASE("pole at base") {
        auto one = FuncExpr::constant(1.0);
        auto den = FuncExpr::poly({gq(0), gq(1)}); // z
        try {
            (void)jet_at(FuncExpr::div(one, den), 0.0, 2);
            FAIL("expected PoleAtBase");
        } catch (const RingError& e) {
            CHECK(e.code() == Errc::PoleAtBase);
        }
    }
    SUBCASE("valuation shift divides out a removable singularity") {
        // (z^2 - 1)/(z - 1) at base 1: jet of z + 1
        auto num = FuncExpr::poly({gq(-1), gq(0), gq(1)});
        auto den = FuncExpr::poly({gq(-1), gq(1)});
        Jet j = jet_at(FuncExpr::div(num, den, {{cplx(1.0), 1}}), cplx(1.0), 2);
        CHECK(close(j.coefficient(0), 2.0));
        CHECK(close(j.coefficient(1), 1.0));
        CHECK(close(j.coefficient(2), 0.0));
    }
}

TEST_CASE("jet log") {
    SUBCASE("log(1 + h) to first order") {
        Jet j(0.0, {cplx(1.0), cplx(1.0)});
        Jet l = jet_log(j);
        CHECK(close(l.coefficient(0), 0.0));
        CHECK(close(l.coefficient(1), 1.0));
    }
    SUBCASE("chain rule at constant e") {
        Jet j(0.0, {cplx(std::exp(1.0)), cplx(std::exp(1.0))});
        Jet l = jet_log(j);
        CHECK(close(l.coefficient(0), 1.0));
        CHECK(close(l.coefficient(1), 1.0));
    }
    SUBCASE("roundtrip exp(log(j)) = j") {
        std::mt19937_64 eng(13);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<cplx> coeffs;
            coeffs.emplace_back(dist(eng) + 2.0, dist(eng)); // keep b0 away from 0
            for (int k = 0; k < 4; ++k) coeffs.emplace_back(dist(eng), dist(eng));
            Jet j(cplx(dist(eng), dist(eng)), coeffs);
            Jet r = jet_exp(jet_log(j));
            for (int k = 0; k <= j.order(); ++k)
                CHECK(close(r.coefficient(k), j.coefficient(k), 1e-12));
            Jet r2 = jet_log(jet_exp(j));
            for (int k = 1; k <= j.order(); ++k)
                CHECK(close(r2.coefficient(k), j.coefficient(k), 1e-12));
        }
    }
    SUBCASE("vanishing constant term") {
        Jet j(0.0, {cplx(0.0), cplx(1.0)});
        try {
            (void)jet_log(j);
            FAIL("expected VanishingConstantTerm");
        } catch (const RingError& e) {
            CHECK(e.code() == Errc::VanishingConstantTerm);
        }
    }
}

TEST_CASE("polynomial roots") {
    SUBCASE("z^2 has a double root at 0") {
        std::vector<cplx> p{0.0, 0.0, 1.0};
        auto rs = poly_roots(p, 1e-10);
        REQUIRE(rs.roots.size() == 1);
        CHECK(rs.roots[0].multiplicity == 2);
        CHECK(std::abs(rs.roots[0].location) < 1e-7);
    }
    SUBCASE("z^2 - 1") {
        std::vector<cplx> p{-1.0, 0.0, 1.0};
        auto rs = poly_roots(p, 1e-12);
        REQUIRE(rs.roots.size() == 2);
        CHECK(rs.residual_bound <= 1e-12 * 2);
        double d1 = std::min(std::abs(rs.roots[0].location - 1.0),
                             std::abs(rs.roots[0].location + 1.0));
        CHECK(d1 < 1e-10);
    }
    SUBCASE("(z-2)^3 (z+1) clusters into multiplicities 3 and 1") {
        // z^4 - 5 z^3 + 6 z^2 + 4 z - 8
        std::vector<cplx> p{-8.0, 4.0, 6.0, -5.0, 1.0};
        auto rs = poly_roots(p, 1e-8);
        REQUIRE(rs.roots.size() == 2);
        int m2 = 0, m_1 = 0;
        // location accuracy for a triple root is limited to ~(eps)^(1/3)
        for (const auto& r : rs.roots) {
            if (std::abs(r.location - 2.0) < 1e-4) m2 = r.multiplicity;
            if (std::abs(r.location + 1.0) < 1e-6) m_1 = r.multiplicity;
        }
        CHECK(m2 == 3);
        CHECK(m_1 == 1);
    }
    SUBCASE("degree must be at least 1") {
        std::vector<cplx> p{1.0};
        CHECK_THROWS_AS((void)poly_roots(p, 1e-10), RingError);
    }
}

TEST_CASE("hermite interpolation") {
    SUBCASE("single node gives the truncated Taylor polynomial") {
        HermiteNode node{0.0, {cplx(1.0), cplx(2.0)}};
        auto p = hermite_interpolate(std::vector<HermiteNode>{node});
        REQUIRE(p.size() == 2);
        CHECK(close(p[0], 1.0));
        CHECK(close(p[1], 2.0));
    }
    SUBCASE("two zero values give the zero polynomial") {
        std::vector<HermiteNode> nodes{{0.0, {cplx(0.0)}}, {1.0, {cplx(0.0)}}};
        auto p = hermite_interpolate(nodes);
        for (cplx c : p) CHECK(close(c, 0.0));
    }
    SUBCASE("duplicate base points are rejected") {
        std::vector<HermiteNode> nodes{{1.0, {cplx(1.0)}}, {1.0, {cplx(2.0)}}};
        CHECK_THROWS_AS((void)hermite_interpolate(nodes), RingError);
    }
    SUBCASE("float interpolant re-extracts the input jets") {
        std::mt19937_64 eng(31);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<HermiteNode> nodes;
            const cplx bases[] = {cplx(0.0), cplx(1.0, 0.5), cplx(-1.5, -0.3)};
            for (cplx b : bases) {
                std::vector<cplx> vals;
                int order = static_cast<int>(eng() % 3);
                for (int k = 0; k <= order; ++k) vals.emplace_back(dist(eng), dist(eng));
                nodes.push_back({b, vals});
            }
            auto p = hermite_interpolate(nodes);
            auto f = FuncExpr::fpoly(p);
            for (const auto& node : nodes) {
                Jet j = jet_at(f, node.base, static_cast<int>(node.values.size()) - 1);
                for (size_t k = 0; k < node.values.size(); ++k)
                    CHECK(close(j.coefficient(static_cast<int>(k)), node.values[k], 1e-12));
            }
        }
    }
    SUBCASE("exact interpolant re-extracts exactly") {
        std::mt19937_64 eng(37);
        auto rand_g = [&]() {
            return GaussRat(Rat(static_cast<long>(eng() % 7) - 3) / Rat(1 + eng() % 3),
                            Rat(static_cast<long>(eng() % 7) - 3) / Rat(1 + eng() % 3));
        };
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<ExactHermiteNode> nodes;
            const GaussRat bases[] = {gq(0), gq(1), GaussRat(Rat(-1), Rat(2))};
            for (const auto& b : bases) {
                std::vector<GaussRat> vals;
                int order = static_cast<int>(eng() % 3);
                for (int k = 0; k <= order; ++k) vals.push_back(rand_g());
                nodes.push_back({b, vals});
            }
            auto p = hermite_interpolate_exact(nodes);
            for (const auto& node : nodes) {
                auto jet = exact_poly_jet(p, node.base, static_cast<int>(node.values.size()) - 1);
                for (size_t k = 0; k < node.values.size(); ++k)
                    CHECK(jet[k] == node.values[k]);
            }
        }
    }
}
