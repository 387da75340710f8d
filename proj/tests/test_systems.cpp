#include <doctest.h>

#include <cmath>
#include <complex>

#include "supint/systems.hpp"
#include "test_helpers.hpp"

using namespace supint;

namespace {

PhasePoint uv_point(double u, double v, double pu, double pv) {
    PhasePoint x;
    x.chart_id = "D2.uv";
    x.q = {Scalar{u}, Scalar{v}};
    x.p = {Scalar{pu}, Scalar{pv}};
    return x;
}

PhasePoint d3_point(double u, double v, double pu, double pv) {
    PhasePoint x;
    x.chart_id = "D3.uv";
    x.q = {Scalar{u}, Scalar{v}};
    x.p = {Scalar{pu}, Scalar{pv}};
    return x;
}

} // namespace

TEST_SUITE("systems") {

TEST_CASE("hand values of the basic constants") {
    SystemInstance s = instantiate("D2.free");
    const PhasePoint a = uv_point(1, 0, 0, 1);
    CHECK(std::abs(eval(s.H, a) - 0.5) < 1e-15);
    CHECK(std::abs(constant_surface(s, "K", a) - 1.0) < 1e-15);
    CHECK(std::abs(constant_surface(s, "X1", a) - 0.0) < 1e-15);
    CHECK(std::abs(constant_surface(s, "X2", a) - (-0.5)) < 1e-15);
    const PhasePoint b = uv_point(1, 1, 1, 0);
    CHECK(std::abs(constant_surface(s, "X1", b) - (-1.0)) < 1e-15);
    CHECK(std::abs(constant_surface(s, "K", b)) < 1e-15);
    // first-order constants vanish with the momenta
    const PhasePoint c = uv_point(0.7, -0.3, 0, 0);
    CHECK(std::abs(constant_surface(s, "K", c)) < 1e-15);
    CHECK_THROWS_AS((void)constant_surface(s, "nope", c), UnknownConstant);
}

TEST_CASE("hand values for the exponential-metric free system") {
    SystemInstance s = instantiate("D3.free");
    // H = e^{2u}(p_u^2+p_v^2)/(4(e^u+1))
    const PhasePoint a = d3_point(0, 0, 1, 0);
    CHECK(std::abs(eval(s.H, a) - 0.125) < 1e-15);
    CHECK(std::abs(constant_surface(s, "K", a)) < 1e-15);
    CHECK(std::abs(constant_surface(s, "X1", a) - 0.125) < 1e-15);
    CHECK(std::abs(constant_surface(s, "X2", a)) < 1e-15);
    const PhasePoint b = d3_point(0, std::acos(-1.0) / 2, 1, 1);
    CHECK(std::abs(eval(s.H, b) - 0.25) < 1e-14);
    CHECK(std::abs(constant_surface(s, "K", b) - 1.0) < 1e-15);
    CHECK(std::abs(constant_surface(s, "X1", b) - 0.5) < 1e-14);
    CHECK(std::abs(constant_surface(s, "X2", b) - (-0.25)) < 1e-14);
    // kinetic coefficient of p_u^2 in the reference coordinates
    QuadraticCoefficients h = momentum_coefficients(s.H, b.q);
    const Scalar u = b.q[0];
    const Scalar want = 0.25 * std::exp(2.0 * u.real()) / (std::exp(u.real()) + 1.0);
    CHECK(std::abs(h.a11 - want) < 1e-13);
    CHECK(std::abs(h.a22 - want) < 1e-13);
    CHECK(std::abs(h.a12) < 1e-13);
}

TEST_CASE("exponential-metric potentials instantiate with their defaults") {
    for (const char* id : {"D3.A", "D3.B", "D3.C", "D3.D", "D3.E"}) {
        SystemInstance s = instantiate(id);
        INFO(id);
        CHECK(s.rec->id == id);
        Rng rng(3);
        PhasePoint x = sample_admissible(s, rng);
        Scalar h = eval(s.H, x);
        CHECK(std::isfinite(h.real()));
        CHECK(std::isfinite(h.imag()));
        for (const auto& name : s.rec->generators) {
            if (name == "R") continue;
            if (name == "H") continue;
            Scalar cv = constant_surface(s, name, x);
            CHECK(std::isfinite(cv.real()));
        }
    }
}

TEST_CASE("instantiate validates its inputs") {
    CHECK_THROWS_AS((void)instantiate("no.such.system"), UnknownSystem);
    // extra parameters are tolerated
    SystemInstance s = instantiate("D2.D", {{"d", Scalar{0.8}}, {"unused", Scalar{1.0}}});
    CHECK(s.rec->id == "D2.D");
}

TEST_CASE("zero potential collapses to the free system") {
    SystemInstance free_sys = instantiate("D2.free");
    SystemInstance a0 = instantiate(
        "D2.A", {{"a1", Scalar{0.0}}, {"a2", Scalar{0.0}}, {"a3", Scalar{0.0}}});
    Rng rng(20260822);
    for (int k = 0; k < 100; ++k) {
        PhasePoint x = sample_admissible(free_sys, rng);
        CHECK(std::abs(eval(a0.H, x) - eval(free_sys.H, x)) < 1e-12);
    }
}

TEST_CASE("constants vary continuously down to vanishing parameters") {
    SystemInstance free_sys = instantiate("D2.free");
    const Scalar eps{1e-8};
    SystemInstance near0 = instantiate("D2.A", {{"a1", eps}, {"a2", eps}, {"a3", eps}});
    Rng rng(77);
    for (int k = 0; k < 100; ++k) {
        PhasePoint x = sample_admissible(free_sys, rng);
        // R2 = K^2 + a1 v^2 + a2 v -> K^2
        Scalar kk = constant_surface(free_sys, "K", x);
        Scalar r2 = constant_surface(near0, "R2", x);
        double scale = std::max(1.0, std::abs(kk * kk));
        CHECK(std::abs(r2 - kk * kk) / scale < 1e-6);
        double hs = std::max(1.0, std::abs(eval(free_sys.H, x)));
        CHECK(std::abs(eval(near0.H, x) - eval(free_sys.H, x)) / hs < 1e-6);
    }
}

TEST_CASE("momentum coefficients expose the quadratic form") {
    SystemInstance s = instantiate("D2.free");
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        PhasePoint x = sample_admissible(s, rng);
        const Scalar u = x.q[0], v = x.q[1];
        const Scalar den = u * u + 1.0;
        QuadraticCoefficients h = momentum_coefficients(s.H, x.q);
        CHECK(std::abs(h.a11 - u * u / den) < 1e-12);
        CHECK(std::abs(h.a22 - u * u / den) < 1e-12);
        CHECK(std::abs(h.a12) < 1e-12);
        CHECK(std::abs(h.lambda) < 1e-12);
        CHECK(std::abs(h.a1[0]) < 1e-12);
        CHECK(std::abs(h.a1[1]) < 1e-12);
        QuadraticCoefficients k1 = momentum_coefficients(s.constant("K"), x.q);
        CHECK(std::abs(k1.a11) < 1e-12);
        CHECK(std::abs(k1.a22) < 1e-12);
        CHECK(std::abs(k1.a1[0]) < 1e-12);
        CHECK(std::abs(k1.a1[1] - 1.0) < 1e-12);
        QuadraticCoefficients x1 = momentum_coefficients(s.constant("X1"), x.q);
        CHECK(std::abs(x1.a11 - (-2.0 * v * u * u / den)) < 1e-12);
        CHECK(std::abs(x1.a22 - 2.0 * v / den) < 1e-12);
        CHECK(std::abs(x1.a12 - u) < 1e-12); // half the cross coefficient 2u
        CHECK(std::abs(x1.lambda) < 1e-12);
    }
    // potential shows up as the momentum-free part
    SystemInstance sd = instantiate("D2.D", {{"d", Scalar{0.8}}});
    PhasePoint x = uv_point(1.1, 0.2, 0.3, -0.4);
    QuadraticCoefficients hd = momentum_coefficients(sd.H, x.q);
    const Scalar u = x.q[0];
    CHECK(std::abs(hd.lambda - 0.8 * u * u / (u * u + 1.0)) < 1e-12);
}

TEST_CASE("admissible sampling respects the guards") {
    SystemInstance s = instantiate("D2.B"); // guards u, v, u^2+1
    Rng rng(123);
    for (int k = 0; k < 200; ++k) {
        PhasePoint x = sample_admissible(s, rng);
        CHECK(std::abs(x.q[0]) > kDeltaAdm);
        CHECK(std::abs(x.q[1]) > kDeltaAdm);
        CHECK(std::abs(x.q[0] * x.q[0] + 1.0) > kDeltaAdm);
    }
}

TEST_CASE("catalog listing covers the D2 slice") {
    auto entries = list_catalog();
    int d2 = 0;
    bool saw_free = false;
    for (const auto& e : entries) {
        if (e.space != "D2") continue;
        ++d2;
        if (e.id == "D2.free") {
            saw_free = true;
            CHECK(e.relations.size() == 3);
            CHECK(e.identities.size() == 1);
            CHECK(!e.metric_only);
            // reference chart plus the printed separable displays
            CHECK(e.charts.size() >= 4);
        }
    }
    CHECK(saw_free);
    CHECK(d2 == 5);
}

TEST_CASE("catalog listing covers the exponential-metric slice") {
    auto entries = list_catalog();
    int d3 = 0;
    bool saw_free = false;
    for (const auto& e : entries) {
        if (e.space != "D3") continue;
        ++d3;
        if (e.id == "D3.free") {
            saw_free = true;
            CHECK(e.relations.size() == 3);
            CHECK(e.identities.size() == 1);
            CHECK(!e.metric_only);
        }
    }
    CHECK(saw_free);
    CHECK(d3 == 6);
}

TEST_CASE("sphere model points satisfy their constraints") {
    Rng rng(9);
    for (int k = 0; k < 50; ++k) {
        PhasePoint zw;
        zw.chart_id = "S2C.zw";
        zw.q = {rng.box(-0.8, 0.8), rng.box(-0.8, 0.8)};
        zw.p = {rng.box(-1.0, 1.0), rng.box(-1.0, 1.0)};
        if (std::abs(1.0 + zw.q[0] * zw.q[1]) < 0.05) continue;
        SphereModelPoint m = sphere_model_point(zw);
        Scalar ss = m.s[0] * m.s[0] + m.s[1] * m.s[1] + m.s[2] * m.s[2];
        CHECK(std::abs(ss - 1.0) < 1e-12);
        Scalar sj = m.s[0] * m.J[0] + m.s[1] * m.J[1] + m.s[2] * m.J[2];
        CHECK(std::abs(sj) < 1e-12);
        // J^2 = (1+zw)^2 p_z p_w is the sphere Casimir in these coordinates
        Scalar jj = m.J[0] * m.J[0] + m.J[1] * m.J[1] + m.J[2] * m.J[2];
        Scalar casimir = (1.0 + zw.q[0] * zw.q[1]) * (1.0 + zw.q[0] * zw.q[1]) *
                         zw.p[0] * zw.p[1];
        CHECK(std::abs(jj - casimir) < 1e-10);
    }
}

} // TEST_SUITE
