#include <doctest.h>

#include "supint/phase.hpp"
#include "supint/quadrature.hpp"
#include "supint/rng.hpp"
#include "test_helpers.hpp"

#ifdef SUPINT_HAVE_GSL
#include <gsl/gsl_sf_ellint.h>
#endif

using namespace supint;
using supint::testing::fd_gradient;
using supint::testing::random_phase_point;
using supint::testing::random_poly_phase_function;

namespace {

const E u = var(0), v = var(1), pu = var(2), pv = var(3);

PhaseFunction make_fn(E e, const char* chart = "uv") {
    PhaseFunction f;
    f.chart_id = chart;
    f.expr = e.p;
    return f;
}

// Kinetic part of the type-two Darboux Hamiltonian in its reference chart.
PhaseFunction d2_h0() {
    PhaseFunction f = make_fn(sq(u) * (sq(pu) + sq(pv)) / (sq(u) + 1.0));
    f.arity = Arity::Quadratic;
    f.guards = {var(0).p};
    return f;
}

} // namespace

TEST_SUITE("numkernel") {

TEST_CASE("dual arithmetic differentiates a transcendental compound") {
    // f = exp(sin(z)) * sqrt(z) + atan(z) at a complex point, d/dz by duals
    // against the closed-form derivative.
    const Scalar z0{0.7, 0.3};
    Dual<Scalar, 1> z(z0, 0);
    auto f = exp(sin(z)) * sqrt(z) + atan(z);
    const Scalar expect = std::exp(std::sin(z0)) *
                              (std::cos(z0) * std::sqrt(z0) + 0.5 / std::sqrt(z0)) +
                          1.0 / (1.0 + z0 * z0);
    CHECK(std::abs(f.d[0] - expect) < 1e-14);
}

TEST_CASE("nested duals yield exact second derivatives") {
    // f(u,v) = u^2 v + u v^3: d2f/dudv = 2u + 3v^2.
    const Scalar u0{1.2, -0.4}, v0{0.5, 0.8};
    std::array<Dual44, 4> vars;
    const std::array<Scalar, 4> flat{u0, v0, Scalar{0}, Scalar{0}};
    for (int i = 0; i < 4; ++i) {
        vars[i].v = Dual4(flat[i], i);
        vars[i].d[i] = Dual4(Scalar{1.0});
    }
    const auto& U = vars[0];
    const auto& V = vars[1];
    const Dual44 f = U * U * V + U * V * V * V;
    const Scalar mixed = f.d[0].d[1];
    CHECK(std::abs(mixed - (2.0 * u0 + 3.0 * v0 * v0)) < 1e-13);
}

TEST_CASE("eval anchors for the type-two kinetic Hamiltonian") {
    const PhaseFunction H0 = d2_h0();
    const PhaseFunction K = make_fn(pv);
    PhasePoint x{"uv", {Scalar{1.0}, Scalar{0.0}}, {Scalar{0.0}, Scalar{1.0}}};
    CHECK(std::abs(eval(H0, x) - Scalar{0.5}) < 1e-15);
    CHECK(std::abs(eval(K, x) - Scalar{1.0}) < 1e-15);
}

TEST_CASE("eval rejects guarded singular points") {
    const PhaseFunction H0 = d2_h0();
    PhasePoint bad{"uv", {Scalar{0.0}, Scalar{1.0}}, {Scalar{1.0}, Scalar{1.0}}};
    CHECK_THROWS_AS(eval(H0, bad), InadmissiblePoint);
    PhasePoint wrong{"polar", {Scalar{1.0}, Scalar{0.0}}, {Scalar{0.0}, Scalar{1.0}}};
    CHECK_THROWS_AS(eval(H0, wrong), ChartMismatch);
}

TEST_CASE("gradient of linear momentum function") {
    const PhaseFunction K = make_fn(pv);
    Rng rng(11);
    const PhasePoint x = random_phase_point(rng);
    const Gradient g = gradient(K, x);
    CHECK(std::abs(g.dq[0]) == 0.0);
    CHECK(std::abs(g.dq[1]) == 0.0);
    CHECK(std::abs(g.dp[0]) == 0.0);
    CHECK(std::abs(g.dp[1] - Scalar{1.0}) == 0.0);
}

TEST_CASE("gradient anchor dH0/du") {
    const PhaseFunction H0 = d2_h0();
    PhasePoint x{"uv", {Scalar{1.0}, Scalar{0.0}}, {Scalar{0.0}, Scalar{1.0}}};
    const Gradient g = gradient(H0, x);
    // dH0/du = 2u p_v^2 / (u^2+1)^2 at (1,0,0,1) -> 0.5
    CHECK(std::abs(g.dq[0] - Scalar{0.5}) < 1e-15);
}

TEST_CASE("gradients agree with central differences on random points") {
    Rng rng(29);
    const PhaseFunction f =
        make_fn(exp(u * 0.3) * sq(pu) + sin(v) * pu * pv + sq(u) * v / (sq(pv) + 4.0));
    int tested = 0;
    while (tested < 100) {
        const PhasePoint x = random_phase_point(rng);
        const Gradient g = gradient(f, x);
        const Gradient fd = fd_gradient(f, x);
        for (int i = 0; i < 2; ++i) {
            CHECK(std::abs(g.dq[i] - fd.dq[i]) < 1e-6 * (1.0 + std::abs(g.dq[i])));
            CHECK(std::abs(g.dp[i] - fd.dp[i]) < 1e-6 * (1.0 + std::abs(g.dp[i])));
        }
        ++tested;
    }
}

TEST_CASE("bracket antisymmetry and self-annihilation") {
    Rng rng(5);
    const PhaseFunction H0 = d2_h0();
    for (int t = 0; t < 20; ++t) {
        PhasePoint x = random_phase_point(rng);
        if (std::abs(x.q[0]) <= kDeltaAdm) continue;
        CHECK(std::abs(poisson_bracket(H0, H0, x)) < 1e-12);
        const PhaseFunction f = random_poly_phase_function(rng);
        const PhaseFunction g = random_poly_phase_function(rng);
        const Scalar fg = poisson_bracket(f, g, x);
        const Scalar gf = poisson_bracket(g, f, x);
        CHECK(std::abs(fg + gf) < 1e-12 * (1.0 + std::abs(fg)));
    }
}

TEST_CASE("bracket Leibniz rule on random polynomials") {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const PhaseFunction f = random_poly_phase_function(rng);
        const PhaseFunction g = random_poly_phase_function(rng);
        const PhaseFunction h = random_poly_phase_function(rng);
        PhaseFunction gh;
        gh.chart_id = "uv";
        gh.expr = (E{g.expr} * E{h.expr}).p;
        const PhasePoint x = random_phase_point(rng);
        const Scalar lhs = poisson_bracket(f, gh, x);
        const Scalar rhs =
            poisson_bracket(f, g, x) * eval(h, x) + eval(g, x) * poisson_bracket(f, h, x);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
    }
}

TEST_CASE("bracket Jacobi identity on random polynomial triples") {
    Rng rng(23);
    const auto nested = [](const PhaseFunction& a, const PhaseFunction& b,
                           const PhaseFunction& c, const PhasePoint& x) {
        // {a, {b,c}} using the dual-valued bracket for the inner pair.
        const Dual4 inner = poisson_bracket_dual(b, c, x);
        Gradient gi;
        gi.dq = {inner.d[0], inner.d[1]};
        gi.dp = {inner.d[2], inner.d[3]};
        const Gradient ga = gradient(a, x);
        Scalar r{};
        for (int i = 0; i < 2; ++i) r += ga.dp[i] * gi.dq[i] - ga.dq[i] * gi.dp[i];
        return r;
    };
    for (int t = 0; t < 50; ++t) {
        const PhaseFunction f = random_poly_phase_function(rng);
        const PhaseFunction g = random_poly_phase_function(rng);
        const PhaseFunction h = random_poly_phase_function(rng);
        const PhasePoint x = random_phase_point(rng);
        const Scalar s1 = nested(f, g, h, x);
        const Scalar s2 = nested(g, h, f, x);
        const Scalar s3 = nested(h, f, g, x);
        const double scale = std::max({1.0, std::abs(s1), std::abs(s2), std::abs(s3)});
        CHECK(std::abs(s1 + s2 + s3) <= 1e-9 * scale);
    }
}

TEST_CASE("jet product rule is exact for monomials") {
    // f = u^2 v, g = u v^3 at base (2,3); product coefficients are those of
    // u^3 v^4 expanded around the base - spot-check against binomials.
    const std::array<Scalar, 2> base{Scalar{2.0}, Scalar{3.0}};
    const Jet U = Jet::coordinate(base, 4, 0);
    const Jet V = Jet::coordinate(base, 4, 1);
    const Jet f = U * U * V;
    const Jet g = U * V * V * V;
    const Jet p = f * g;
    // (2+du)^3 (3+dv)^4: coefficient of du^a dv^b = C(3,a) 2^{3-a} C(4,b) 3^{4-b}
    const auto binomial = [](int n, int k) {
        double r = 1.0;
        for (int j = 1; j <= k; ++j) r = r * double(n - j + 1) / double(j);
        return r;
    };
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 4 - a; ++b) {
            if (a + b > 4) continue;
            const double expect =
                binomial(3, a) * std::pow(2.0, 3 - a) * binomial(4, b) * std::pow(3.0, 4 - b);
            CHECK(std::abs(p.coeff_or_zero(a, b) - Scalar{expect}) < 1e-11 * (1.0 + expect));
        }
}

TEST_CASE("jet derivative bookkeeping") {
    const std::array<Scalar, 2> base{Scalar{0.5}, Scalar{-0.25}};
    const Jet U = Jet::coordinate(base, 6, 0);
    const Jet V = Jet::coordinate(base, 6, 1);
    const Jet f = exp(U) * sin(V);
    const Jet fundv = f.derivative(1, 1);
    CHECK(fundv.order() == 4);
    // d^2/dudv exp(u) sin(v) = exp(u) cos(v)
    const Scalar expect = std::exp(base[0]) * std::cos(base[1]);
    CHECK(std::abs(fundv.value() - expect) < 1e-13);
    CHECK_THROWS_AS(Jet::constant(base, 1, 1.0).derivative(2, 0), InsufficientJetOrder);
}

TEST_CASE("maclaurin tables for inverse-trig family") {
    const auto at0_atan = unitab::atan_at(Scalar{0.0});
    // t - t^3/3 + t^5/5 - t^7/7
    CHECK(std::abs(at0_atan[1] - Scalar{1.0}) < 1e-15);
    CHECK(std::abs(at0_atan[3] + Scalar{1.0 / 3.0}) < 1e-15);
    CHECK(std::abs(at0_atan[5] - Scalar{0.2}) < 1e-15);
    CHECK(std::abs(at0_atan[7] + Scalar{1.0 / 7.0}) < 1e-15);
    const auto at0_asinh = unitab::asinh_at(Scalar{0.0});
    // t - t^3/6 + 3 t^5/40 - 15 t^7/336
    CHECK(std::abs(at0_asinh[3] + Scalar{1.0 / 6.0}) < 1e-15);
    CHECK(std::abs(at0_asinh[5] - Scalar{3.0 / 40.0}) < 1e-15);
    CHECK(std::abs(at0_asinh[7] + Scalar{15.0 / 336.0}) < 1e-15);
    const auto at0_atanh = unitab::atanh_at(Scalar{0.0});
    CHECK(std::abs(at0_atanh[3] - Scalar{1.0 / 3.0}) < 1e-15);
    CHECK(std::abs(at0_atanh[5] - Scalar{0.2}) < 1e-15);
}

TEST_CASE("jet transcendentals agree with dual first derivatives") {
    const std::array<Scalar, 2> base{Scalar{0.3, 0.1}, Scalar{-0.2, 0.4}};
    const Jet U = Jet::coordinate(base, 5, 0);
    const Jet V = Jet::coordinate(base, 5, 1);
    const Jet f = tan(U) * atanh(Scalar{0.5} * V) + asinh(U * V);
    // Same function through first-order duals.
    Dual2 ud(base[0], 0), vd(base[1], 1);
    auto fd = tan(ud) * atanh(vd * Dual2(Scalar{0.5})) + asinh(ud * vd);
    CHECK(std::abs(f.value() - fd.v) < 1e-13);
    CHECK(std::abs(f.derivative(1, 0).value() - fd.d[0]) < 1e-12);
    CHECK(std::abs(f.derivative(0, 1).value() - fd.d[1]) < 1e-12);
}

TEST_CASE("elliptic integral of the third kind via quadrature") {
    // Pi(phi, 0, 0) = phi; Pi(phi, 1, 0) = tan(phi).
    const Scalar phi{0.6};
    CHECK(std::abs(ellint_pi(phi, Scalar{0.0}, Scalar{0.0}) - phi) < 1e-12);
    CHECK(std::abs(ellint_pi(phi, Scalar{1.0}, Scalar{0.0}) - std::tan(phi.real())) < 1e-11);
#ifdef SUPINT_HAVE_GSL
    // Independent oracle: GSL uses the opposite sign convention for the
    // characteristic.
    for (double n : {-0.8, -0.3, 0.2, 0.5}) {
        for (double k : {0.1, 0.5, 0.9}) {
            const double mine = ellint_pi(Scalar{0.9}, Scalar{n}, Scalar{k}).real();
            const double ref = gsl_sf_ellint_P(0.9, k, -n, GSL_PREC_DOUBLE);
            CHECK(std::abs(mine - ref) < 1e-10 * (1.0 + std::abs(ref)));
        }
    }
#endif
}

} // TEST_SUITE
