#include <doctest.h>

#include "supint/expr.hpp"
#include "supint/rng.hpp"

using namespace supint;

TEST_SUITE("expr") {

TEST_CASE("serialization round-trips byte-identically") {
    const E u = var(0), v = var(1);
    const E samples[] = {
        sq(u) * (sq(var(2)) + sq(var(3))) / (sq(u) + 1.0),
        exp(2.0 * v) * cos(2.0 * u) - param("a") * powi(u, -3),
        cnum(0.0, 1.0) * sinh(u / 2.0) + sqrt(sq(v) + 1.0),
        ellpi(atan(u), param("n1"), param("k")),
        symprod(param("b1"), atanh(v)) - tan(u) * asinh(v) + log(u) * tanh(v) * sin(u),
    };
    for (const E& e : samples) {
        const std::string text = expr_to_text(e.p);
        const ExprPtr back = expr_from_text(text);
        CHECK(expr_to_text(back) == text);
    }
}

TEST_CASE("evaluation matches hand values") {
    const E u = var(0), v = var(1);
    const ExprPtr e = (sq(u) * v - 3.0 / u + param("a") * sin(v)).p;
    ParamMap params{{"a", Scalar{2.0}}};
    const std::array<Scalar, 2> vars{Scalar{2.0}, Scalar{0.5}};
    const Scalar got = eval_expr<Scalar>(*e, std::span<const Scalar>(vars), params);
    const Scalar expect = 4.0 * 0.5 - 1.5 + 2.0 * std::sin(0.5);
    CHECK(std::abs(got - expect) < 1e-15);
}

TEST_CASE("missing parameter raises") {
    const ExprPtr e = (param("zeta") + 1.0).p;
    const std::array<Scalar, 1> vars{Scalar{0.0}};
    ParamMap empty;
    CHECK_THROWS_AS(eval_expr<Scalar>(*e, std::span<const Scalar>(vars), empty), MissingParam);
}

TEST_CASE("negative integer powers") {
    const ExprPtr e = powi(var(0), -3).p;
    const std::array<Scalar, 1> vars{Scalar{2.0}};
    ParamMap empty;
    CHECK(std::abs(eval_expr<Scalar>(*e, std::span<const Scalar>(vars), empty) - Scalar{0.125}) <
          1e-15);
}

TEST_CASE("anticommutator product evaluates as twice the plain product over scalars") {
    // symprod(A, B) denotes AB + BA; over commuting carriers that is 2ab.
    const ExprPtr e = symprod(var(0), var(1)).p;
    const std::array<Scalar, 2> vars{Scalar{3.0}, Scalar{5.0}};
    ParamMap empty;
    CHECK(eval_expr<Scalar>(*e, std::span<const Scalar>(vars), empty) == Scalar{30.0});
}

TEST_CASE("substitution rewires variables and parameters") {
    const E u = var(0), v = var(1);
    const ExprPtr e = (sq(u) + param("b") * v).p;
    const ExprPtr subst = expr_substitute(
        e, {{0, (v + 1.0).p}}, {{"b", E(Scalar{2.0}).p}});
    const std::array<Scalar, 2> vars{Scalar{10.0}, Scalar{3.0}};
    ParamMap empty;
    // (v+1)^2 + 2 v with v=3 -> 16 + 6
    CHECK(std::abs(eval_expr<Scalar>(*subst, std::span<const Scalar>(vars), empty) -
                   Scalar{22.0}) < 1e-15);
    CHECK(expr_uses_param(e, "b"));
    CHECK(!expr_uses_param(subst, "b"));
}

TEST_CASE("additive term collection") {
    const E u = var(0), v = var(1);
    const ExprPtr e = (sq(u) - 4.0 * u * v + 4.0 * v - (u - v)).p;
    std::vector<std::pair<double, ExprPtr>> terms;
    collect_terms(e, 1.0, terms);
    CHECK(terms.size() == 5);
    double signsum = 0.0;
    for (const auto& [s, t] : terms) signsum += s;
    CHECK(signsum == doctest::Approx(1.0)); // +1 -1 +1 -1 +1
}

TEST_CASE("jacobi elliptic nodes: identities, inversion, derivative rule") {
    const double k = 0.65;
    const double kp = std::sqrt(1.0 - k * k);
    double s, c, d;
    jacobi_sncndn_real(0.8, k, s, c, d);
    CHECK(s * s + c * c == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d * d + k * k * s * s == doctest::Approx(1.0).epsilon(1e-13));
    const double K = std::comp_ellint_1(k);
    jacobi_sncndn_real(K, k, s, c, d);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(c) < 1e-10);
    CHECK(d == doctest::Approx(kp).epsilon(1e-12));
    // Quasi-periodicity: sn(u + 2K) = -sn(u), dn(u + 2K) = dn(u).
    double s2, c2, d2;
    jacobi_sncndn_real(0.8 + 2.0 * K, k, s2, c2, d2);
    jacobi_sncndn_real(0.8, k, s, c, d);
    CHECK(s2 == doctest::Approx(-s).epsilon(1e-12));
    CHECK(d2 == doctest::Approx(d).epsilon(1e-12));

    // Complex argument: the principal inverse undoes sn near the origin.
    const Scalar z{0.35, 0.2};
    const Scalar w = jacobi_sn(z, k);
    CHECK(std::abs(jacobi_asn(w, k) - z) < 1e-10);

    // Pythagorean identities hold at complex arguments too.
    Scalar zs, zc, zd;
    jacobi_sncndn(z, k, zs, zc, zd);
    CHECK(std::abs(zs * zs + zc * zc - 1.0) < 1e-12);
    CHECK(std::abs(zd * zd + k * k * zs * zs - 1.0) < 1e-12);

    // Node evaluation + first-derivative rule against central differences.
    ParamMap params{{"k", Scalar{k}}};
    const ExprPtr esn = sn(var(0), param("k")).p;
    const ExprPtr easn = asn(var(0), param("k")).p;
    const std::array<Dual2, 1> dz{Dual2(z, 0)};
    const Dual2 dsn = eval_expr<Dual2>(*esn, std::span<const Dual2>(dz), params);
    const double h = 1e-6;
    const Scalar fd_sn =
        (jacobi_sn(z + h, k) - jacobi_sn(z - h, k)) / (2.0 * h);
    CHECK(std::abs(dsn.v - jacobi_sn(z, k)) < 1e-14);
    CHECK(std::abs(dsn.d[0] - fd_sn) < 1e-8);
    const std::array<Dual2, 1> dw{Dual2(w, 0)};
    const Dual2 dasn = eval_expr<Dual2>(*easn, std::span<const Dual2>(dw), params);
    const Scalar fd_asn =
        (jacobi_asn(w + h, k) - jacobi_asn(w - h, k)) / (2.0 * h);
    CHECK(std::abs(dasn.d[0] - fd_asn) < 1e-8);
    // Inverse-function derivative product rule: sn'(z) * asn'(w) = 1.
    CHECK(std::abs(dsn.d[0] * dasn.d[0] - 1.0) < 1e-9);

    // Serialization round-trip for the two new node kinds.
    const std::string text = expr_to_text((sn(var(0), 0.5) + asn(var(1), param("k"))).p);
    CHECK(expr_to_text(expr_from_text(text)) == text);

    // Jets are rejected (value/first-derivative carriers only).
    const std::array<Jet, 1> jz{Jet::coordinate({z, Scalar{0.0}}, 3, 0)};
    CHECK_THROWS_AS(eval_expr<Jet>(*esn, std::span<const Jet>(jz), params), Error);
}

TEST_CASE("evaluation over jets matches scalar evaluation at the base") {
    const E u = var(0), v = var(1);
    const ExprPtr e = (exp(u) * cos(v) + param("a") / (sq(u) + 1.0)).p;
    ParamMap params{{"a", Scalar{0.7, -0.2}}};
    const std::array<Scalar, 2> base{Scalar{0.4, 0.1}, Scalar{-0.3}};
    const std::array<Jet, 2> jets{Jet::coordinate(base, 4, 0), Jet::coordinate(base, 4, 1)};
    const Jet je = eval_expr<Jet>(*e, std::span<const Jet>(jets), params);
    const std::array<Scalar, 2> flat{base[0], base[1]};
    const Scalar sv = eval_expr<Scalar>(*e, std::span<const Scalar>(flat), params);
    CHECK(std::abs(je.value() - sv) < 1e-14);
    // First jet coefficient equals the u-derivative computed by duals.
    std::array<Dual2, 2> duals{Dual2(base[0], 0), Dual2(base[1], 1)};
    const Dual2 de = eval_expr<Dual2>(*e, std::span<const Dual2>(duals), params);
    CHECK(std::abs(je.coeff_or_zero(1, 0) - de.d[0]) < 1e-13);
    CHECK(std::abs(je.coeff_or_zero(0, 1) - de.d[1]) < 1e-13);
}

} // TEST_SUITE
