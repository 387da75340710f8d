#pragma once

#include <vector>

#include "supint/phase.hpp"
#include "supint/rng.hpp"

namespace supint::testing {

/// Random multivariate polynomial in (q1,q2,p1,p2): a handful of monomials
/// with unit-box complex coefficients.
inline PhaseFunction random_poly_phase_function(Rng& rng, int max_degree = 3, int n_terms = 5) {
    E acc = E(0.0);
    for (int t = 0; t < n_terms; ++t) {
        E term = E(rng.box(-1.0, 1.0));
        for (int v = 0; v < 4; ++v) {
            const int deg = int(rng.uniform01() * (max_degree + 1));
            if (deg > 0) term = term * powi(var(v), deg);
        }
        acc = acc + term;
    }
    PhaseFunction f;
    f.chart_id = "uv";
    f.arity = Arity::General;
    f.expr = acc.p;
    return f;
}

inline PhasePoint random_phase_point(Rng& rng, const char* chart = "uv", double lo = -1.5,
                                     double hi = 1.5) {
    PhasePoint x;
    x.chart_id = chart;
    x.q = {rng.box(lo, hi), rng.box(lo, hi)};
    x.p = {rng.box(lo, hi), rng.box(lo, hi)};
    return x;
}

/// Central finite differences of a PhaseFunction, for gradient oracles.
inline Gradient fd_gradient(const PhaseFunction& f, const PhasePoint& x, double h = 1e-6) {
    Gradient g;
    for (int i = 0; i < 2; ++i) {
        PhasePoint a = x, b = x;
        a.q[i] += h;
        b.q[i] -= h;
        g.dq[i] = (eval(f, a) - eval(f, b)) / (2.0 * h);
        PhasePoint c = x, d = x;
        c.p[i] += h;
        d.p[i] -= h;
        g.dp[i] = (eval(f, c) - eval(f, d)) / (2.0 * h);
    }
    return g;
}

} // namespace supint::testing
