#pragma once

#include <array>
#include <string>
#include <vector>

#include "supint/expr.hpp"

namespace supint {

/// Magnitude below which a chart/system guard expression marks a point as
/// inadmissible (too close to a singular locus or branch cut).
constexpr double kDeltaAdm = 1e-3;

struct PhasePoint {
    std::string chart_id;
    std::array<Scalar, 2> q{};
    std::array<Scalar, 2> p{};
};

enum class Arity { FirstOrder, Quadratic, General };

/// A scalar function on phase space: an expression over slots
/// (0,1,2,3) = (q1,q2,p1,p2) with bound numeric parameters, plus the
/// guard expressions whose magnitudes define admissibility.
struct PhaseFunction {
    std::string chart_id;
    Arity arity = Arity::General;
    ExprPtr expr;
    ParamMap params;
    std::vector<ExprPtr> guards;
};

struct Gradient {
    std::array<Scalar, 2> dq{};
    std::array<Scalar, 2> dp{};
};

inline std::array<Scalar, 4> flatten(const PhasePoint& x) {
    return {x.q[0], x.q[1], x.p[0], x.p[1]};
}

/// True iff every guard magnitude exceeds kDeltaAdm at x.
bool admissible(const std::vector<ExprPtr>& guards, const ParamMap& params, const PhasePoint& x);

inline bool admissible(const PhaseFunction& f, const PhasePoint& x) {
    return admissible(f.guards, f.params, x);
}

void require_chart(const PhaseFunction& f, const PhasePoint& x);
void require_admissible(const PhaseFunction& f, const PhasePoint& x);

Scalar eval(const PhaseFunction& f, const PhasePoint& x);
Gradient gradient(const PhaseFunction& f, const PhasePoint& x);

/// {f,g} = sum_i df/dp_i dg/dq_i - df/dq_i dg/dp_i.
Scalar poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& x);

/// Value and phase-gradient of {f,g} at x (second derivatives of f and g
/// via nested duals); used for brackets of brackets.
Dual4 poisson_bracket_dual(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& x);

/// Bracket of a precomputed (value, gradient) pair with a PhaseFunction.
Scalar poisson_bracket(const Dual4& fd, const Gradient& g);

} // namespace supint
