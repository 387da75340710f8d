#include "supint/phase.hpp"

namespace supint {

bool admissible(const std::vector<ExprPtr>& guards, const ParamMap& params, const PhasePoint& x) {
    const std::array<Scalar, 4> v = flatten(x);
    for (const auto& g : guards) {
        const Scalar gv = eval_expr<Scalar>(*g, std::span<const Scalar>(v), params);
        if (!finite(gv) || std::abs(gv) <= kDeltaAdm) return false;
    }
    return true;
}

void require_chart(const PhaseFunction& f, const PhasePoint& x) {
    if (!f.chart_id.empty() && !x.chart_id.empty() && f.chart_id != x.chart_id)
        throw ChartMismatch("function in chart '" + f.chart_id + "' evaluated at point in chart '" +
                            x.chart_id + "'");
}

void require_admissible(const PhaseFunction& f, const PhasePoint& x) {
    require_chart(f, x);
    if (!admissible(f, x))
        throw InadmissiblePoint("point fails the singularity-exclusion predicate");
}

Scalar eval(const PhaseFunction& f, const PhasePoint& x) {
    require_admissible(f, x);
    const std::array<Scalar, 4> v = flatten(x);
    return eval_expr<Scalar>(*f.expr, std::span<const Scalar>(v), f.params);
}

Gradient gradient(const PhaseFunction& f, const PhasePoint& x) {
    require_admissible(f, x);
    const std::array<Scalar, 4> flat = flatten(x);
    std::array<Dual4, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = Dual4(flat[i], i);
    const Dual4 r = eval_expr<Dual4>(*f.expr, std::span<const Dual4>(v), f.params);
    Gradient g;
    g.dq = {r.d[0], r.d[1]};
    g.dp = {r.d[2], r.d[3]};
    return g;
}

Scalar poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& x) {
    if (!f.chart_id.empty() && !g.chart_id.empty() && f.chart_id != g.chart_id)
        throw ChartMismatch("bracket of functions in charts '" + f.chart_id + "' and '" +
                            g.chart_id + "'");
    const Gradient gf = gradient(f, x);
    const Gradient gg = gradient(g, x);
    Scalar r{};
    for (int i = 0; i < 2; ++i) r += gf.dp[i] * gg.dq[i] - gf.dq[i] * gg.dp[i];
    return r;
}

Dual4 poisson_bracket_dual(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& x) {
    if (!f.chart_id.empty() && !g.chart_id.empty() && f.chart_id != g.chart_id)
        throw ChartMismatch("bracket of functions in different charts");
    require_admissible(f, x);
    require_admissible(g, x);
    const std::array<Scalar, 4> flat = flatten(x);
    std::array<Dual44, 4> v;
    for (int i = 0; i < 4; ++i) {
        v[i].v = Dual4(flat[i], i);
        v[i].d[i] = Dual4(Scalar{1.0});
    }
    const Dual44 fe = eval_expr<Dual44>(*f.expr, std::span<const Dual44>(v), f.params);
    const Dual44 ge = eval_expr<Dual44>(*g.expr, std::span<const Dual44>(v), g.params);
    Dual4 r;
    for (int i = 0; i < 2; ++i)
        r = r + (fe.d[2 + i] * ge.d[i] - fe.d[i] * ge.d[2 + i]);
    return r;
}

Scalar poisson_bracket(const Dual4& fd, const Gradient& g) {
    Scalar r{};
    for (int i = 0; i < 2; ++i) r += fd.d[2 + i] * g.dq[i] - fd.d[i] * g.dp[i];
    return r;
}

} // namespace supint
