#include "supint/systems.hpp"

#include <algorithm>
#include <cmath>

#include "supint/errors.hpp"

namespace supint {

const PhaseFunction& SystemInstance::constant(const std::string& name) const {
    for (const auto& [n, f] : constants)
        if (n == name) return f;
    throw UnknownConstant(rec->id + " has no constant named " + name);
}

bool SystemInstance::has_constant(const std::string& name) const {
    for (const auto& [n, f] : constants)
        if (n == name) return true;
    return false;
}

SystemInstance instantiate(const Catalog& cat, const std::string& id, const ParamMap& params) {
    const SystemRecord& rec = cat.system(id);
    ParamMap full = params;
    for (const auto& [name, v] : rec.default_params)
        if (!full.count(name)) full[name] = v;
    for (const auto& name : rec.required_params)
        if (!full.count(name))
            throw MissingParam(id + " requires parameter " + name);
    for (const auto& [name, bad] : rec.degenerate_params) {
        auto it = full.find(name);
        if (it != full.end() && std::abs(it->second - bad) < 1e-9)
            throw DegenerateParam(id + ": parameter " + name + " at a degenerate value");
    }
    SystemInstance s;
    s.rec = &rec;
    s.params = full;
    s.H = PhaseFunction{rec.chart_id, Arity::General, rec.hamiltonian, s.params, rec.guards};
    for (const auto& c : rec.constants) {
        Arity a = c.order == 1 ? Arity::FirstOrder
                               : (c.order == 2 ? Arity::Quadratic : Arity::General);
        const ExprPtr& expr = c.corrected ? c.corrected->expr : c.expr;
        s.constants.emplace_back(c.name,
                                 PhaseFunction{rec.chart_id, a, expr, s.params, rec.guards});
    }
    return s;
}

SystemInstance instantiate(const std::string& id, const ParamMap& params) {
    return instantiate(shared_catalog(), id, params);
}

Scalar constant_surface(const SystemInstance& s, const std::string& name, const PhasePoint& x) {
    return eval(s.constant(name), x);
}

std::vector<CatalogEntrySummary> list_catalog(const Catalog& cat) {
    std::vector<CatalogEntrySummary> out;
    for (const auto& rec : cat.systems) {
        CatalogEntrySummary e;
        e.id = rec.id;
        e.space = rec.space;
        e.required_params = rec.required_params;
        e.metric_only = rec.metric_only;
        e.charts.push_back(rec.chart_id);
        for (const auto& st : cat.stackel)
            if (st.system_id == rec.id &&
                std::find(e.charts.begin(), e.charts.end(), st.chart_id) == e.charts.end())
                e.charts.push_back(st.chart_id);
        for (const auto& r : rec.relations) e.relations.push_back(r.id);
        for (const auto& i : rec.identities) e.identities.push_back(i.id);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntrySummary> list_catalog() { return list_catalog(shared_catalog()); }

PhasePoint sample_point(Rng& rng, const std::string& chart_id, const SampleBox& box,
                        const std::vector<ExprPtr>& guards, const ParamMap& params,
                        int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        PhasePoint x;
        x.chart_id = chart_id;
        for (int i = 0; i < 2; ++i) {
            const double* r = &box.b[size_t(4 * i)];
            x.q[size_t(i)] = Scalar{rng.uniform(r[0], r[1]), rng.uniform(r[2], r[3])};
            x.p[size_t(i)] = Scalar{rng.uniform(-kMomentumRe, kMomentumRe),
                                    rng.uniform(-kMomentumIm, kMomentumIm)};
        }
        if (admissible(guards, params, x)) return x;
    }
    throw InadmissiblePoint("no admissible point found in sampling box for " + chart_id);
}

PhasePoint sample_admissible(const SystemInstance& s, Rng& rng) {
    return sample_point(rng, s.rec->chart_id, s.rec->box, s.rec->guards, s.params);
}

ParamMap sample_params(const SystemRecord& rec, Rng& rng) {
    ParamMap out;
    for (const auto& name : rec.required_params) {
        for (int t = 0; t < 100; ++t) {
            Scalar v{rng.uniform(0.4, 1.2), rng.uniform(-0.35, 0.35)};
            bool ok = true;
            for (const auto& [dn, bad] : rec.degenerate_params)
                if (dn == name && std::abs(v - bad) < 0.15) ok = false;
            if (ok) {
                out[name] = v;
                break;
            }
        }
        if (!out.count(name)) throw DegenerateParam("cannot sample parameter " + name);
    }
    return out;
}

ParamMap default_params(const SystemRecord& rec) {
    ParamMap out;
    for (const auto& [name, v] : rec.default_params) out[name] = v;
    for (const auto& name : rec.required_params)
        if (!out.count(name)) out[name] = Scalar{1.0, 0.0};
    return out;
}

QuadraticCoefficients momentum_coefficients(const PhaseFunction& f,
                                            const std::array<Scalar, 2>& q) {
    // Seed only the momenta; nested duals give exact second derivatives.
    std::array<Dual44, 4> vars;
    for (int i = 0; i < 2; ++i) {
        vars[size_t(i)] = Dual44{Dual4{q[size_t(i)]}};
        Dual44 m{Dual4{Scalar{0.0}, i}}; // p_i = 0, seeded in slot i
        m.d[size_t(i)] = Dual4{Scalar{1.0}};
        vars[size_t(2 + i)] = m;
    }
    std::array<Dual44, 4> span = vars;
    Dual44 r = eval_expr(*f.expr, std::span<const Dual44>(span), f.params);
    QuadraticCoefficients out;
    out.lambda = r.v.v;
    out.a1 = {r.d[0].v, r.d[1].v};
    out.a11 = 0.5 * r.d[0].d[0];
    out.a22 = 0.5 * r.d[1].d[1];
    out.a12 = 0.5 * r.d[0].d[1];
    if (std::abs(r.d[0].d[1] - r.d[1].d[0]) > 1e-14 * std::max(1.0, std::abs(r.d[0].d[1])))
        throw Error("asymmetric mixed momentum derivatives");
    return out;
}

SphereModelPoint sphere_model_point(const PhasePoint& x) {
    if (x.chart_id != "S2C.zw") throw ChartMismatch("sphere model expects chart S2C.zw");
    const Scalar z = x.q[0], w = x.q[1], pz = x.p[0], pw = x.p[1];
    const Scalar i{0.0, 1.0};
    const Scalar den = 1.0 + z * w;
    if (std::abs(den) < kDeltaAdm) throw InadmissiblePoint("sphere model: 1 + zw ~ 0");
    SphereModelPoint out;
    out.s = {(z + w) / den, -i * (z - w) / den, (1.0 - z * w) / den};
    out.J = {(i / 2.0) * ((z * z - 1.0) * pz + (1.0 - w * w) * pw),
             0.5 * ((1.0 + z * z) * pz + (1.0 + w * w) * pw),
             i * (z * pz - w * pw)};
    return out;
}

} // namespace supint
