#include "catalog_build.hpp"

namespace supint::build {

namespace {

const Scalar kI{0.0, 1.0};

E acosh_e(E z) { return log(z + sqrt(z * z - 1.0)); }

// Base coordinates and momenta of the (u,v) chart.
E U() { return Q1(); }
E V() { return Q2(); }
E Pu() { return P1(); }
E Pv() { return P2(); }

// Free-particle building blocks on D3, defining chart (u,v):
//   H0 = e^{2u} (pu^2 + pv^2) / (4 (e^u + 1))
E d3_h0() {
    return 0.25 * exp(2.0 * U()) * (sq(Pu()) + sq(Pv())) / (exp(U()) + 1.0);
}

E d3_x1() {
    E u = U(), v = V();
    E den = exp(u) + 1.0;
    return 0.25 * exp(2.0 * u) * cos(v) * sq(Pu()) / den -
           0.25 * exp(u) * (exp(u) + 2.0) * cos(v) * sq(Pv()) / den +
           0.5 * exp(u) * sin(v) * Pu() * Pv();
}

E d3_x2() {
    E u = U(), v = V();
    E den = exp(u) + 1.0;
    return 0.25 * exp(2.0 * u) * sin(v) * sq(Pu()) / den -
           0.25 * exp(u) * (exp(u) + 2.0) * sin(v) * sq(Pv()) / den -
           0.5 * exp(u) * cos(v) * Pu() * Pv();
}

// Cartesian-like coordinates on the base chart:
//   xi = 2 e^{-u/2} cos(v/2),  eta = 2 e^{-u/2} sin(v/2),
// so that 4 + xi^2 + eta^2 = 4 (1 + e^{-u}).
E xi_s() { return 2.0 * exp(-0.5 * U()) * cos(0.5 * V()); }
E eta_s() { return 2.0 * exp(-0.5 * U()) * sin(0.5 * V()); }

// Two-root coordinates mu > nu with mu - nu = 2 e^{-u}, mu nu = e^{-u+iv}:
//   w = (mu + nu)/2 = sqrt(e^{-2u} + e^{-u+iv}).
E w_s() { return sqrt(exp(-2.0 * U()) + exp(-U() + kI * V())); }
E mu_s() { return exp(-U()) + w_s(); }
E nu_s() { return w_s() - exp(-U()); }

std::vector<ExprPtr> d3_guards() { return guard_list({exp(U()) + 1.0}); }

SampleBox d3_box() { return box(0.3, 1.2, -0.25, 0.25, -1.0, 1.0, -0.25, 0.25); }

std::vector<OperatorRecord> d3_free_operators() {
    E u = U(), v = V();
    E den = exp(u) + 1.0;
    OperatorRecord H{"H",
                     {term(0.25 * exp(2.0 * u) / den, 2, 0),
                      term(0.25 * exp(2.0 * u) / den, 0, 2)}};
    OperatorRecord K{"K", {term(1.0, 0, 1)}};
    OperatorRecord X1{"X1",
                      {term(0.25 * exp(2.0 * u) * cos(v) / den, 2, 0),
                       term(-0.25 * exp(u) * (exp(u) + 2.0) * cos(v) / den, 0, 2),
                       term(0.5 * exp(u) * sin(v), 1, 1),
                       term(0.25 * exp(u) * cos(v), 1, 0),
                       term(0.25 * exp(u) * sin(v), 0, 1)}};
    OperatorRecord X2{"X2",
                      {term(0.25 * exp(2.0 * u) * sin(v) / den, 2, 0),
                       term(-0.25 * exp(u) * (exp(u) + 2.0) * sin(v) / den, 0, 2),
                       term(-0.5 * exp(u) * cos(v), 1, 1),
                       term(0.25 * exp(u) * sin(v), 1, 0),
                       term(-0.25 * exp(u) * cos(v), 0, 1)}};
    return {H, K, X1, X2};
}

// Appends a multiplication term to a differential-operator record.
OperatorRecord plus_scalar(OperatorRecord base, const std::string& name, E add) {
    base.name = name;
    base.terms.push_back(term(add, 0, 0));
    return base;
}

// Linear combination fa*A + fb*B of two operator records, term by term.
OperatorRecord combine_ops(std::string name, const OperatorRecord& a, Scalar fa,
                           const OperatorRecord& b, Scalar fb) {
    OperatorRecord out{std::move(name), {}};
    for (const OperatorTerm& t : a.terms)
        out.terms.push_back(term(E(fa) * E(t.coeff), t.du, t.dv));
    for (const OperatorTerm& t : b.terms)
        out.terms.push_back(term(E(fb) * E(t.coeff), t.du, t.dv));
    return out;
}

void add_free(Catalog& c) {
    SystemRecord s;
    s.id = "D3.free";
    s.space = "D3";
    s.chart_id = "D3.uv";
    s.hamiltonian = d3_h0().p;
    s.guards = d3_guards();
    s.box = d3_box();
    s.real_flow = true;
    s.real_box = realbox(0.3, 1.3, -1.2, 1.2, -1.2, 1.2);
    s.constants.push_back({"K", 1, Pv().p});
    s.constants.push_back({"X1", 2, d3_x1().p});
    s.constants.push_back({"X2", 2, d3_x2().p});
    s.generators = {"H", "K", "X1", "X2"};
    Gens g{s.generators};
    E H = g("H"), K = g("K"), X1 = g("X1"), X2 = g("X2");
    s.relations.push_back(rel("pb.K.X1", "K", "X1", -X2));
    s.relations.push_back(rel("pb.K.X2", "K", "X2", X1));
    s.relations.push_back(rel("pb.X1.X2", "X1", "X2", K * H));
    s.identities.push_back(
        ident("dependence", sq(X1) + sq(X2) - sq(H) - H * sq(K)));
    s.operators = d3_free_operators();
    s.op_relations.push_back(oprel("q.K.X1", "K", "X1", -X2));
    s.op_relations.push_back(oprel("q.K.X2", "K", "X2", X1));
    s.op_relations.push_back(oprel("q.X1.X2", "X1", "X2", K * H));
    s.op_identities.push_back(
        opident("q.dependence", powi(X1, 2) + powi(X2, 2) - powi(H, 2) -
                                    H * powi(K, 2) + 0.25 * H));
    c.systems.push_back(std::move(s));
}

void add_embedding(Catalog& c) {
    E u = U(), v = V();
    E F = sqrt(exp(-u) + exp(-2.0 * u));
    E ymt = F; // Y - T
    E ypt = (1.0 - sq(v)) * F + log(1.0 + 2.0 * exp(-u) + 2.0 * F) +
            0.5 * atan(2.0 * F); // Y + T
    EmbeddingRecord em;
    em.id = "D3.embedding";
    em.space = "D3";
    em.variant = "printed";
    em.X = (v * F).p;
    em.Y = (0.5 * (ypt + ymt)).p;
    em.T = (0.5 * (ypt - ymt)).p;
    em.conformal = (exp(-u) + exp(-2.0 * u)).p;
    em.guards = guard_list({exp(-u) + exp(-2.0 * u)});
    em.box = box(0.4, 1.2, -0.2, 0.2, -1.0, 1.0, -0.3, 0.3);
    c.embeddings.push_back(std::move(em));
}

void add_charts(Catalog& c) {
    // Identity chart on the base coordinates.
    {
        ChartRecord ch;
        ch.id = "D3.uv";
        ch.space = "D3";
        ch.coord_names = {"u", "v"};
        ch.to_base_u = Q1().p;
        ch.to_base_v = Q2().p;
        ch.from_base_q1 = Q1().p;
        ch.from_base_q2 = Q2().p;
        ch.guards_chart = d3_guards();
        ch.guards_base = d3_guards();
        ch.box = d3_box();
        c.charts.push_back(std::move(ch));
    }
    // Cartesian-like coordinates: xi = 2 e^{-u/2} cos(v/2), eta = 2 e^{-u/2} sin(v/2);
    // inverse through xi + i eta = 2 e^{(-u+iv)/2}.
    {
        ChartRecord ch;
        ch.id = "D3.xieta";
        ch.space = "D3";
        ch.coord_names = {"xi", "eta"};
        E xi = Q1(), eta = Q2();
        E A = log(0.5 * (xi + kI * eta)), B = log(0.5 * (xi - kI * eta));
        ch.to_base_u = (-(A + B)).p;
        ch.to_base_v = (-kI * (A - B)).p;
        ch.from_base_q1 = xi_s().p;
        ch.from_base_q2 = eta_s().p;
        ch.guards_chart = guard_list({xi + kI * eta, xi - kI * eta});
        ch.guards_base = d3_guards();
        ch.box = box(0.8, 1.6, -0.2, 0.2, 0.3, 0.9, -0.2, 0.2);
        c.charts.push_back(std::move(ch));
    }
    // Elliptic coordinates: xi = b cosh(omega) cos(phi), eta = b sinh(omega) sin(phi),
    // so xi + i eta = b cosh(omega + i phi).
    {
        ChartRecord ch;
        ch.id = "D3.elliptic";
        ch.space = "D3";
        ch.coord_names = {"omega", "phi"};
        ch.required_params = {"b"};
        E w = Q1(), f = Q2(), b = param("b");
        E cp = cosh(w + kI * f), cm = cosh(w - kI * f);
        ch.to_base_u = (-log(0.25 * sq(b) * cp * cm)).p;
        ch.to_base_v = (-kI * log(cp / cm)).p;
        E zp = 2.0 * exp(0.5 * (-U() + kI * V())) / b;
        E zm = 2.0 * exp(0.5 * (-U() - kI * V())) / b;
        E A = acosh_e(zp), B = acosh_e(zm);
        ch.from_base_q1 = (0.5 * (A + B)).p;
        ch.from_base_q2 = ((A - B) / (2.0 * E(kI))).p;
        ch.guards_chart = guard_list({cp, cm});
        ch.guards_base = guard_list({sq(zp) - 1.0, sq(zm) - 1.0});
        ch.box = box(0.6, 1.1, -0.15, 0.15, 0.25, 0.65, -0.15, 0.15);
        c.charts.push_back(std::move(ch));
    }
    // The elliptic chart at the fixed modulus b = 2i, where the coordinate
    // surfaces degenerate into the two-root net used by the fourth potential
    // family; b^2/4 = -1 is folded into the transition maps.
    {
        ChartRecord ch;
        ch.id = "D3.elliptic2i";
        ch.space = "D3";
        ch.coord_names = {"omega", "phi"};
        E w = Q1(), f = Q2();
        E cp = cosh(w + kI * f), cm = cosh(w - kI * f);
        ch.to_base_u = (-log(-cp * cm)).p;
        ch.to_base_v = (-kI * log(cp / cm)).p;
        E zp = -kI * exp(0.5 * (-U() + kI * V()));
        E zm = -kI * exp(0.5 * (-U() - kI * V()));
        E A = acosh_e(zp), B = acosh_e(zm);
        ch.from_base_q1 = (0.5 * (A + B)).p;
        ch.from_base_q2 = ((A - B) / (2.0 * E(kI))).p;
        ch.guards_chart = guard_list({cp, cm});
        ch.guards_base = guard_list({sq(zp) - 1.0, sq(zm) - 1.0});
        ch.box = box(0.6, 1.1, -0.15, 0.15, 0.25, 0.65, -0.15, 0.15);
        c.charts.push_back(std::move(ch));
    }
    // Null-like coordinates x = xi + i eta, y = (xi - i eta)^2 / 2, i.e.
    // x = 2 e^{(-u+iv)/2}, y = 2 e^{-u-iv}.
    {
        ChartRecord ch;
        ch.id = "D3.xy";
        ch.space = "D3";
        ch.coord_names = {"x", "y"};
        E x = Q1(), y = Q2();
        ch.to_base_u = (-0.5 * log(sq(x) * y / 8.0)).p;
        ch.to_base_v = (-0.5 * E(kI) * log(sq(x) / (2.0 * y))).p;
        ch.from_base_q1 = (2.0 * exp(0.5 * (-U() + kI * V()))).p;
        ch.from_base_q2 = (2.0 * exp(-U() - kI * V())).p;
        ch.guards_chart = guard_list({x, y});
        ch.guards_base = {};
        ch.box = box(1.0, 1.6, -0.3, 0.3, 0.6, 1.3, -0.3, 0.3);
        c.charts.push_back(std::move(ch));
    }
    // Two-root coordinates mu, nu with mu - nu = 2 e^{-u} and mu nu = e^{-u+iv}.
    {
        ChartRecord ch;
        ch.id = "D3.munu";
        ch.space = "D3";
        ch.coord_names = {"mu", "nu"};
        E mu = Q1(), nu = Q2();
        ch.to_base_u = log(2.0 / (mu - nu)).p;
        ch.to_base_v = (-kI * log(2.0 * mu * nu / (mu - nu))).p;
        ch.from_base_q1 = mu_s().p;
        ch.from_base_q2 = nu_s().p;
        ch.guards_chart =
            guard_list({mu - nu, mu * nu, mu + nu, 2.0 + mu - nu});
        ch.guards_base = guard_list({exp(-2.0 * U()) + exp(-U() + kI * V())});
        ch.box = box(1.2, 2.0, -0.2, 0.2, 0.3, 0.8, -0.2, 0.2);
        c.charts.push_back(std::move(ch));
    }
}

void add_free_displays(Catalog& c) {
    Gens g{{"H", "K", "X1", "X2"}};
    // Aliases for single-variable Stackel factors (slot 0 holds the
    // chart coordinate the factor depends on).
    E q = Q1();
    // Separation on the base chart: H0 = (pu^2 + pv^2)/(4(e^{-u} + e^{-2u})).
    c.stackel.push_back(stackel("st.D3.free.uv", "D3.free", "D3.uv", 1.0, 1.0, 0.0,
                                0.0, 4.0 * (exp(-q) + exp(-2.0 * q)), 0.0));
    // Cartesian-like chart: H0 = (pxi^2 + peta^2)/(4 + xi^2 + eta^2) and the
    // printed display of X1.
    {
        c.stackel.push_back(stackel("st.D3.free.xieta", "D3.free", "D3.xieta", 1.0,
                                    1.0, 0.0, 0.0, 2.0 + sq(q), 2.0 + sq(q)));
        E xi = Q1(), eta = Q2(), pxi = P1(), peta = P2();
        ChartConstantRecord cc;
        cc.id = "cc.D3.free.xieta";
        cc.system_id = "D3.free";
        cc.chart_id = "D3.xieta";
        cc.chart_expr = (((2.0 + sq(eta)) * sq(pxi) - (2.0 + sq(xi)) * sq(peta)) /
                         (2.0 * (4.0 + sq(xi) + sq(eta)))).p;
        cc.combo = g("X1").p;
        c.chart_constants.push_back(std::move(cc));
    }
    // Elliptic chart: the separated Hamiltonian and the printed display of
    // b^2 X1 + 2 K^2.
    {
        E b = param("b");
        c.stackel.push_back(stackel(
            "st.D3.free.elliptic", "D3.free", "D3.elliptic", 1.0, 1.0, 0.0, 0.0,
            2.0 * sq(b) * cosh(2.0 * q) + 0.25 * powi(b, 4) * sq(cosh(2.0 * q)),
            -2.0 * sq(b) * cos(2.0 * q) - 0.25 * powi(b, 4) * sq(cos(2.0 * q))));
        E w = Q1(), f = Q2(), pw = P1(), pf = P2();
        E den = 8.0 * sq(b) * (cosh(2.0 * w) - cos(2.0 * f)) +
                powi(b, 4) * (sq(cosh(2.0 * w)) - sq(cos(2.0 * f)));
        ChartConstantRecord cc;
        cc.id = "cc.D3.free.elliptic";
        cc.system_id = "D3.free";
        cc.chart_id = "D3.elliptic";
        cc.chart_expr = (((8.0 * cos(2.0 * f) - sq(b) * sin(2.0 * f)) * sq(pw) +
                          (8.0 * cosh(2.0 * w) + sq(b) * sinh(2.0 * w)) * sq(pf)) /
                         den).p;
        cc.combo = (sq(E(param("b"))) * g("X1") + 2.0 * sq(g("K"))).p;
        c.chart_constants.push_back(std::move(cc));
    }
    // Null-like chart: H0 = 2 px py / (2 y^{-1/2} + x) (not of separated form,
    // held as a display) and the printed display of X1 + i X2.
    {
        E x = Q1(), y = Q2(), px = P1(), py = P2();
        E h0xy = 2.0 * px * py / (2.0 / sqrt(y) + x);
        ChartConstantRecord hh;
        hh.id = "cc.D3.free.xy.h";
        hh.system_id = "D3.free";
        hh.chart_id = "D3.xy";
        hh.chart_expr = h0xy.p;
        hh.combo = g("H").p;
        c.chart_constants.push_back(std::move(hh));
        ChartConstantRecord cc;
        cc.id = "cc.D3.free.xy";
        cc.system_id = "D3.free";
        cc.chart_id = "D3.xy";
        cc.chart_expr = (2.0 * y * h0xy - sq(px)).p;
        cc.combo = (g("X1") + kI * g("X2")).p;
        c.chart_constants.push_back(std::move(cc));
    }
    // Two-root chart: the separated Hamiltonian, its printed display, and the
    // printed display of X1 + i X2 - K^2.
    {
        c.stackel.push_back(stackel("st.D3.free.munu", "D3.free", "D3.munu", sq(q),
                                    -sq(q), 0.0, 0.0, sq(q) + 2.0 * q,
                                    2.0 * q - sq(q)));
        E mu = Q1(), nu = Q2(), pm = P1(), pn = P2();
        E den = (mu + nu) * (2.0 + mu - nu);
        ChartConstantRecord hh;
        hh.id = "cc.D3.free.munu.h";
        hh.system_id = "D3.free";
        hh.chart_id = "D3.munu";
        hh.chart_expr = ((sq(mu) * sq(pm) - sq(nu) * sq(pn)) / den).p;
        hh.combo = g("H").p;
        c.chart_constants.push_back(std::move(hh));
        ChartConstantRecord cc;
        cc.id = "cc.D3.free.munu";
        cc.system_id = "D3.free";
        cc.chart_id = "D3.munu";
        cc.chart_expr = ((sq(nu) * (mu + 2.0) * mu * sq(pn) -
                          sq(mu) * (nu - 2.0) * nu * sq(pm)) /
                         den).p;
        cc.combo = (g("X1") + kI * g("X2") - sq(g("K"))).p;
        c.chart_constants.push_back(std::move(cc));
    }
}

// Potential family [A]: (a1 xi + a2 eta + a3)/(4 + xi^2 + eta^2).
void add_pot_a(Catalog& c) {
    E a1 = param("a1"), a2 = param("a2"), a3 = param("a3");
    E xi = xi_s(), eta = eta_s();
    E den4 = 4.0 + sq(xi) + sq(eta);
    E pot = (a1 * xi + a2 * eta + a3) / den4;
    E s1 = (2.0 * a1 * xi * (2.0 + sq(eta)) - 2.0 * a2 * eta * (2.0 + sq(xi)) +
            a3 * (sq(eta) - sq(xi))) /
           (4.0 * den4);
    E s2 = (a1 * eta * (sq(eta) - sq(xi) + 4.0) +
            a2 * xi * (sq(xi) - sq(eta) + 4.0) - 2.0 * a3 * xi * eta) /
           (4.0 * den4);

    SystemRecord s;
    s.id = "D3.A";
    s.space = "D3";
    s.chart_id = "D3.uv";
    s.required_params = {"a1", "a2", "a3"};
    s.default_params = {{"a1", 1.0}, {"a2", 0.5}, {"a3", 0.75}};
    s.hamiltonian = (d3_h0() + pot).p;
    s.guards = d3_guards();
    s.box = d3_box();
    s.real_flow = true;
    s.real_box = realbox(0.3, 1.3, -1.2, 1.2, -1.2, 1.2);
    s.constants.push_back({"R1", 2, (d3_x1() + s1).p});
    s.constants.push_back({"R2", 2, (d3_x2() + s2).p});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident(
        "rsq",
        sq(R) - (H * sq(R1) + H * sq(R2) + 0.125 * (sq(a2) - sq(a1)) * R1 -
                 0.25 * a1 * a2 * R2 - powi(H, 3) + 0.5 * a3 * sq(H) +
                 (1.0 / 16.0) * (2.0 * sq(a2) + 2.0 * sq(a1) - sq(a3)) * H -
                 (1.0 / 32.0) * a3 * (sq(a1) + sq(a2))),
        true));

    auto ops = d3_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", pot));
    s.operators.push_back(plus_scalar(ops[2], "R1", s1));
    s.operators.push_back(plus_scalar(ops[3], "R2", s2));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1", -(H * R2) + 0.125 * a1 * a2));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2", H * R1 + (1.0 / 16.0) * (sq(a2) - sq(a1))));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) - (H * powi(R1, 2) + H * powi(R2, 2) +
                      0.125 * (sq(a2) - sq(a1)) * R1 - 0.25 * a1 * a2 * R2 -
                      powi(H, 3) + 0.5 * (a3 + 0.5) * powi(H, 2) +
                      (1.0 / 16.0) * (2.0 * sq(a1) + 2.0 * sq(a2) - sq(a3)) * H -
                      (1.0 / 32.0) * a3 * (sq(a1) + sq(a2)))));
    c.systems.push_back(std::move(s));

    E q = Q1();
    c.stackel.push_back(stackel("st.D3.A.xieta", "D3.A", "D3.xieta", 1.0, 1.0,
                                a1 * q, a2 * q + a3, 2.0 + sq(q), 2.0 + sq(q)));
}

// Potential family [B]: (b1/xi^2 + b2/eta^2 + b3)/(4 + xi^2 + eta^2).
void add_pot_b(Catalog& c) {
    E b1 = param("b1"), b2 = param("b2"), b3 = param("b3");
    E xi = xi_s(), eta = eta_s();
    E den4 = 4.0 + sq(xi) + sq(eta);
    E pot = (b1 / sq(xi) + b2 / sq(eta) + b3) / den4;
    E s1 = (2.0 * b1 * sq(eta) * (sq(eta) + 2.0) -
            2.0 * b2 * sq(xi) * (sq(xi) + 2.0) + b3 * (sq(eta) - sq(xi))) /
           (4.0 * den4);
    // Separation of variables fixes the scalar part of R1: the b1/b2 terms
    // need the 1/(xi^2 eta^2) factor that the display drops.
    E s1c = (2.0 * b1 * sq(eta) * (sq(eta) + 2.0) -
             2.0 * b2 * sq(xi) * (sq(xi) + 2.0) +
             b3 * sq(xi) * sq(eta) * (sq(eta) - sq(xi))) /
            (4.0 * sq(xi) * sq(eta) * den4);
    E s2 = b1 * sq(eta) / (4.0 * sq(xi)) + b2 * sq(xi) / (4.0 * sq(eta));

    SystemRecord s;
    s.id = "D3.B";
    s.space = "D3";
    s.chart_id = "D3.uv";
    s.required_params = {"b1", "b2", "b3"};
    s.default_params = {{"b1", 0.9}, {"b2", 0.7}, {"b3", 0.5}};
    s.hamiltonian = (d3_h0() + pot).p;
    s.guards = guard_list({exp(U()) + 1.0, cos(0.5 * V()), sin(0.5 * V())});
    s.box = box(0.3, 1.2, -0.25, 0.25, 0.5, 2.0, -0.25, 0.25);
    s.real_flow = true;
    s.real_box = realbox(0.3, 1.3, 0.5, 2.0, -1.2, 1.2);
    s.constants.push_back(
        {"R1", 2, (d3_x1() + s1).p,
         Correction{(d3_x1() + s1c).p,
                    "scalar part of R1 as displayed is not conserved; the "
                    "b1 and b2 terms require a 1/(xi^2 eta^2) factor fixed "
                    "by separation of variables"}});
    s.constants.push_back({"R2", 2, (sq(Pv()) + s2).p});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident(
        "rsq",
        sq(R) - (-4.0 * sq(R1) * R2 - (b1 + b2) * sq(R1) + 4.0 * H * sq(R2) +
                 2.0 * (b1 - b2) * H * R1 + 0.5 * b3 * (b2 - b1) * R1 +
                 4.0 * sq(H) * R2 - 2.0 * b3 * H * R2 + 0.25 * sq(b3) * R2 -
                 (b1 + b2) * sq(H) + (0.5 * b3 * (b1 + b2) - b1 * b2) * H -
                 (1.0 / 16.0) * sq(b3) * (b1 + b2)),
        true));

    auto ops = d3_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", pot));
    s.operators.push_back(plus_scalar(ops[2], "R1", s1c));
    OperatorRecord k2{"R2", {term(1.0, 0, 2)}};
    s.operators.push_back(plus_scalar(k2, "R2", s2));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1",
              2.0 * powi(R1, 2) - 4.0 * (H * R2) - 2.0 * powi(H, 2) +
                  (b3 + 0.5) * H - 0.125 * sq(b3)));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2",
              -2.0 * symprod(R1, R2) - (b1 + b2 + 1.0) * R1 + (b1 - b2) * H +
                  0.25 * (b2 - b1) * b3));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) -
            (-2.0 * symprod(powi(R1, 2), R2) - (b1 + b2 + 5.0) * powi(R1, 2) +
             4.0 * (H * powi(R2, 2)) + 2.0 * (b1 - b2) * (H * R1) +
             b3 * (b2 - b1) * R1 + 4.0 * (powi(H, 2) * R2) -
             (2.0 * b3 - 1.0) * (H * R2) + 0.25 * sq(b3) * R2 -
             (b1 + b2 - 2.0) * powi(H, 2) +
             (0.5 * (b3 + 1.5) * (b1 + b2) - b3 - b1 * b2 - 0.5) * H -
             (1.0 / 16.0) * sq(b3) * (b1 + b2 - 2.0))));
    c.systems.push_back(std::move(s));

    E q = Q1(), b = param("b");
    c.stackel.push_back(stackel(
        "st.D3.B.uv", "D3.B", "D3.uv", 1.0, 1.0, b3 * exp(-q),
        0.25 * b1 / sq(cos(0.5 * q)) + 0.25 * b2 / sq(sin(0.5 * q)),
        4.0 * (exp(-q) + exp(-2.0 * q)), 0.0));
    c.stackel.push_back(stackel("st.D3.B.xieta", "D3.B", "D3.xieta", 1.0, 1.0,
                                b1 / sq(q), b2 / sq(q) + b3, 2.0 + sq(q),
                                2.0 + sq(q)));
    c.stackel.push_back(stackel(
        "st.D3.B.elliptic", "D3.B", "D3.elliptic", 1.0, 1.0,
        -b1 / sq(cosh(q)) + b2 / sq(sinh(q)) + b3 * sq(b) * sq(cosh(q)),
        b1 / sq(cos(q)) + b2 / sq(sin(q)) - b3 * sq(b) * sq(cos(q)),
        2.0 * sq(b) * cosh(2.0 * q) + 0.25 * powi(b, 4) * sq(cosh(2.0 * q)),
        -2.0 * sq(b) * cos(2.0 * q) - 0.25 * powi(b, 4) * sq(cos(2.0 * q))));
}

// Potential family [C]: (c1 (mu+nu) + c2 (mu+nu)/(mu nu)
//   + c3 (mu^2-nu^2)/(mu^2 nu^2)) / ((mu+nu)(2+mu-nu)).
void add_pot_c(Catalog& c) {
    E c1 = param("c1"), c2 = param("c2"), c3 = param("c3");
    E mu = mu_s(), nu = nu_s();
    E den = (mu + nu) * (2.0 + mu - nu);
    E pot = (c1 * (mu + nu) + c2 * (mu + nu) / (mu * nu) +
             c3 * (sq(mu) - sq(nu)) / (sq(mu) * sq(nu))) /
            den;
    E s1 = -(c1 * sq(mu) * sq(nu) + c2 * mu * nu + 2.0 * c3 * (1.0 + mu - nu)) /
           (mu * nu * (2.0 + mu - nu));
    E s2 = -c2 * (mu - nu) / (mu * nu) - c3 * sq(mu - nu) / (sq(mu) * sq(nu));
    // Conservation against the Hamiltonian (whose two displays agree) forces
    // the opposite sign on both terms of the scalar part of R2.
    E s2c = c2 * (mu - nu) / (mu * nu) + c3 * sq(mu - nu) / (sq(mu) * sq(nu));

    SystemRecord s;
    s.id = "D3.C";
    s.space = "D3";
    s.chart_id = "D3.uv";
    s.required_params = {"c1", "c2", "c3"};
    s.default_params = {{"c1", 0.8}, {"c2", 0.6}, {"c3", 0.4}};
    s.hamiltonian = (d3_h0() + pot).p;
    s.guards = guard_list(
        {exp(U()) + 1.0, exp(-2.0 * U()) + exp(-U() + kI * V())});
    s.box = d3_box();
    s.real_flow = false;
    s.constants.push_back({"R1", 2, (d3_x1() + kI * d3_x2() + s1).p});
    s.constants.push_back(
        {"R2", 2, (sq(Pv()) + s2).p,
         Correction{(sq(Pv()) + s2c).p,
                    "scalar part of R2 as displayed is not conserved; both "
                    "terms need the opposite sign (the Hamiltonian is attested "
                    "by two independent displays, so R2 carries the defect)"}});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident(
        "rsq",
        sq(R) - (-4.0 * R2 * sq(R1) + 8.0 * c2 * H * R1 - 4.0 * c1 * c2 * R1 +
                 16.0 * c3 * H * R2 + 16.0 * c3 * sq(H) +
                 4.0 * (sq(c2) - 4.0 * c1 * c3) * H + 4.0 * sq(c1) * c3),
        true));

    auto ops = d3_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", pot));
    s.operators.push_back(
        plus_scalar(combine_ops("R1", ops[2], Scalar{1.0}, ops[3], kI), "R1", s1));
    OperatorRecord k2{"R2", {term(1.0, 0, 2)}};
    s.operators.push_back(plus_scalar(k2, "R2", s2c));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1", 2.0 * powi(R1, 2) - 8.0 * c3 * H));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2",
              -2.0 * symprod(R1, R2) - R1 + 4.0 * c2 * H - 2.0 * c1 * c2));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) -
            (-2.0 * symprod(powi(R1, 2), R2) + 8.0 * c2 * (H * R1) +
             16.0 * c3 * (H * R2) - 5.0 * powi(R1, 2) - 4.0 * c1 * c2 * R1 +
             16.0 * c3 * powi(H, 2) +
             4.0 * (c3 + sq(c2) - 4.0 * c1 * c3) * H + 4.0 * sq(c1) * c3)));
    c.systems.push_back(std::move(s));

    E q = Q1();
    c.stackel.push_back(stackel("st.D3.C.munu", "D3.C", "D3.munu", sq(q), -sq(q),
                                c1 * q + c2 / q - c3 / sq(q),
                                c1 * q + c2 / q + c3 / sq(q), sq(q) + 2.0 * q,
                                2.0 * q - sq(q)));
}

// Potential family [D]: (d1 mu + d2 nu + d3 (mu^2+nu^2)) / ((mu+nu)(2+mu-nu)).
void add_pot_d(Catalog& c) {
    E d1 = param("d1"), d2 = param("d2"), d3 = param("d3");
    E mu = mu_s(), nu = nu_s();
    E den = (mu + nu) * (2.0 + mu - nu);
    E pot = (d1 * mu + d2 * nu + d3 * (sq(mu) + sq(nu))) / den;
    E s1 = -mu * nu *
           (d1 * (nu - 2.0) + d2 * (mu + 2.0) +
            2.0 * d3 * (nu - mu + mu * nu)) /
           den;
    E s2 = -(mu - nu) *
           ((mu - nu) * (d1 * mu + d2 * nu) -
            2.0 * d3 * (sq(mu) + sq(nu) + mu * nu * (2.0 + mu - nu))) /
           (4.0 * mu * nu * den);

    SystemRecord s;
    s.id = "D3.D";
    s.space = "D3";
    s.chart_id = "D3.uv";
    s.required_params = {"d1", "d2", "d3"};
    s.default_params = {{"d1", 0.9}, {"d2", 0.6}, {"d3", 0.4}};
    s.hamiltonian = (d3_h0() + pot).p;
    s.guards = guard_list(
        {exp(U()) + 1.0, exp(-2.0 * U()) + exp(-U() + kI * V())});
    s.box = d3_box();
    s.real_flow = false;
    s.constants.push_back(
        {"R1", 2, (d3_x1() + kI * d3_x2() - sq(Pv()) + s1).p});
    s.constants.push_back({"R2", 2, (d3_x1() - kI * d3_x2() + s2).p});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident_fixed(
        "rsq",
        sq(R) - (4.0 * R1 * sq(R2) - 4.0 * H * R1 * R2 + sq(d3) * R1 -
                 4.0 * sq(H) * R2 + 2.0 * (d1 + d2) * H * R2 - d1 * d2 * R2 +
                 4.0 * powi(H, 3) - 2.0 * (d1 + d2) * sq(H) +
                 0.25 * (sq(d1 + d2) + d3 * (d2 - d1)) * H -
                 d3 * (sq(d1) - sq(d2))),
        true,
        sq(R) - (4.0 * R1 * sq(R2) - 4.0 * H * R1 * R2 + sq(d3) * R1 -
                 4.0 * sq(H) * R2 + 2.0 * (d1 + d2) * H * R2 - d1 * d2 * R2 +
                 4.0 * powi(H, 3) - 2.0 * (d1 + d2) * sq(H) +
                 (0.25 * sq(d1 + d2) + d3 * (d2 - d1)) * H +
                 0.25 * d3 * (sq(d1) - sq(d2))),
        "pure-H part of the displayed R^2 identity is off: the 1/4 covers only "
        "(d1+d2)^2, and the constant term is +d3(d1^2-d2^2)/4; both fixes match "
        "the classical limit of the operator identity"));

    auto ops = d3_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", pot));
    OperatorRecord r1 = combine_ops("R1", ops[2], Scalar{1.0}, ops[3], kI);
    r1.terms.push_back(term(-1.0, 0, 2));
    s.operators.push_back(plus_scalar(r1, "R1", s1));
    s.operators.push_back(
        plus_scalar(combine_ops("R2", ops[2], Scalar{1.0}, ops[3], -kI), "R2", s2));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1",
              -2.0 * symprod(R1, R2) + 2.0 * (H * R1) + R2 + 2.0 * powi(H, 2) -
                  (d1 + d2 + 0.5) * H + 0.5 * d1 * d2));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2",
              2.0 * powi(R2, 2) - 2.0 * (H * R2) + 0.5 * sq(d3)));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) -
            (2.0 * symprod(R1, powi(R2, 2)) - 5.0 * powi(R2, 2) -
             2.0 * (H * symprod(R1, R2)) + sq(d3) * R1 -
             4.0 * (powi(H, 2) * R2) +
             (2.0 * d1 + 2.0 * d2 + 5.0) * (H * R2) - d1 * d2 * R2 +
             4.0 * powi(H, 3) - (2.0 * d1 + 2.0 * d2 + 1.0) * powi(H, 2) +
             (0.25 * sq(d1 + d2) + d3 * (d2 - d1)) * H -
             0.25 * d3 * (d3 - sq(d1) + sq(d2)))));
    c.systems.push_back(std::move(s));

    E q = Q1();
    c.stackel.push_back(stackel("st.D3.D.munu", "D3.D", "D3.munu", sq(q), -sq(q),
                                d1 * q + d3 * sq(q), d2 * q + d3 * sq(q),
                                sq(q) + 2.0 * q, 2.0 * q - sq(q)));
    c.stackel.push_back(stackel(
        "st.D3.D.elliptic2i", "D3.D", "D3.elliptic2i", 1.0, 1.0,
        -2.0 * (d1 + d2) * cosh(2.0 * q) + 2.0 * (d1 - d2) * sinh(2.0 * q) +
            2.0 * d3 * sinh(4.0 * q),
        2.0 * (d1 + d2) * cos(2.0 * q) +
            4.0 * E(kI) * (d1 - d2) * sin(2.0 * q) +
            4.0 * E(kI) * d3 * sin(4.0 * q),
        4.0 * sq(cosh(2.0 * q)) - 8.0 * cosh(2.0 * q),
        8.0 * cos(2.0 * q) - 4.0 * sq(cos(2.0 * q))));
}

// Potential family [E]: the constant potential c/(4 + xi^2 + eta^2).
void add_pot_e(Catalog& c) {
    E cc = param("c");
    E xi = xi_s(), eta = eta_s();
    E den4 = 4.0 + sq(xi) + sq(eta);
    E pot = cc / den4;
    E s1 = 0.25 * cc * (sq(eta) - sq(xi)) / den4;
    E s2 = -0.5 * cc * xi * eta / den4;

    SystemRecord s;
    s.id = "D3.E";
    s.space = "D3";
    s.chart_id = "D3.uv";
    s.required_params = {"c"};
    s.default_params = {{"c", 0.8}};
    s.hamiltonian = (d3_h0() + pot).p;
    s.guards = d3_guards();
    s.box = d3_box();
    s.real_flow = true;
    s.real_box = realbox(0.3, 1.3, -1.2, 1.2, -1.2, 1.2);
    s.constants.push_back({"K", 1, Pv().p});
    s.constants.push_back({"R1", 2, (d3_x1() + s1).p});
    s.constants.push_back({"R2", 2, (d3_x2() + s2).p});
    s.generators = {"H", "K", "R1", "R2"};
    Gens g{s.generators};
    E H = g("H"), K = g("K"), R1 = g("R1"), R2 = g("R2");
    s.relations.push_back(rel("pb.K.R1", "K", "R1", -R2));
    s.relations.push_back(rel("pb.K.R2", "K", "R2", R1));
    s.relations.push_back(rel("pb.R1.R2", "R1", "R2", H * K));
    s.identities.push_back(ident(
        "dependence", sq(R1) + sq(R2) - H * sq(K) - sq(H) + 0.5 * cc * H -
                          sq(cc) / 16.0));

    auto ops = d3_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", pot));
    s.operators.push_back(ops[1]); // K
    s.operators.push_back(plus_scalar(ops[2], "R1", s1));
    s.operators.push_back(plus_scalar(ops[3], "R2", s2));
    s.op_relations.push_back(oprel("q.K.R1", "K", "R1", -R2));
    s.op_relations.push_back(oprel("q.K.R2", "K", "R2", R1));
    s.op_relations.push_back(oprel("q.R1.R2", "R1", "R2", H * K));
    s.op_identities.push_back(opident(
        "q.dependence", powi(R1, 2) + powi(R2, 2) - H * powi(K, 2) -
                            powi(H, 2) + (0.5 * cc + 0.25) * H -
                            sq(cc) / 16.0));
    c.systems.push_back(std::move(s));

    E q = Q1(), b = param("b");
    c.stackel.push_back(stackel("st.D3.E.uv", "D3.E", "D3.uv", 1.0, 1.0,
                                cc * exp(-q), 0.0,
                                4.0 * (exp(-q) + exp(-2.0 * q)), 0.0));
    c.stackel.push_back(stackel(
        "st.D3.E.elliptic", "D3.E", "D3.elliptic", 1.0, 1.0,
        cc * sq(b) * sq(cosh(q)), -cc * sq(b) * sq(cos(q)),
        2.0 * sq(b) * cosh(2.0 * q) + 0.25 * powi(b, 4) * sq(cosh(2.0 * q)),
        -2.0 * sq(b) * cos(2.0 * q) - 0.25 * powi(b, 4) * sq(cos(2.0 * q))));
}

} // namespace

void add_d3(Catalog& c) {
    add_free(c);
    add_embedding(c);
    add_charts(c);
    add_free_displays(c);
    add_pot_a(c);
    add_pot_b(c);
    add_pot_c(c);
    add_pot_d(c);
    add_pot_e(c);
}

} // namespace supint::build
