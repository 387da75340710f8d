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

// Free-particle building blocks on D2, defining chart (u,v):
//   H0 = u^2 (pu^2 + pv^2) / (u^2 + 1)
E d2_h0() { return sq(U()) * (sq(Pu()) + sq(Pv())) / (sq(U()) + 1.0); }

E d2_x1() {
    return 2.0 * V() * (sq(Pv()) - sq(U()) * sq(Pu())) / (sq(U()) + 1.0) +
           2.0 * U() * Pu() * Pv();
}

E d2_x2() {
    return ((sq(V()) - powi(U(), 4)) * sq(Pv()) + sq(U()) * (1.0 - sq(V())) * sq(Pu())) /
               (sq(U()) + 1.0) +
           2.0 * U() * V() * Pu() * Pv();
}

// Multiplies H0's conformal weight onto a potential term: u^2/(u^2+1) * W.
E d2_weight(E W) { return sq(U()) * W / (sq(U()) + 1.0); }

std::vector<OperatorRecord> d2_free_operators() {
    E u = U(), v = V();
    E den = sq(u) + 1.0;
    OperatorRecord H{"H",
                     {term(sq(u) / den, 2, 0), term(sq(u) / den, 0, 2)}};
    OperatorRecord K{"K", {term(1.0, 0, 1)}};
    OperatorRecord X1{"X1",
                      {term(-2.0 * v * sq(u) / den, 2, 0), term(2.0 * v / den, 0, 2),
                       term(2.0 * u, 1, 1), term(1.0, 0, 1)}};
    OperatorRecord X2{"X2",
                      {term(sq(u) * (1.0 - sq(v)) / den, 2, 0),
                       term((sq(v) - powi(u, 4)) / den, 0, 2), term(2.0 * u * v, 1, 1),
                       term(u, 1, 0), term(v, 0, 1), term(-0.25, 0, 0)}};
    return {H, K, X1, X2};
}

SampleBox d2_box() { return box(-1.5, 1.5, -0.5, 0.5, -1.5, 1.5, -0.5, 0.5); }

std::vector<ExprPtr> d2_guards() { return guard_list({U(), sq(U()) + 1.0}); }

void add_free(Catalog& c) {
    SystemRecord s;
    s.id = "D2.free";
    s.space = "D2";
    s.chart_id = "D2.uv";
    s.hamiltonian = d2_h0().p;
    s.guards = d2_guards();
    s.box = d2_box();
    s.real_flow = true;
    s.real_box = realbox(0.4, 1.5, -1.2, 1.2, -1.2, 1.2);
    s.constants.push_back({"K", 1, Pv().p});
    s.constants.push_back({"X1", 2, d2_x1().p});
    s.constants.push_back({"X2", 2, d2_x2().p});
    s.generators = {"H", "K", "X1", "X2"};
    Gens g{s.generators};
    E H = g("H"), K = g("K"), X1 = g("X1"), X2 = g("X2");
    s.relations.push_back(rel("pb.K.X1", "K", "X1", 2.0 * (sq(K) - H)));
    s.relations.push_back(rel("pb.K.X2", "K", "X2", X1));
    s.relations.push_back(rel("pb.X1.X2", "X1", "X2", 4.0 * K * X2));
    s.identities.push_back(
        ident("dependence", sq(X1) - 4.0 * sq(K) * X2 + 4.0 * H * X2 - 4.0 * sq(H)));
    s.operators = d2_free_operators();
    s.op_relations.push_back(oprel("q.K.X1", "K", "X1", 2.0 * (powi(K, 2) - H)));
    s.op_relations.push_back(oprel("q.K.X2", "K", "X2", X1));
    s.op_relations.push_back(oprel("q.X1.X2", "X1", "X2", 2.0 * symprod(K, X2)));
    s.op_identities.push_back(
        opident("q.dependence", powi(X1, 2) - 2.0 * symprod(powi(K, 2), X2) +
                                    4.0 * H * X2 - 4.0 * powi(H, 2) - H + 4.0 * powi(K, 2)));
    c.systems.push_back(std::move(s));
}

void add_embedding(Catalog& c) {
    E u = U(), v = V();
    E root = sqrt(sq(u) + 1.0);
    E ymt = root / u; // Y - T
    E ypt = -(2.0 * powi(u, 4) + 5.0 * sq(u) + 8.0 * sq(v)) * root / (8.0 * u) -
            (3.0 / 8.0) * asinh(u); // Y + T
    EmbeddingRecord em;
    em.id = "D2.embedding";
    em.space = "D2";
    em.variant = "printed";
    em.X = (v * root / u).p;
    em.Y = (0.5 * (ypt + ymt)).p;
    em.T = (0.5 * (ypt - ymt)).p;
    em.conformal = ((sq(u) + 1.0) / sq(u)).p;
    em.guards = guard_list({u, sq(u) + 1.0});
    em.box = box(0.6, 1.4, -0.2, 0.2, -1.0, 1.0, -0.3, 0.3);
    c.embeddings.push_back(std::move(em));
}

void add_charts(Catalog& c) {
    // Identity chart on the base coordinates.
    {
        ChartRecord ch;
        ch.id = "D2.uv";
        ch.space = "D2";
        ch.coord_names = {"u", "v"};
        ch.to_base_u = Q1().p;
        ch.to_base_v = Q2().p;
        ch.from_base_q1 = Q1().p;
        ch.from_base_q2 = Q2().p;
        ch.guards_chart = d2_guards();
        ch.guards_base = d2_guards();
        ch.box = d2_box();
        c.charts.push_back(std::move(ch));
    }
    // Elliptic coordinates: u = b cosh(omega) cos(phi), v = b sinh(omega) sin(phi).
    // Inverse through u + iv = b cosh(omega + i phi).
    {
        ChartRecord ch;
        ch.id = "D2.elliptic";
        ch.space = "D2";
        ch.coord_names = {"omega", "phi"};
        ch.required_params = {"b"};
        E w = Q1(), f = Q2(), b = param("b");
        ch.to_base_u = (b * cosh(w) * cos(f)).p;
        ch.to_base_v = (b * sinh(w) * sin(f)).p;
        E zp = (U() + kI * V()) / b;
        E zm = (U() - kI * V()) / b;
        E A = acosh_e(zp), B = acosh_e(zm);
        ch.from_base_q1 = (0.5 * (A + B)).p;
        ch.from_base_q2 = ((A - B) / (2.0 * E(kI))).p;
        ch.guards_chart = guard_list({sinh(w), cos(f), cosh(w)});
        ch.guards_base = guard_list({U(), sq(U()) + 1.0, sq(zp) - 1.0, sq(zm) - 1.0});
        ch.box = box(0.6, 1.2, -0.15, 0.15, 0.2, 0.7, -0.15, 0.15);
        c.charts.push_back(std::move(ch));
    }
    // Polar coordinates: u = r cos(theta), v = r sin(theta).
    {
        ChartRecord ch;
        ch.id = "D2.polar";
        ch.space = "D2";
        ch.coord_names = {"r", "theta"};
        E r = Q1(), th = Q2();
        ch.to_base_u = (r * cos(th)).p;
        ch.to_base_v = (r * sin(th)).p;
        ch.from_base_q1 = sqrt(sq(U()) + sq(V())).p;
        ch.from_base_q2 = atan(V() / U()).p;
        ch.guards_chart = guard_list({r, cos(th)});
        ch.guards_base = guard_list({U(), sq(U()) + sq(V())});
        ch.box = box(0.5, 1.4, -0.2, 0.2, -0.6, 0.6, -0.2, 0.2);
        c.charts.push_back(std::move(ch));
    }
    // Parabolic coordinates: u = xi eta, v = (xi^2 - eta^2)/2.
    {
        ChartRecord ch;
        ch.id = "D2.parabolic";
        ch.space = "D2";
        ch.coord_names = {"xi", "eta"};
        E xi = Q1(), eta = Q2();
        ch.to_base_u = (xi * eta).p;
        ch.to_base_v = (0.5 * (sq(xi) - sq(eta))).p;
        E xi_of_base = sqrt(V() + sqrt(sq(U()) + sq(V())));
        ch.from_base_q1 = xi_of_base.p;
        ch.from_base_q2 = (U() / xi_of_base).p;
        ch.guards_chart = guard_list({xi, eta});
        ch.guards_base =
            guard_list({U(), sq(U()) + sq(V()), V() + sqrt(sq(U()) + sq(V()))});
        ch.box = box(0.5, 1.4, -0.25, 0.25, 0.5, 1.4, -0.25, 0.25);
        c.charts.push_back(std::move(ch));
    }
}

void add_free_displays(Catalog& c) {
    Gens g{{"H", "K", "X1", "X2"}};
    // Aliases for single-variable Stackel factors (slot 0 holds the
    // chart coordinate the factor depends on).
    E q = Q1();
    // Separation on the base chart itself: H0 = (pu^2 + pv^2)/(1 + 1/u^2).
    c.stackel.push_back(stackel("st.D2.free.uv", "D2.free", "D2.uv", 1.0, 1.0, 0.0, 0.0,
                                1.0 + 1.0 / sq(q), 0.0));
    // Elliptic chart: the separated Hamiltonian and the printed form of the
    // quadratic constant X2 + b^2 K^2.
    {
        E w = Q1(), f = Q2(), b = param("b");
        E g1 = sq(b) * sq(cosh(q)) - 1.0 / sq(cosh(q));
        E g2 = 1.0 / sq(cos(q)) - sq(b) * sq(cos(q));
        c.stackel.push_back(stackel("st.D2.free.elliptic", "D2.free", "D2.elliptic",
                                    1.0, 1.0, 0.0, 0.0, g1, g2));
        E pw = P1(), pf = P2();
        E den = 1.0 / sq(cos(f)) - 1.0 / sq(cosh(w)) +
                sq(b) * (sq(cosh(w)) - sq(cos(f)));
        E num = (1.0 / sq(cos(f)) + sq(b) * sq(sin(f))) * sq(pw) +
                (1.0 / sq(cosh(w)) - sq(b) * sq(sinh(w))) * sq(pf);
        ChartConstantRecord cc;
        cc.id = "cc.D2.free.elliptic";
        cc.system_id = "D2.free";
        cc.chart_id = "D2.elliptic";
        cc.chart_expr = (num / den).p;
        cc.combo = (g("X2") + sq(E(param("b"))) * sq(g("K"))).p;
        c.chart_constants.push_back(std::move(cc));
    }
    // Polar chart: H0 = (r^2 pr^2 + pt^2)/(r^2 + sec^2 theta) and the printed
    // display of X2.
    {
        c.stackel.push_back(stackel("st.D2.free.polar", "D2.free", "D2.polar", sq(q),
                                    1.0, 0.0, 0.0, sq(q), 1.0 / sq(cos(q))));
        E r = Q1(), th = Q2(), pr = P1(), pt = P2();
        E den = sq(r) + 1.0 / sq(cos(th));
        ChartConstantRecord cc;
        cc.id = "cc.D2.free.polar";
        cc.system_id = "D2.free";
        cc.chart_id = "D2.polar";
        cc.chart_expr = ((sq(r) * sq(pr) / sq(cos(th)) - sq(pt)) / den).p;
        cc.combo = g("X2").p;
        c.chart_constants.push_back(std::move(cc));
    }
    // Parabolic chart: H0 = (pxi^2 + peta^2)/(xi^2 + eta^2 + 1/xi^2 + 1/eta^2)
    // and the printed display of X1.
    {
        c.stackel.push_back(stackel("st.D2.free.parabolic", "D2.free", "D2.parabolic",
                                    1.0, 1.0, 0.0, 0.0, sq(q) + 1.0 / sq(q),
                                    sq(q) + 1.0 / sq(q)));
        E xi = Q1(), eta = Q2(), pxi = P1(), peta = P2();
        E den = sq(xi) + sq(eta) + 1.0 / sq(xi) + 1.0 / sq(eta);
        ChartConstantRecord cc;
        cc.id = "cc.D2.free.parabolic";
        cc.system_id = "D2.free";
        cc.chart_id = "D2.parabolic";
        cc.chart_expr = (((sq(eta) + 1.0 / sq(eta)) * sq(pxi) -
                          (sq(xi) + 1.0 / sq(xi)) * sq(peta)) /
                         den).p;
        cc.combo = g("X1").p;
        c.chart_constants.push_back(std::move(cc));
    }
}

// Appends a multiplication term to a differential-operator record.
OperatorRecord plus_scalar(OperatorRecord base, const std::string& name, E add) {
    base.name = name;
    base.terms.push_back(term(add, 0, 0));
    return base;
}

// Potential family [A]: a1 (u^2/4 + v^2) + a2 v + a3 / u^2.
void add_pot_a(Catalog& c) {
    E u = U(), v = V();
    E a1 = param("a1"), a2 = param("a2"), a3 = param("a3");
    E den = sq(u) + 1.0;
    E W = a1 * (0.25 * sq(u) + sq(v)) + a2 * v + a3 / sq(u);
    E r1_scal = (a1 / 2.0) * v * (sq(u) + (sq(u) + 4.0 * sq(v)) / den) +
                (a2 / 2.0) * (sq(u) + 4.0 * sq(v) / den) - 2.0 * a3 * v / den;
    E r2_scal = a1 * sq(v) + a2 * v;

    SystemRecord s;
    s.id = "D2.A";
    s.space = "D2";
    s.chart_id = "D2.uv";
    s.required_params = {"a1", "a2", "a3"};
    s.default_params = {{"a1", 1.0}, {"a2", 0.5}, {"a3", 0.75}};
    s.hamiltonian = (d2_h0() + d2_weight(W)).p;
    s.guards = d2_guards();
    s.box = d2_box();
    s.real_flow = true;
    s.real_box = realbox(0.4, 1.5, -1.2, 1.2, -1.2, 1.2);
    s.constants.push_back({"R1", 2, (d2_x1() + r1_scal).p});
    s.constants.push_back({"R2", 2, (sq(Pv()) + r2_scal).p});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident(
        "rsq",
        sq(R) - (16.0 * powi(R2, 3) - 4.0 * a1 * sq(R1) - 32.0 * H * sq(R2) -
                 8.0 * a2 * R1 * R2 + 8.0 * a2 * H * R1 +
                 16.0 * (sq(H) + a1 * H - a1 * a3) * R2 + 4.0 * sq(a2) * H -
                 4.0 * sq(a2) * a3),
        true));

    auto ops = d2_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", d2_weight(W)));
    s.operators.push_back(plus_scalar(ops[2], "R1", r1_scal));
    OperatorRecord k2{"R2", {term(1.0, 0, 2)}};
    s.operators.push_back(plus_scalar(k2, "R2", r2_scal));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1",
              -24.0 * powi(R2, 2) + 4.0 * a2 * R1 + 32.0 * H * R2 - 8.0 * powi(H, 2) -
                  8.0 * a1 * H + 6.0 * a1 + 8.0 * a1 * a3));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2", -4.0 * a1 * R1 - 4.0 * a2 * R2 + 4.0 * a2 * H));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) -
            (16.0 * powi(R2, 3) - 4.0 * a1 * powi(R1, 2) -
             32.0 * H * powi(R2, 2) - 4.0 * a2 * symprod(R1, R2) +
             8.0 * a2 * (H * R1) + 16.0 * (powi(H, 2) * R2) + 16.0 * a1 * (H * R2) -
             4.0 * a1 * (4.0 * a3 - 11.0) * R2 + 4.0 * (sq(a2) + 8.0 * a1) * H -
             4.0 * sq(E(param("b2"))) * (a3 + 0.75))));
    c.systems.push_back(std::move(s));

    E q = Q1();
    c.stackel.push_back(stackel("st.D2.A.uv", "D2.A", "D2.uv", 1.0, 1.0,
                                0.25 * a1 * sq(q) + a3 / sq(q), a1 * sq(q) + a2 * q,
                                1.0 + 1.0 / sq(q), 0.0));
    c.stackel.push_back(stackel(
        "st.D2.A.parabolic", "D2.A", "D2.parabolic", 1.0, 1.0,
        0.25 * a1 * powi(q, 6) + 0.5 * a2 * powi(q, 4) + a3 / sq(q),
        0.25 * a1 * powi(q, 6) - 0.5 * a2 * powi(q, 4) + a3 / sq(q),
        sq(q) + 1.0 / sq(q), sq(q) + 1.0 / sq(q)));
}

// Potential family [B]: b1 (u^2 + v^2) + b2 / u^2 + b3 / v^2.
void add_pot_b(Catalog& c) {
    E u = U(), v = V();
    E b1 = param("b1"), b2 = param("b2"), b3 = param("b3");
    E den = sq(u) + 1.0;
    E W = b1 * (sq(u) + sq(v)) + b2 / sq(u) + b3 / sq(v);
    E r1_scal =
        ((sq(u) + sq(v)) / den) * (b1 * (sq(u) + sq(v)) - b2 - b3 * sq(u) / sq(v));
    E r2_scal = b1 * sq(v) + b3 / sq(v);

    SystemRecord s;
    s.id = "D2.B";
    s.space = "D2";
    s.chart_id = "D2.uv";
    s.required_params = {"b1", "b2", "b3"};
    s.default_params = {{"b1", 1.0}, {"b2", 0.5}, {"b3", 0.75}};
    s.hamiltonian = (d2_h0() + d2_weight(W)).p;
    s.guards = guard_list({U(), V(), sq(U()) + 1.0});
    s.box = d2_box();
    s.real_flow = true;
    s.real_box = realbox(0.4, 1.5, 0.3, 1.3, -1.2, 1.2);
    s.constants.push_back({"R1", 2, (d2_x2() + r1_scal).p});
    s.constants.push_back({"R2", 2, (sq(Pv()) + r2_scal).p});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident(
        "rsq",
        sq(R) - (16.0 * R1 * sq(R2) - 16.0 * b1 * sq(R1) - 16.0 * H * R1 * R2 +
                 32.0 * b1 * (H - b2 - b3) * R1 + 16.0 * (H + b3 - b2) * H * R2 -
                 16.0 * (b1 + b3) * sq(H) + 32.0 * b1 * (b2 - b3) * H -
                 16.0 * b1 * sq(b2 - b3)),
        true));

    auto ops = d2_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", d2_weight(W)));
    s.operators.push_back(plus_scalar(ops[3], "R1", r1_scal));
    OperatorRecord k2{"R2", {term(1.0, 0, 2)}};
    s.operators.push_back(plus_scalar(k2, "R2", r2_scal));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1",
              -8.0 * symprod(R1, R2) + 8.0 * (H * R1) + 12.0 * R2 - 8.0 * powi(H, 2) +
                  8.0 * (b2 - b3 - 0.75) * H));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2",
              8.0 * powi(R2, 2) - 16.0 * b1 * R1 - 8.0 * (H * R2) + 16.0 * b1 * H -
                  16.0 * b1 * (b2 + b3 + 0.75)));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) -
            (8.0 * symprod(R1, powi(R2, 2)) - 8.0 * (H * symprod(R1, R2)) +
             16.0 * (powi(H, 2) * R2) - 16.0 * b1 * powi(R1, 2) -
             76.0 * powi(R2, 2) + 32.0 * b1 * (H * R1) -
             8.0 * b1 * (4.0 * (b3 + b2) + 3.0) * R1 +
             16.0 * (b3 - b2 + 4.75) * (H * R2) -
             16.0 * (b1 + b3 + 0.75) * powi(H, 2) -
             8.0 * b1 * (4.0 * (b3 - b2) + 3.0) * H +
             b1 * (36.0 + 48.0 * b3 - sq(4.0 * (b3 - b2) + 3.0)))));
    c.systems.push_back(std::move(s));

    E q = Q1(), b = param("b");
    c.stackel.push_back(stackel("st.D2.B.uv", "D2.B", "D2.uv", 1.0, 1.0,
                                b1 * sq(q) + b2 / sq(q), b1 * sq(q) + b3 / sq(q),
                                1.0 + 1.0 / sq(q), 0.0));
    c.stackel.push_back(stackel(
        "st.D2.B.elliptic", "D2.B", "D2.elliptic", 1.0, 1.0,
        0.25 * b1 * sq(b) * sq(sinh(2.0 * q)) - b2 / sq(cosh(q)) + b3 / sq(sinh(q)),
        0.25 * b1 * sq(b) * sq(sin(2.0 * q)) + b2 / sq(cos(q)) + b3 / sq(sin(q)),
        sq(b) * sq(cosh(q)) - 1.0 / sq(cosh(q)),
        1.0 / sq(cos(q)) - sq(b) * sq(cos(q))));
    c.stackel.push_back(stackel("st.D2.B.polar", "D2.B", "D2.polar", sq(q), 1.0,
                                b1 * powi(q, 4), b2 / sq(cos(q)) + b3 / sq(sin(q)),
                                sq(q), 1.0 / sq(cos(q))));
}

// Potential family [C], defined through the parabolic chart:
//   H = (pxi^2 + peta^2 + c1 + c2/xi^2 + c3/eta^2) / (xi^2+eta^2+1/xi^2+1/eta^2),
// re-expressed on (u,v) via xi^2 = v + w, eta^2 = w - v, w = sqrt(u^2+v^2).
void add_pot_c(Catalog& c) {
    E u = U(), v = V();
    E c1 = param("c1"), c2 = param("c2"), c3 = param("c3");
    E den = sq(u) + 1.0;
    E w = sqrt(sq(u) + sq(v));
    E xi2 = v + w, eta2 = w - v;
    E pot = sq(u) * (c1 + c2 / xi2 + c3 / eta2) / (2.0 * w * den);
    E r1_scal = (c1 * xi2 * (sq(eta2) + 1.0) + c2 * (sq(eta2) + 1.0) -
                 c3 * (sq(xi2) + 1.0)) /
                (den * (2.0 * w));
    E r2_scal =
        (c1 * (2.0 * w) - c2 * (sq(eta2) - 1.0) - c3 * (sq(xi2) - 1.0)) / (4.0 * den);

    SystemRecord s;
    s.id = "D2.C";
    s.space = "D2";
    s.chart_id = "D2.uv";
    s.required_params = {"c1", "c2", "c3"};
    s.default_params = {{"c1", 1.0}, {"c2", 0.5}, {"c3", 0.75}};
    s.hamiltonian = (d2_h0() + pot).p;
    s.guards = guard_list({u, sq(u) + 1.0, sq(u) + sq(v), xi2, eta2});
    s.box = box(0.6, 1.4, -0.25, 0.25, -0.6, 0.6, -0.2, 0.2);
    s.real_flow = true;
    s.real_box = realbox(0.5, 1.4, -0.8, 0.8, -1.2, 1.2);
    s.constants.push_back({"R1", 2, (d2_x1() + r1_scal).p});
    s.constants.push_back({"R2", 2, (d2_x2() + r2_scal).p});
    s.generators = {"H", "R1", "R2", "R"};
    Gens g{s.generators};
    E H = g("H"), R1 = g("R1"), R2 = g("R2"), R = g("R");
    s.quad_algebra = true;
    s.r2_identity_id = "rsq";
    s.identities.push_back(ident(
        "rsq",
        sq(R) - (4.0 * sq(R1) * R2 - (c2 + c3) * sq(R1) + 16.0 * H * sq(R2) -
                 4.0 * c1 * R1 * R2 + 2.0 * c1 * c3 * R1 - 16.0 * sq(H) * R2 +
                 4.0 * (c2 + c3) * sq(H) + (sq(c1) - 4.0 * c2 * c3) * H -
                 sq(c1) * c3),
        true));

    auto ops = d2_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", pot));
    s.operators.push_back(plus_scalar(ops[2], "R1", r1_scal));
    s.operators.push_back(plus_scalar(ops[3], "R2", r2_scal));
    s.op_relations.push_back(
        oprel("q.R.R1", "R", "R1",
              -2.0 * powi(R1, 2) - 2.0 * c1 * R1 - 16.0 * (H * R2) + 8.0 * powi(H, 2) -
                  6.0 * H));
    s.op_relations.push_back(
        oprel("q.R.R2", "R", "R2",
              2.0 * symprod(R1, R2) - (c2 + c3) * R1 - 2.0 * c1 * R2 + c1 * c3));
    s.op_identities.push_back(opident(
        "q.rsq",
        powi(R, 2) -
            (2.0 * symprod(powi(R1, 2), R2) + 16.0 * (H * powi(R2, 2)) -
             (c2 + c3 + 4.0) * powi(R1, 2) - 2.0 * c1 * symprod(R1, R2) +
             2.0 * c1 * (c3 + 2.0) * R1 - 16.0 * (powi(H, 2) * R2) +
             12.0 * (H * R2) + 4.0 * (c2 + c3) * powi(H, 2) +
             (sq(c1) - 4.0 * c2 * c3 - 3.0 * (c2 + c3)) * H -
             0.25 * (3.0 + 4.0 * c3) * sq(c1))));
    c.systems.push_back(std::move(s));

    E q = Q1(), bp = param("bp");
    c.stackel.push_back(stackel("st.D2.C.parabolic", "D2.C", "D2.parabolic", 1.0, 1.0,
                                c1 + c2 / sq(q), c3 / sq(q), sq(q) + 1.0 / sq(q),
                                sq(q) + 1.0 / sq(q)));
    c.stackel.push_back(stackel(
        "st.D2.C.ell2", "D2.C", "D2.ell2", 1.0, 1.0,
        c1 * sq(bp) * sq(cosh(q)) - c2 / sq(cosh(q)) + c3 / sq(sinh(q)),
        -c1 * sq(bp) * sq(cos(q)) + c2 / sq(cos(q)) + c3 / sq(sin(q)),
        powi(bp, 4) * (powi(cosh(q), 4) - sq(cosh(q))) + 1.0 / sq(sinh(q)) -
            1.0 / sq(cosh(q)),
        powi(bp, 4) * (sq(cos(q)) - powi(cos(q), 4)) + 1.0 / sq(cos(q)) +
            1.0 / sq(sin(q))));
    c.stackel.push_back(stackel("st.D2.C.polar2", "D2.C", "D2.polar2", sq(q), 1.0,
                                c1 * sq(q), c2 / sq(sin(q)) + c3 / sq(cos(q)),
                                powi(q, 4), 1.0 / sq(cos(q)) + 1.0 / sq(sin(q))));
}

// Potential family [D]: the constant potential d.
void add_pot_d(Catalog& c) {
    E u = U(), v = V();
    E d = param("d");
    E den = sq(u) + 1.0;

    SystemRecord s;
    s.id = "D2.D";
    s.space = "D2";
    s.chart_id = "D2.uv";
    s.required_params = {"d"};
    s.default_params = {{"d", 0.8}};
    s.hamiltonian = (sq(u) * (sq(Pu()) + sq(Pv()) + d) / den).p;
    s.guards = d2_guards();
    s.box = d2_box();
    s.real_flow = true;
    s.real_box = realbox(0.4, 1.5, -1.2, 1.2, -1.2, 1.2);
    s.constants.push_back({"K", 1, Pv().p});
    s.constants.push_back({"R1", 2, (d2_x1() + 2.0 * d * v / den).p});
    s.constants.push_back({"R2", 2, (d2_x2() + d * (sq(u) + sq(v)) / den).p});
    s.generators = {"H", "K", "R1", "R2"};
    Gens g{s.generators};
    E H = g("H"), K = g("K"), R1 = g("R1"), R2 = g("R2");
    s.relations.push_back(rel("pb.K.R1", "K", "R1", 2.0 * sq(K) - 2.0 * H + 2.0 * d));
    s.relations.push_back(rel("pb.K.R2", "K", "R2", R1));
    s.relations.push_back(rel_fixed(
        "pb.R1.R2", "R1", "R2", -4.0 * K * R2, 4.0 * K * R2,
        "sign of the {R1,R2} display flipped; the d->0 limit must reproduce "
        "{X1,X2} = 4 K X2 and the dependence identity forces the same sign"));
    s.identities.push_back(ident("dependence", sq(R1) - 4.0 * sq(K) * R2 +
                                                   4.0 * (H - d) * R2 - 4.0 * sq(H) +
                                                   4.0 * d * H));

    auto ops = d2_free_operators();
    s.operators.push_back(plus_scalar(ops[0], "H", sq(u) * d / den));
    s.operators.push_back(ops[1]); // K
    s.operators.push_back(plus_scalar(ops[2], "R1", 2.0 * d * v / den));
    s.operators.push_back(plus_scalar(ops[3], "R2", d * (sq(u) + sq(v)) / den));
    s.op_relations.push_back(
        oprel("q.K.R1", "K", "R1", 2.0 * powi(K, 2) - 2.0 * H + 2.0 * d));
    s.op_relations.push_back(oprel("q.K.R2", "K", "R2", R1));
    s.op_relations.push_back(oprel("q.R1.R2", "R1", "R2", 2.0 * symprod(K, R2)));
    s.op_identities.push_back(
        opident("q.dependence", powi(R1, 2) - 2.0 * symprod(powi(K, 2), R2) +
                                    4.0 * (H * R2) - 4.0 * d * R2 + 4.0 * powi(K, 2) -
                                    4.0 * powi(H, 2) + (4.0 * d - 1.0) * H));
    c.systems.push_back(std::move(s));

    E q = Q1(), b = param("b");
    c.stackel.push_back(stackel("st.D2.D.uv", "D2.D", "D2.uv", 1.0, 1.0, d, 0.0,
                                1.0 + 1.0 / sq(q), 0.0));
    c.stackel.push_back(stackel("st.D2.D.elliptic", "D2.D", "D2.elliptic", 1.0, 1.0,
                                sq(b) * d * sq(cosh(q)), -sq(b) * d * sq(cos(q)),
                                sq(b) * sq(cosh(q)) - 1.0 / sq(cosh(q)),
                                1.0 / sq(cos(q)) - sq(b) * sq(cos(q))));
    c.stackel.push_back(stackel("st.D2.D.polar", "D2.D", "D2.polar", sq(q), 1.0,
                                d * sq(q), 0.0, sq(q), 1.0 / sq(cos(q))));
    c.stackel.push_back(stackel("st.D2.D.parabolic", "D2.D", "D2.parabolic", 1.0, 1.0,
                                d * sq(q), d * sq(q), sq(q) + 1.0 / sq(q),
                                sq(q) + 1.0 / sq(q)));
}

// Charts used by the [C] family displays (parabolic-composed elliptic/polar).
void add_c_charts(Catalog& c) {
    // u = (bp^2/4) sinh(2w) sin(2f),  v = (bp^2/4)(cosh(2w) cos(2f) + 1).
    {
        ChartRecord ch;
        ch.id = "D2.ell2";
        ch.space = "D2";
        ch.coord_names = {"omega2", "phi2"};
        ch.required_params = {"bp"};
        E w = Q1(), f = Q2(), bp = param("bp");
        ch.to_base_u = (0.25 * sq(bp) * sinh(2.0 * w) * sin(2.0 * f)).p;
        ch.to_base_v = (0.25 * sq(bp) * (cosh(2.0 * w) * cos(2.0 * f) + 1.0)).p;
        E sp = (4.0 * (V() + kI * U()) - sq(bp)) / sq(bp);
        E sm = (4.0 * (V() - kI * U()) - sq(bp)) / sq(bp);
        E A = acosh_e(sp), B = acosh_e(sm);
        ch.from_base_q1 = (0.25 * (A + B)).p;
        ch.from_base_q2 = ((A - B) / (4.0 * E(kI))).p;
        ch.guards_chart = guard_list({sinh(2.0 * w), sin(2.0 * f), cos(2.0 * f)});
        ch.guards_base = guard_list({U(), sq(sp) - 1.0, sq(sm) - 1.0});
        ch.box = box(0.5, 1.0, -0.1, 0.1, 0.2, 0.65, -0.1, 0.1);
        c.charts.push_back(std::move(ch));
    }
    // u = (r^2/2) sin(2t), v = (r^2/2) cos(2t).
    {
        ChartRecord ch;
        ch.id = "D2.polar2";
        ch.space = "D2";
        ch.coord_names = {"r2", "theta2"};
        E r = Q1(), t = Q2();
        ch.to_base_u = (0.5 * sq(r) * sin(2.0 * t)).p;
        ch.to_base_v = (0.5 * sq(r) * cos(2.0 * t)).p;
        ch.from_base_q1 = sqrt(2.0 * sqrt(sq(U()) + sq(V()))).p;
        ch.from_base_q2 = (0.5 * atan(U() / V())).p;
        ch.guards_chart = guard_list({r, sin(t), cos(t), cos(2.0 * t)});
        ch.guards_base = guard_list({U(), V(), sq(U()) + sq(V())});
        ch.box = box(0.6, 1.2, -0.15, 0.15, 0.25, 0.6, -0.15, 0.15);
        c.charts.push_back(std::move(ch));
    }
}

} // namespace

void add_d2(Catalog& c) {
    add_free(c);
    add_embedding(c);
    add_charts(c);
    add_c_charts(c);
    add_free_displays(c);
    add_pot_a(c);
    add_pot_b(c);
    add_pot_c(c);
    add_pot_d(c);
}

} // namespace supint::build
