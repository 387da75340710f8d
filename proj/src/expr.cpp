#include "supint/expr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace supint {

namespace {

ExprPtr mk(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr mk_unary(Op op, ExprPtr a) {
    Expr e;
    e.op = op;
    e.kids = {std::move(a)};
    return mk(std::move(e));
}

ExprPtr mk_binary(Op op, ExprPtr a, ExprPtr b) {
    Expr e;
    e.op = op;
    e.kids = {std::move(a), std::move(b)};
    return mk(std::move(e));
}

const char* op_name(Op op) {
    switch (op) {
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Neg: return "neg";
    case Op::PowI: return "powi";
    case Op::Sqrt: return "sqrt";
    case Op::Exp: return "exp";
    case Op::Log: return "log";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Tan: return "tan";
    case Op::Sinh: return "sinh";
    case Op::Cosh: return "cosh";
    case Op::Tanh: return "tanh";
    case Op::Atan: return "atan";
    case Op::Asinh: return "asinh";
    case Op::Atanh: return "atanh";
    case Op::EllPi: return "ellpi";
    case Op::Sn: return "sn";
    case Op::Asn: return "asn";
    case Op::Sym: return "sym";
    default: return nullptr;
    }
}

void fmt_double(std::string& out, double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

} // namespace

E::E(double x) {
    Expr e;
    e.op = Op::Const;
    e.cval = x;
    p = mk(std::move(e));
}

E::E(Scalar z) {
    Expr e;
    e.op = Op::Const;
    e.cval = z;
    p = mk(std::move(e));
}

E var(int slot) {
    Expr e;
    e.op = Op::Var;
    e.iarg = slot;
    return E{mk(std::move(e))};
}

E param(std::string name) {
    Expr e;
    e.op = Op::Param;
    e.pname = std::move(name);
    return E{mk(std::move(e))};
}

E cnum(double re, double im) { return E{Scalar{re, im}}; }

E operator+(E a, E b) { return E{mk_binary(Op::Add, a.p, b.p)}; }
E operator-(E a, E b) { return E{mk_binary(Op::Sub, a.p, b.p)}; }
E operator*(E a, E b) { return E{mk_binary(Op::Mul, a.p, b.p)}; }
E operator/(E a, E b) { return E{mk_binary(Op::Div, a.p, b.p)}; }
E operator-(E a) { return E{mk_unary(Op::Neg, a.p)}; }
E powi(E a, int n) {
    Expr e;
    e.op = Op::PowI;
    e.iarg = n;
    e.kids = {a.p};
    return E{mk(std::move(e))};
}
E sq(E a) { return powi(a, 2); }
E sqrt(E a) { return E{mk_unary(Op::Sqrt, a.p)}; }
E exp(E a) { return E{mk_unary(Op::Exp, a.p)}; }
E log(E a) { return E{mk_unary(Op::Log, a.p)}; }
E sin(E a) { return E{mk_unary(Op::Sin, a.p)}; }
E cos(E a) { return E{mk_unary(Op::Cos, a.p)}; }
E tan(E a) { return E{mk_unary(Op::Tan, a.p)}; }
E sinh(E a) { return E{mk_unary(Op::Sinh, a.p)}; }
E cosh(E a) { return E{mk_unary(Op::Cosh, a.p)}; }
E tanh(E a) { return E{mk_unary(Op::Tanh, a.p)}; }
E atan(E a) { return E{mk_unary(Op::Atan, a.p)}; }
E asinh(E a) { return E{mk_unary(Op::Asinh, a.p)}; }
E atanh(E a) { return E{mk_unary(Op::Atanh, a.p)}; }
E ellpi(E phi, E n, E k) {
    Expr e;
    e.op = Op::EllPi;
    e.kids = {phi.p, n.p, k.p};
    return E{mk(std::move(e))};
}
E sn(E z, E k) { return E{mk_binary(Op::Sn, z.p, k.p)}; }
E asn(E w, E k) { return E{mk_binary(Op::Asn, w.p, k.p)}; }
E symprod(E a, E b) { return E{mk_binary(Op::Sym, a.p, b.p)}; }

void collect_terms(const ExprPtr& e, double sign, std::vector<std::pair<double, ExprPtr>>& out) {
    switch (e->op) {
    case Op::Add:
        collect_terms(e->kids[0], sign, out);
        collect_terms(e->kids[1], sign, out);
        return;
    case Op::Sub:
        collect_terms(e->kids[0], sign, out);
        collect_terms(e->kids[1], -sign, out);
        return;
    case Op::Neg:
        collect_terms(e->kids[0], -sign, out);
        return;
    default:
        out.emplace_back(sign, e);
    }
}

ExprPtr expr_substitute(const ExprPtr& e, const std::map<int, ExprPtr>& var_subst,
                        const std::map<std::string, ExprPtr>& param_subst) {
    if (e->op == Op::Var) {
        auto it = var_subst.find(e->iarg);
        return it != var_subst.end() ? it->second : e;
    }
    if (e->op == Op::Param) {
        auto it = param_subst.find(e->pname);
        return it != param_subst.end() ? it->second : e;
    }
    bool changed = false;
    std::vector<ExprPtr> kids;
    kids.reserve(e->kids.size());
    for (const auto& k : e->kids) {
        ExprPtr s = expr_substitute(k, var_subst, param_subst);
        changed = changed || s.get() != k.get();
        kids.push_back(std::move(s));
    }
    if (!changed) return e;
    Expr r = *e;
    r.kids = std::move(kids);
    return mk(std::move(r));
}

ExprPtr expr_derivative(const ExprPtr& e, int slot) {
    if (!expr_uses_var(e, slot)) return E(0.0).p;
    const E a = e->kids.empty() ? E{} : E{e->kids[0]};
    const E b = e->kids.size() > 1 ? E{e->kids[1]} : E{};
    const E da = a.p ? E{expr_derivative(a.p, slot)} : E{};
    const E db = b.p ? E{expr_derivative(b.p, slot)} : E{};
    switch (e->op) {
    case Op::Var: return E(1.0).p;
    case Op::Add: return (da + db).p;
    case Op::Sub: return (da - db).p;
    case Op::Neg: return (-da).p;
    case Op::Mul: return (da * b + a * db).p;
    case Op::Sym: return (2.0 * (da * b + a * db)).p; // commuting carriers: 2ab
    case Op::Div: return ((da * b - a * db) / sq(b)).p;
    case Op::PowI:
        return (double(e->iarg) * powi(a, e->iarg - 1) * da).p;
    case Op::Sqrt: return (da / (2.0 * sqrt(a))).p;
    case Op::Exp: return (da * exp(a)).p;
    case Op::Log: return (da / a).p;
    case Op::Sin: return (da * cos(a)).p;
    case Op::Cos: return (-da * sin(a)).p;
    case Op::Tan: return (da * (1.0 + sq(tan(a)))).p;
    case Op::Sinh: return (da * cosh(a)).p;
    case Op::Cosh: return (da * sinh(a)).p;
    case Op::Tanh: return (da * (1.0 - sq(tanh(a)))).p;
    case Op::Atan: return (da / (1.0 + sq(a))).p;
    case Op::Asinh: return (da / sqrt(1.0 + sq(a))).p;
    case Op::Atanh: return (da / (1.0 - sq(a))).p;
    default:
        throw Error("expr_derivative: unsupported node");
    }
}

bool expr_uses_param(const ExprPtr& e, const std::string& name) {
    if (e->op == Op::Param && e->pname == name) return true;
    for (const auto& k : e->kids)
        if (expr_uses_param(k, name)) return true;
    return false;
}

bool expr_uses_var(const ExprPtr& e, int slot) {
    if (e->op == Op::Var && e->iarg == slot) return true;
    for (const auto& k : e->kids)
        if (expr_uses_var(k, slot)) return true;
    return false;
}

int expr_max_var(const ExprPtr& e) {
    int m = e->op == Op::Var ? e->iarg : -1;
    for (const auto& k : e->kids) m = std::max(m, expr_max_var(k));
    return m;
}

// ---- serialization --------------------------------------------------------

namespace {

void print_rec(std::string& out, const Expr& e) {
    switch (e.op) {
    case Op::Const:
        if (e.cval.imag() == 0.0) {
            fmt_double(out, e.cval.real());
        } else {
            out += "(c ";
            fmt_double(out, e.cval.real());
            out += ' ';
            fmt_double(out, e.cval.imag());
            out += ')';
        }
        return;
    case Op::Param:
        out += '$';
        out += e.pname;
        return;
    case Op::Var:
        out += '@';
        out += std::to_string(e.iarg);
        return;
    case Op::PowI:
        out += "(powi ";
        print_rec(out, *e.kids[0]);
        out += ' ';
        out += std::to_string(e.iarg);
        out += ')';
        return;
    default: {
        const char* name = op_name(e.op);
        out += '(';
        out += name;
        for (const auto& k : e.kids) {
            out += ' ';
            print_rec(out, *k);
        }
        out += ')';
    }
    }
}

void skip_ws(const char*& s) {
    while (*s && std::isspace(static_cast<unsigned char>(*s))) ++s;
}

std::string read_atom(const char*& s) {
    const char* start = s;
    while (*s && !std::isspace(static_cast<unsigned char>(*s)) && *s != '(' && *s != ')') ++s;
    return std::string(start, s);
}

double parse_number(const std::string& tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw CatalogFormatError("bad numeric literal: " + tok);
    return v;
}

} // namespace

std::string expr_to_text(const ExprPtr& e) {
    std::string out;
    print_rec(out, *e);
    return out;
}

ExprPtr expr_parse(const char*& s) {
    skip_ws(s);
    if (*s == '\0') throw CatalogFormatError("unexpected end of expression");
    if (*s == '$') {
        ++s;
        Expr e;
        e.op = Op::Param;
        e.pname = read_atom(s);
        if (e.pname.empty()) throw CatalogFormatError("empty parameter name");
        return mk(std::move(e));
    }
    if (*s == '@') {
        ++s;
        Expr e;
        e.op = Op::Var;
        e.iarg = int(parse_number(read_atom(s)));
        return mk(std::move(e));
    }
    if (*s != '(') {
        Expr e;
        e.op = Op::Const;
        e.cval = parse_number(read_atom(s));
        return mk(std::move(e));
    }
    ++s; // consume '('
    skip_ws(s);
    const std::string head = read_atom(s);
    Expr e;
    if (head == "c") {
        e.op = Op::Const;
        skip_ws(s);
        const double re = parse_number(read_atom(s));
        skip_ws(s);
        const double im = parse_number(read_atom(s));
        e.cval = Scalar{re, im};
    } else if (head == "powi") {
        e.op = Op::PowI;
        e.kids.push_back(expr_parse(s));
        skip_ws(s);
        e.iarg = int(parse_number(read_atom(s)));
    } else {
        static const std::pair<const char*, Op> table[] = {
            {"add", Op::Add},     {"sub", Op::Sub},   {"mul", Op::Mul},
            {"div", Op::Div},     {"neg", Op::Neg},   {"sqrt", Op::Sqrt},
            {"exp", Op::Exp},     {"log", Op::Log},   {"sin", Op::Sin},
            {"cos", Op::Cos},     {"tan", Op::Tan},   {"sinh", Op::Sinh},
            {"cosh", Op::Cosh},   {"tanh", Op::Tanh}, {"atan", Op::Atan},
            {"asinh", Op::Asinh}, {"atanh", Op::Atanh}, {"ellpi", Op::EllPi},
            {"sn", Op::Sn},       {"asn", Op::Asn},     {"sym", Op::Sym},
        };
        bool found = false;
        for (const auto& [name, op] : table) {
            if (head == name) {
                e.op = op;
                found = true;
                break;
            }
        }
        if (!found) throw CatalogFormatError("unknown expression head: " + head);
        skip_ws(s);
        while (*s != ')') {
            e.kids.push_back(expr_parse(s));
            skip_ws(s);
            if (*s == '\0') throw CatalogFormatError("unterminated expression list");
        }
    }
    skip_ws(s);
    if (*s != ')') throw CatalogFormatError("expected ')' after " + head);
    ++s;
    return mk(std::move(e));
}

ExprPtr expr_from_text(const std::string& text) {
    const char* s = text.c_str();
    ExprPtr e = expr_parse(s);
    skip_ws(s);
    if (*s != '\0') throw CatalogFormatError("trailing characters after expression");
    return e;
}

} // namespace supint
