#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "supint/dual.hpp"
#include "supint/errors.hpp"
#include "supint/jet.hpp"
#include "supint/quadrature.hpp"
#include "supint/scalar.hpp"

namespace supint {

/// Closed-form expression tree: the data half of the "catalog is data"
/// design.  One evaluator template serves every numeric carrier (complex
/// values, first/second-order duals, truncated Taylor jets).
enum class Op : std::uint8_t {
    Const,
    Param,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowI,
    Sqrt,
    Exp,
    Log,
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Atan,
    Asinh,
    Atanh,
    EllPi, // incomplete elliptic integral of the third kind Pi(phi, n, k)
    Sn,    // Jacobi elliptic sn(z, k); complex argument, real modulus in (0,1)
    Asn,   // principal inverse of sn: integral form, straight-segment branch
    Sym,   // anticommutator product AB + BA; equals 2*Mul over commuting carriers
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    Op op = Op::Const;
    Scalar cval{};
    int iarg = 0; // Var slot, or PowI exponent
    std::string pname;
    std::vector<ExprPtr> kids;
};

// ---- builder DSL ----------------------------------------------------------

struct E {
    ExprPtr p;
    E() = default;
    E(ExprPtr q) : p(std::move(q)) {}
    E(double x);
    E(Scalar z);
};

E var(int slot);
E param(std::string name);
E cnum(double re, double im);

E operator+(E a, E b);
E operator-(E a, E b);
E operator*(E a, E b);
E operator/(E a, E b);
E operator-(E a);
E powi(E a, int n);
E sq(E a);
E sqrt(E a);
E exp(E a);
E log(E a);
E sin(E a);
E cos(E a);
E tan(E a);
E sinh(E a);
E cosh(E a);
E tanh(E a);
E atan(E a);
E asinh(E a);
E atanh(E a);
E ellpi(E phi, E n, E k);
E sn(E z, E k);
E asn(E w, E k);
E symprod(E a, E b);

// ---- carrier lifting ------------------------------------------------------

inline Scalar lift_like(const Scalar&, Scalar c) { return c; }
template <class T, int N>
Dual<T, N> lift_like(const Dual<T, N>& proto, Scalar c) {
    Dual<T, N> r;
    r.v = lift_like(proto.v, c);
    return r;
}
inline Jet lift_like(const Jet& proto, Scalar c) {
    return Jet::constant(proto.base(), proto.order(), c);
}

namespace detail {

template <class S>
struct IsFirstOrderDual : std::false_type {};
template <int N>
struct IsFirstOrderDual<Dual<Scalar, N>> : std::true_type {};

template <class S>
S eval_ellpi(const S& phi, const S& n, const S& k) {
    if constexpr (std::is_same_v<S, Scalar>) {
        return ellint_pi(phi, n, k);
    } else if constexpr (IsFirstOrderDual<S>::value) {
        for (const auto& dn : n.d)
            if (dn != Scalar{}) throw Error("elliptic-integral characteristic must be constant");
        for (const auto& dk : k.d)
            if (dk != Scalar{}) throw Error("elliptic-integral modulus must be constant");
        const Scalar f0 = ellint_pi(phi.v, n.v, k.v);
        const Scalar s = std::sin(phi.v);
        const Scalar f1 = 1.0 / ((1.0 - n.v * s * s) * std::sqrt(1.0 - k.v * k.v * s * s));
        return chain(phi, f0, f1);
    } else {
        (void)phi;
        (void)n;
        (void)k;
        throw Error("elliptic-integral node supports value/first-derivative carriers only");
    }
}

inline double real_modulus(const Scalar& k) {
    if (k.imag() != 0.0) throw Error("jacobi modulus must be real");
    return k.real();
}

template <class S>
S eval_sn(const S& z, const S& k) {
    if constexpr (std::is_same_v<S, Scalar>) {
        return jacobi_sn(z, real_modulus(k));
    } else if constexpr (IsFirstOrderDual<S>::value) {
        for (const auto& dk : k.d)
            if (dk != Scalar{}) throw Error("jacobi modulus must be constant");
        Scalar s, c, d;
        jacobi_sncndn(z.v, real_modulus(k.v), s, c, d);
        return chain(z, s, c * d); // d/dz sn = cn dn
    } else {
        (void)z;
        (void)k;
        throw Error("jacobi-sn node supports value/first-derivative carriers only");
    }
}

template <class S>
S eval_asn(const S& w, const S& k) {
    if constexpr (std::is_same_v<S, Scalar>) {
        return jacobi_asn(w, real_modulus(k));
    } else if constexpr (IsFirstOrderDual<S>::value) {
        for (const auto& dk : k.d)
            if (dk != Scalar{}) throw Error("jacobi modulus must be constant");
        const double km = real_modulus(k.v);
        const Scalar f0 = jacobi_asn(w.v, km);
        const Scalar f1 =
            1.0 / std::sqrt((1.0 - w.v * w.v) * (1.0 - km * km * w.v * w.v));
        return chain(w, f0, f1);
    } else {
        (void)w;
        (void)k;
        throw Error("inverse-sn node supports value/first-derivative carriers only");
    }
}

} // namespace detail

/// Evaluate over any carrier.  `vars` must be non-empty; its first element
/// provides the shape (jet order/base, dual seeding) for lifted constants.
template <class S>
S eval_expr(const Expr& e, std::span<const S> vars, const ParamMap& params) {
    switch (e.op) {
    case Op::Const:
        return lift_like(vars[0], e.cval);
    case Op::Param: {
        auto it = params.find(e.pname);
        if (it == params.end()) throw MissingParam("parameter not bound: " + e.pname);
        return lift_like(vars[0], it->second);
    }
    case Op::Var:
        if (e.iarg < 0 || size_t(e.iarg) >= vars.size())
            throw Error("variable slot out of range");
        return vars[e.iarg];
    case Op::Add:
        return eval_expr(*e.kids[0], vars, params) + eval_expr(*e.kids[1], vars, params);
    case Op::Sub:
        return eval_expr(*e.kids[0], vars, params) - eval_expr(*e.kids[1], vars, params);
    case Op::Mul:
        return eval_expr(*e.kids[0], vars, params) * eval_expr(*e.kids[1], vars, params);
    case Op::Sym: {
        const S ab = eval_expr(*e.kids[0], vars, params) *
                     eval_expr(*e.kids[1], vars, params);
        return ab + ab;
    }
    case Op::Div:
        return eval_expr(*e.kids[0], vars, params) / eval_expr(*e.kids[1], vars, params);
    case Op::Neg:
        return -eval_expr(*e.kids[0], vars, params);
    case Op::PowI:
        return powi_from_one(lift_like(vars[0], Scalar{1.0}),
                             eval_expr(*e.kids[0], vars, params), e.iarg);
    case Op::Sqrt:
        return sqrt(eval_expr(*e.kids[0], vars, params));
    case Op::Exp:
        return exp(eval_expr(*e.kids[0], vars, params));
    case Op::Log:
        return log(eval_expr(*e.kids[0], vars, params));
    case Op::Sin:
        return sin(eval_expr(*e.kids[0], vars, params));
    case Op::Cos:
        return cos(eval_expr(*e.kids[0], vars, params));
    case Op::Tan:
        return tan(eval_expr(*e.kids[0], vars, params));
    case Op::Sinh:
        return sinh(eval_expr(*e.kids[0], vars, params));
    case Op::Cosh:
        return cosh(eval_expr(*e.kids[0], vars, params));
    case Op::Tanh:
        return tanh(eval_expr(*e.kids[0], vars, params));
    case Op::Atan:
        return atan(eval_expr(*e.kids[0], vars, params));
    case Op::Asinh:
        return asinh(eval_expr(*e.kids[0], vars, params));
    case Op::Atanh:
        return atanh(eval_expr(*e.kids[0], vars, params));
    case Op::EllPi:
        return detail::eval_ellpi(eval_expr(*e.kids[0], vars, params),
                                  eval_expr(*e.kids[1], vars, params),
                                  eval_expr(*e.kids[2], vars, params));
    case Op::Sn:
        return detail::eval_sn(eval_expr(*e.kids[0], vars, params),
                               eval_expr(*e.kids[1], vars, params));
    case Op::Asn:
        return detail::eval_asn(eval_expr(*e.kids[0], vars, params),
                                eval_expr(*e.kids[1], vars, params));
    }
    throw Error("unhandled expression node");
}

// ---- structural utilities -------------------------------------------------

/// Splits the top-level +/- chain into signed additive terms (for residual
/// scale normalization).
void collect_terms(const ExprPtr& e, double sign, std::vector<std::pair<double, ExprPtr>>& out);

/// Substitute variables and/or parameters by expressions.
ExprPtr expr_substitute(const ExprPtr& e, const std::map<int, ExprPtr>& var_subst,
                        const std::map<std::string, ExprPtr>& param_subst);

/// Symbolic derivative with respect to a variable slot (for polynomials over
/// generator values and the closure relations of the quadratic algebras).
ExprPtr expr_derivative(const ExprPtr& e, int slot);

/// True if any node references the given parameter name.
bool expr_uses_param(const ExprPtr& e, const std::string& name);
/// True if any node references the given variable slot.
bool expr_uses_var(const ExprPtr& e, int slot);
/// Maximum variable slot referenced, or -1.
int expr_max_var(const ExprPtr& e);

/// Canonical s-expression text (deterministic bytes; %.17g numbers).
std::string expr_to_text(const ExprPtr& e);
ExprPtr expr_from_text(const std::string& text);
ExprPtr expr_parse(const char*& cursor); // advances cursor past one expression

} // namespace supint
