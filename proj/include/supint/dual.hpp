#pragma once

#include <array>
#include <cstddef>

#include "supint/scalar.hpp"

namespace supint {

/// Forward-mode dual number with N independent derivative slots.
/// Nesting (Dual<Dual<Scalar,N>,N>) yields exact second derivatives;
/// all elementary functions are written in terms of the base carrier so
/// nesting works by recursion.
template <class T, int N>
struct Dual {
    T v{};
    std::array<T, N> d{};

    Dual() = default;
    Dual(const T& value) : v(value) {}
    Dual(const T& value, int slot) : v(value) { d[slot] = T{1.0}; }

    static Dual constant(const Scalar& c) { return Dual(T{c}); }

    Dual operator-() const {
        Dual r;
        r.v = -v;
        for (int i = 0; i < N; ++i) r.d[i] = -d[i];
        return r;
    }

    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v + b.v;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v - b.v;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v * b.v;
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
        return r;
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        Dual r;
        r.v = a.v / b.v;
        const T bb = b.v * b.v;
        for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / bb;
        return r;
    }

    /// f(a) with given value and first derivative at a.v (chain rule).
    friend Dual chain(const Dual& a, const T& f0, const T& f1) {
        Dual r;
        r.v = f0;
        for (int i = 0; i < N; ++i) r.d[i] = f1 * a.d[i];
        return r;
    }
};

using std::asinh;
using std::atan;
using std::atanh;
using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tan;
using std::tanh;

template <class T, int N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
    const T s = sqrt(a.v);
    return chain(a, s, T{0.5} / s);
}
template <class T, int N>
Dual<T, N> exp(const Dual<T, N>& a) {
    const T e = exp(a.v);
    return chain(a, e, e);
}
template <class T, int N>
Dual<T, N> log(const Dual<T, N>& a) {
    return chain(a, log(a.v), T{1.0} / a.v);
}
template <class T, int N>
Dual<T, N> sin(const Dual<T, N>& a) {
    return chain(a, sin(a.v), cos(a.v));
}
template <class T, int N>
Dual<T, N> cos(const Dual<T, N>& a) {
    return chain(a, cos(a.v), -sin(a.v));
}
template <class T, int N>
Dual<T, N> tan(const Dual<T, N>& a) {
    const T t = tan(a.v);
    return chain(a, t, T{1.0} + t * t);
}
template <class T, int N>
Dual<T, N> sinh(const Dual<T, N>& a) {
    return chain(a, sinh(a.v), cosh(a.v));
}
template <class T, int N>
Dual<T, N> cosh(const Dual<T, N>& a) {
    return chain(a, cosh(a.v), sinh(a.v));
}
template <class T, int N>
Dual<T, N> tanh(const Dual<T, N>& a) {
    const T t = tanh(a.v);
    return chain(a, t, T{1.0} - t * t);
}
template <class T, int N>
Dual<T, N> atan(const Dual<T, N>& a) {
    return chain(a, atan(a.v), T{1.0} / (T{1.0} + a.v * a.v));
}
template <class T, int N>
Dual<T, N> asinh(const Dual<T, N>& a) {
    return chain(a, asinh(a.v), T{1.0} / sqrt(T{1.0} + a.v * a.v));
}
template <class T, int N>
Dual<T, N> atanh(const Dual<T, N>& a) {
    return chain(a, atanh(a.v), T{1.0} / (T{1.0} - a.v * a.v));
}

/// Recursive extraction of the underlying complex value.
inline Scalar value_of(const Scalar& s) { return s; }
template <class T, int N>
Scalar value_of(const Dual<T, N>& a) {
    return value_of(a.v);
}

/// First-order phase-space carrier: derivative slots (q1, q2, p1, p2).
using Dual4 = Dual<Scalar, 4>;
/// Second-order carrier used for bracket-of-bracket checks.
using Dual44 = Dual<Dual4, 4>;
/// Two-slot carrier for position-only Jacobians.
using Dual2 = Dual<Scalar, 2>;

} // namespace supint
