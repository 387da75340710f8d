#pragma once

#include <array>
#include <cassert>
#include <vector>

#include "supint/errors.hpp"
#include "supint/scalar.hpp"

namespace supint {

/// Truncated bivariate Taylor expansion at a spatial base point.
///
/// Coefficient c(a,b) stores (d^{a+b} f / du^a dv^b) / (a! b!), i.e. the
/// factorials are folded in, so multiplication is a truncated Cauchy
/// product and differentiation is an index shift.
class Jet {
public:
    static constexpr int kMaxOrder = 8;

    Jet() = default;
    Jet(std::array<Scalar, 2> base, int order)
        : base_(base), order_(order), c_(size_for(order)) {
        assert(order >= 0 && order <= kMaxOrder);
    }

    static Jet constant(std::array<Scalar, 2> base, int order, Scalar v) {
        Jet j(base, order);
        j.c_[0] = v;
        return j;
    }
    /// The coordinate function u (axis 0) or v (axis 1) as a jet.
    static Jet coordinate(std::array<Scalar, 2> base, int order, int axis) {
        Jet j(base, order);
        j.c_[0] = j.base_[axis];
        if (order >= 1) j.at(axis == 0 ? 1 : 0, axis == 0 ? 0 : 1) = 1.0;
        return j;
    }

    static int size_for(int order) { return (order + 1) * (order + 2) / 2; }
    static int index(int a, int b) {
        const int d = a + b;
        return d * (d + 1) / 2 + b;
    }

    int order() const { return order_; }
    const std::array<Scalar, 2>& base() const { return base_; }
    Scalar value() const { return c_.empty() ? Scalar{} : c_[0]; }

    Scalar& at(int a, int b) { return c_[index(a, b)]; }
    const Scalar& at(int a, int b) const { return c_[index(a, b)]; }
    Scalar coeff_or_zero(int a, int b) const {
        return (a + b <= order_) ? c_[index(a, b)] : Scalar{};
    }

    Jet truncated(int new_order) const {
        assert(new_order <= order_);
        Jet r(base_, new_order);
        for (int i = 0; i < size_for(new_order); ++i) r.c_[i] = c_[i];
        return r;
    }

    /// d^{da+db} / du^{da} dv^{db}; drops the order accordingly.
    Jet derivative(int da, int db) const {
        const int drop = da + db;
        if (order_ < drop) throw InsufficientJetOrder("jet order too low for derivative");
        Jet r(base_, order_ - drop);
        for (int d = 0; d <= r.order_; ++d)
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                // Unfold/refold the factorial normalization.
                double f = 1.0;
                for (int k = 1; k <= da; ++k) f *= double(a + k);
                for (int k = 1; k <= db; ++k) f *= double(b + k);
                r.at(a, b) = c_[index(a + da, b + db)] * f;
            }
        return r;
    }

    Jet operator-() const {
        Jet r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Jet operator+(const Jet& x, const Jet& y) {
        Jet r = x.min_order_copy(y);
        const Jet ys = y.truncated(r.order_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += ys.c_[i];
        return r;
    }
    friend Jet operator-(const Jet& x, const Jet& y) {
        Jet r = x.min_order_copy(y);
        const Jet ys = y.truncated(r.order_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= ys.c_[i];
        return r;
    }
    friend Jet operator*(const Jet& x, const Jet& y) {
        const int ord = x.order_ < y.order_ ? x.order_ : y.order_;
        Jet r(x.base_, ord);
        for (int d1 = 0; d1 <= ord; ++d1)
            for (int b1 = 0; b1 <= d1; ++b1) {
                const int a1 = d1 - b1;
                const Scalar xv = x.c_[index(a1, b1)];
                if (xv == Scalar{}) continue;
                for (int d2 = 0; d1 + d2 <= ord; ++d2)
                    for (int b2 = 0; b2 <= d2; ++b2) {
                        const int a2 = d2 - b2;
                        r.at(a1 + a2, b1 + b2) += xv * y.c_[index(a2, b2)];
                    }
            }
        return r;
    }
    friend Jet operator*(const Scalar& s, const Jet& y) {
        Jet r = y;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend Jet operator/(const Jet& x, const Jet& y);

    /// g∘f where table[k] = g^{(k)}(f.value())/k!.
    /// Horner evaluation in the zero-constant part of f keeps truncation exact.
    friend Jet compose(const Jet& f, const std::array<Scalar, kMaxOrder + 1>& table) {
        Jet h = f;
        h.c_[0] = 0.0;
        Jet r = Jet::constant(f.base_, f.order_, table[f.order_]);
        for (int k = f.order_ - 1; k >= 0; --k) {
            r = r * h;
            r.c_[0] += table[k];
        }
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : c_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    Jet min_order_copy(const Jet& other) const {
        return order_ <= other.order_ ? *this : truncated(other.order_);
    }

    std::array<Scalar, 2> base_{};
    int order_ = 0;
    std::vector<Scalar> c_{Scalar{}};
};

// ---------------------------------------------------------------------------
// Univariate Taylor tables for g(x0 + t): the bridge between elementary
// functions and jet composition.
// ---------------------------------------------------------------------------

using UniSeries = std::array<Scalar, Jet::kMaxOrder + 1>;

namespace unitab {

UniSeries exp_at(Scalar x0);
UniSeries log_at(Scalar x0);
UniSeries sqrt_at(Scalar x0);
UniSeries powi_at(Scalar x0, int m);
UniSeries sin_at(Scalar x0);
UniSeries cos_at(Scalar x0);
UniSeries tan_at(Scalar x0);
UniSeries sinh_at(Scalar x0);
UniSeries cosh_at(Scalar x0);
UniSeries tanh_at(Scalar x0);
UniSeries atan_at(Scalar x0);
UniSeries asinh_at(Scalar x0);
UniSeries atanh_at(Scalar x0);

} // namespace unitab

inline Jet operator/(const Jet& x, const Jet& y) {
    return x * compose(y.truncated(x.order_ < y.order() ? x.order_ : y.order()),
                       unitab::powi_at(y.value(), -1));
}

inline Jet sqrt(const Jet& a) { return compose(a, unitab::sqrt_at(a.value())); }
inline Jet exp(const Jet& a) { return compose(a, unitab::exp_at(a.value())); }
inline Jet log(const Jet& a) { return compose(a, unitab::log_at(a.value())); }
inline Jet sin(const Jet& a) { return compose(a, unitab::sin_at(a.value())); }
inline Jet cos(const Jet& a) { return compose(a, unitab::cos_at(a.value())); }
inline Jet tan(const Jet& a) { return compose(a, unitab::tan_at(a.value())); }
inline Jet sinh(const Jet& a) { return compose(a, unitab::sinh_at(a.value())); }
inline Jet cosh(const Jet& a) { return compose(a, unitab::cosh_at(a.value())); }
inline Jet tanh(const Jet& a) { return compose(a, unitab::tanh_at(a.value())); }
inline Jet atan(const Jet& a) { return compose(a, unitab::atan_at(a.value())); }
inline Jet asinh(const Jet& a) { return compose(a, unitab::asinh_at(a.value())); }
inline Jet atanh(const Jet& a) { return compose(a, unitab::atanh_at(a.value())); }

inline Scalar value_of(const Jet& j) { return j.value(); }

} // namespace supint
