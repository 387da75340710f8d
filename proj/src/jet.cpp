#include "supint/jet.hpp"

#include <complex>

namespace supint {
namespace unitab {
namespace {

constexpr int L = Jet::kMaxOrder + 1;

// Truncated product of univariate series.
UniSeries umul(const UniSeries& a, const UniSeries& b) {
    UniSeries r{};
    for (int i = 0; i < L; ++i) {
        if (a[i] == Scalar{}) continue;
        for (int j = 0; i + j < L; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Reciprocal of a series with nonzero constant term.
UniSeries uinv(const UniSeries& a) {
    UniSeries r{};
    r[0] = 1.0 / a[0];
    for (int k = 1; k < L; ++k) {
        Scalar s{};
        for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r[k] = -s / a[0];
    }
    return r;
}

// Antiderivative with value c0 at t = 0.
UniSeries uintegrate(const UniSeries& a, Scalar c0) {
    UniSeries r{};
    r[0] = c0;
    for (int k = 1; k < L; ++k) r[k] = a[k - 1] / double(k);
    return r;
}

// s(t)^alpha for a series with nonzero constant term, via the binomial
// series in w = s/s0 - 1 (zero constant term, so Horner truncates exactly).
UniSeries upow_alpha(const UniSeries& s, double alpha) {
    const Scalar s0 = s[0];
    UniSeries w{};
    for (int k = 1; k < L; ++k) w[k] = s[k] / s0;
    // binomial coefficients binom(alpha, k)
    std::array<Scalar, L> c{};
    c[0] = 1.0;
    for (int k = 1; k < L; ++k) c[k] = c[k - 1] * Scalar(alpha - double(k - 1)) / double(k);
    UniSeries r{};
    r[0] = c[L - 1];
    for (int k = L - 2; k >= 0; --k) {
        r = umul(r, w);
        r[0] += c[k];
    }
    const Scalar scale = std::pow(s0, Scalar(alpha));
    for (auto& x : r) x *= scale;
    return r;
}

} // namespace

UniSeries exp_at(Scalar x0) {
    UniSeries r{};
    const Scalar e = std::exp(x0);
    double f = 1.0;
    for (int k = 0; k < L; ++k) {
        if (k > 0) f *= double(k);
        r[k] = e / f;
    }
    return r;
}

UniSeries log_at(Scalar x0) {
    UniSeries r{};
    r[0] = std::log(x0);
    Scalar p = 1.0; // x0^{-k}
    for (int k = 1; k < L; ++k) {
        p /= x0;
        r[k] = (k % 2 ? 1.0 : -1.0) * p / double(k);
    }
    return r;
}

UniSeries sqrt_at(Scalar x0) {
    UniSeries r{};
    Scalar c = std::sqrt(x0); // binom(1/2,k) x0^{1/2-k}
    r[0] = c;
    for (int k = 1; k < L; ++k) {
        c *= Scalar(0.5 - double(k - 1)) / double(k) / x0;
        r[k] = c;
    }
    return r;
}

UniSeries powi_at(Scalar x0, int m) {
    UniSeries r{};
    Scalar c = powi_from_one(Scalar{1.0}, x0, m);
    r[0] = c;
    for (int k = 1; k < L; ++k) {
        c *= Scalar(double(m) - double(k - 1)) / double(k) / x0;
        r[k] = c;
    }
    return r;
}

UniSeries sin_at(Scalar x0) {
    UniSeries r{};
    const Scalar s = std::sin(x0), c = std::cos(x0);
    const Scalar cycle[4] = {s, c, -s, -c};
    double f = 1.0;
    for (int k = 0; k < L; ++k) {
        if (k > 0) f *= double(k);
        r[k] = cycle[k % 4] / f;
    }
    return r;
}

UniSeries cos_at(Scalar x0) {
    UniSeries r{};
    const Scalar s = std::sin(x0), c = std::cos(x0);
    const Scalar cycle[4] = {c, -s, -c, s};
    double f = 1.0;
    for (int k = 0; k < L; ++k) {
        if (k > 0) f *= double(k);
        r[k] = cycle[k % 4] / f;
    }
    return r;
}

UniSeries tan_at(Scalar x0) { return umul(sin_at(x0), uinv(cos_at(x0))); }

UniSeries sinh_at(Scalar x0) {
    UniSeries r{};
    const Scalar s = std::sinh(x0), c = std::cosh(x0);
    double f = 1.0;
    for (int k = 0; k < L; ++k) {
        if (k > 0) f *= double(k);
        r[k] = (k % 2 ? c : s) / f;
    }
    return r;
}

UniSeries cosh_at(Scalar x0) {
    UniSeries r{};
    const Scalar s = std::sinh(x0), c = std::cosh(x0);
    double f = 1.0;
    for (int k = 0; k < L; ++k) {
        if (k > 0) f *= double(k);
        r[k] = (k % 2 ? s : c) / f;
    }
    return r;
}

UniSeries tanh_at(Scalar x0) { return umul(sinh_at(x0), uinv(cosh_at(x0))); }

UniSeries atan_at(Scalar x0) {
    UniSeries den{}; // 1 + (x0 + t)^2
    den[0] = 1.0 + x0 * x0;
    den[1] = 2.0 * x0;
    den[2] = 1.0;
    return uintegrate(uinv(den), std::atan(x0));
}

UniSeries asinh_at(Scalar x0) {
    UniSeries q{}; // 1 + (x0 + t)^2
    q[0] = 1.0 + x0 * x0;
    q[1] = 2.0 * x0;
    q[2] = 1.0;
    return uintegrate(upow_alpha(q, -0.5), std::asinh(x0));
}

UniSeries atanh_at(Scalar x0) {
    UniSeries den{}; // 1 - (x0 + t)^2
    den[0] = 1.0 - x0 * x0;
    den[1] = -2.0 * x0;
    den[2] = -1.0;
    return uintegrate(uinv(den), std::atanh(x0));
}

} // namespace unitab
} // namespace supint
