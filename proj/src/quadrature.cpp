#include "supint/quadrature.hpp"

#include <cmath>
#include <complex>

#include "supint/errors.hpp"

namespace supint {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
constexpr double xk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkResult {
    Scalar integral;
    double err;
};

GkResult gk15(const std::function<Scalar(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    Scalar resk{}, resg{};
    for (int i = 0; i < 8; ++i) {
        if (xk[i] == 0.0) {
            const Scalar fc = f(c);
            resk += wk[i] * fc;
            resg += wg[3] * fc;
            continue;
        }
        const Scalar fl = f(c - h * xk[i]);
        const Scalar fr = f(c + h * xk[i]);
        resk += wk[i] * (fl + fr);
        if (i % 2 == 1) resg += wg[i / 2] * (fl + fr);
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

Scalar adaptive(const std::function<Scalar(double)>& f, double a, double b, double tol,
                int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.err <= tol || depth <= 0) return r.integral;
    const double m = 0.5 * (a + b);
    return adaptive(f, a, m, 0.5 * tol, depth - 1) + adaptive(f, m, b, 0.5 * tol, depth - 1);
}

} // namespace

Scalar gauss_kronrod(const std::function<Scalar(double)>& f, double a, double b, double tol,
                     int max_depth) {
    return adaptive(f, a, b, tol, max_depth);
}

Scalar ellint_pi(Scalar phi, Scalar n, Scalar k) {
    // Integrate along theta = t * phi, t in [0,1].
    const auto integrand = [&](double t) {
        const Scalar th = t * phi;
        const Scalar s = std::sin(th);
        const Scalar s2 = s * s;
        const Scalar den = (1.0 - n * s2) * std::sqrt(1.0 - k * k * s2);
        return phi / den;
    };
    const Scalar v = gauss_kronrod(integrand, 0.0, 1.0, 1e-12);
    if (!finite(v)) throw Error("elliptic integral quadrature diverged");
    return v;
}

void jacobi_sncndn_real(double u, double k, double& sn, double& cn, double& dn) {
    if (!(k > 0.0 && k < 1.0)) throw Error("jacobi modulus must lie in (0,1)");
    const double K = std::comp_ellint_1(k);
    double r = std::remainder(u, 4.0 * K); // sn, cn, dn all have period 4K
    double ssn = 1.0;                      // sn odd, cn/dn even
    if (r < 0.0) {
        r = -r;
        ssn = -1.0;
    }
    double scn = 1.0; // sn(2K-x) = sn x, cn(2K-x) = -cn x, dn(2K-x) = dn x
    if (r > K) {
        r = 2.0 * K - r;
        scn = -1.0;
    }
    // Invert F(phi, k) = r for phi in [0, pi/2] by safeguarded Newton.
    const double half_pi = 1.5707963267948966;
    double lo = 0.0, hi = half_pi;
    double phi = half_pi * r / K;
    for (int it = 0; it < 100; ++it) {
        const double s = std::sin(phi);
        const double f = std::ellint_1(k, phi) - r;
        if (f > 0.0)
            hi = phi;
        else
            lo = phi;
        double next = phi - f * std::sqrt(1.0 - k * k * s * s);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - phi) <= 1e-16 * (1.0 + std::abs(phi));
        phi = next;
        if (done) break;
    }
    const double s = std::sin(phi);
    sn = ssn * s;
    cn = scn * std::cos(phi);
    dn = std::sqrt(1.0 - k * k * s * s);
}

void jacobi_sncndn(Scalar z, double k, Scalar& sn, Scalar& cn, Scalar& dn) {
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    double s, c, d, s1, c1, d1;
    jacobi_sncndn_real(z.real(), k, s, c, d);
    jacobi_sncndn_real(z.imag(), kp, s1, c1, d1);
    const double den = c1 * c1 + k * k * s * s * s1 * s1;
    if (den == 0.0) throw Error("jacobi elliptic function pole");
    sn = Scalar{s * d1, c * d * s1 * c1} / den;
    cn = Scalar{c * c1, -s * d * s1 * d1} / den;
    dn = Scalar{d * c1 * d1, -k * k * s * c * s1} / den;
}

Scalar jacobi_sn(Scalar z, double k) {
    Scalar sn, cn, dn;
    jacobi_sncndn(z, k, sn, cn, dn);
    return sn;
}

Scalar jacobi_asn(Scalar w, double k) {
    if (!(k > 0.0 && k < 1.0)) throw Error("jacobi modulus must lie in (0,1)");
    // Integrate along t = s * w, s in [0,1].
    const auto integrand = [&](double s) {
        const Scalar t = s * w;
        return w / std::sqrt((1.0 - t * t) * (1.0 - k * k * t * t));
    };
    const Scalar v = gauss_kronrod(integrand, 0.0, 1.0, 1e-12);
    if (!finite(v)) throw Error("inverse-sn quadrature diverged");
    return v;
}

} // namespace supint
