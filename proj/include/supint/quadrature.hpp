#pragma once

#include <functional>

#include "supint/scalar.hpp"

namespace supint {

/// Adaptive Gauss–Kronrod (7–15) quadrature of a complex-valued function
/// over the real interval [a, b].
Scalar gauss_kronrod(const std::function<Scalar(double)>& f, double a, double b,
                     double tol = 1e-12, int max_depth = 24);

/// Incomplete elliptic integral of the third kind,
///   Pi(phi, n, k) = ∫_0^phi dθ / ((1 − n sin²θ) sqrt(1 − k² sin²θ)),
/// evaluated by quadrature along the straight segment from 0 to phi
/// (phi, n, k may be complex).
Scalar ellint_pi(Scalar phi, Scalar n, Scalar k);

/// Real Jacobi elliptic functions sn, cn, dn of a real argument, modulus
/// k in (0,1): the incomplete first-kind integral is inverted on the
/// fundamental strip and extended by (quasi-)periodicity.
void jacobi_sncndn_real(double u, double k, double& sn, double& cn, double& dn);

/// Jacobi elliptic functions of a complex argument (real modulus k in (0,1)),
/// assembled from the real functions of the argument's parts.
void jacobi_sncndn(Scalar z, double k, Scalar& sn, Scalar& cn, Scalar& dn);

/// sn of a complex argument, real modulus.
Scalar jacobi_sn(Scalar z, double k);

/// Principal inverse of sn: ∫_0^w dt / sqrt((1 − t²)(1 − k² t²)) along the
/// straight segment from 0 to w (w may be complex; modulus real, in (0,1)).
Scalar jacobi_asn(Scalar w, double k);

} // namespace supint
