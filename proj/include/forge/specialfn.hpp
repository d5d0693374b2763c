#pragma once

// Complete elliptic integral K(k) and the Jacobi elliptic triple
// (sn, cn, dn)(u, k).
//
// Convention: every interface here takes the elliptic MODULUS k, not the
// parameter m = k^2. The two are easy to confuse because much of the
// literature writes the same letter for both; here K(k) is
// ∫_0^{π/2} dθ/sqrt(1 - k² sin²θ).

namespace forge {

// Quarter period K(k) by arithmetic-geometric-mean iteration.
// Requires 0 <= k < 1; throws std::domain_error otherwise (K diverges
// logarithmically as k -> 1).
double complete_elliptic_K(double k);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

// (sn, cn, dn)(u, k) by the descending Landen/AGM recursion, ~1e-15 absolute
// for moderate |u|. Accepts the degenerate limits k = 0 (circular) and k = 1
// (hyperbolic) exactly. Requires finite u and 0 <= k <= 1.
JacobiTriple jacobi_elliptic(double u, double k);

}  // namespace forge
