#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "twistcs/roots.hpp"
#include "twistcs/twistgen.hpp"
#include "twistcs/unipoly.hpp"

namespace twistcs {

// Requested structure does not exist (cone angle outside the hyperbolic
// range, or a non-hyperbolic twist parameter).
class NonHyperbolicError : public std::domain_error {
    using std::domain_error::domain_error;
};

// No discriminant candidate passed the collision test.
class GeometricError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Branch continuation became ambiguous; refine the grid.
class TrackingError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cone angle in (0, pi] with the derived quantities of the CS integrand.
struct ConeAngle {
    double alpha;
    explicit ConeAngle(double a) : alpha(a) {
        if (!(a > 0.0) || !(a <= M_PI + 1e-15))
            throw std::invalid_argument("ConeAngle: alpha must be in (0, pi]");
    }
    double B() const { return std::cos(alpha / 2.0); }
    double A() const { return 1.0 / std::tan(alpha / 2.0); }
    std::complex<double> M() const {
        return std::polar(1.0, alpha / 2.0);
    }
};

// Specialized polynomial p(V) = P_2n(V, cos(alpha/2)): complex double
// coefficients, index = degree in V.
using UniPolyC = std::vector<std::complex<double>>;

struct GeomConfig {
    double collision_eps = 1e-4;  // offset for the collision test
    double alpha_tol = 1e-12;     // bisection refinement target (radians)
    int sweep_points = 4096;      // exact sign-sweep resolution over B in (0, 1/2]
    double jump_bound = 0.5;      // max chordal step for branch matching
};

// Coefficients of P_2n evaluated at B = cos(alpha/2) through the exact
// s = B^2 - 1 = -sin^2(alpha/2) change of basis (P_2n has only even powers
// of B), which keeps full relative accuracy as alpha -> 0. Valid for all n.
UniPolyC specialize(long n, ConeAngle a);

// The exact discriminant of P_2n over V, as a primitive integer polynomial
// in B (ascending). Memoized per n; thread-safe.
const std::vector<BigInt>& pdist_discriminant_b(long n);

struct Alpha0Result {
    double alpha0 = 0.0;            // selected Euclidean angle
    double B0 = 0.0;                // cos(alpha0 / 2)
    double V_star = 0.0;            // real double root of P at the collision
    std::vector<double> candidates; // all disc roots in B∈(0,1/2], as alpha, ascending
    std::vector<double> passing;    // candidates passing the collision test, ascending
};

// Euclidean cone angle: isolate the real roots of the exact discriminant in
// B in (0, 1/2] by exact sign bisection, convert via alpha = 2*arccos(B),
// keep the candidates where a nonreal conjugate pair of roots of
// specialize(n, alpha - eps) collides into a real double root, and select
// the largest passing candidate. Memoized per n (default config only).
// Throws NonHyperbolicError for n in {0, -1}; GeometricError if no candidate
// passes.
Alpha0Result find_alpha0(long n, const GeomConfig& cfg = {});

// The geometric branch V(alpha) on [alpha_lo, alpha0], tracked in W = 1/V
// (the reversed polynomial is well conditioned near the cusp where V -> inf),
// and the two colliding branches V1, V2 on [alpha0, pi].
struct BranchTrack {
    long n = 0;
    double alpha0 = 0.0;
    double alpha_lo = 0.0;
    std::vector<double> grid_h;           // ascending, alpha_lo .. alpha0
    std::vector<std::complex<double>> W;  // geometric branch, Im(1/W) <= 0; W=0 at a cusp sample
    std::vector<double> grid_s;           // ascending, alpha0 .. pi
    std::vector<std::complex<double>> V1, V2;
};

// alpha_lo = 0 is allowed (cusp): the first hyperbolic sample is the exact
// limit W = 0. grid sizes are the interval counts per side.
BranchTrack track_branches(long n, double alpha_lo, long intervals_h,
                           long intervals_s, const GeomConfig& cfg = {});
BranchTrack track_branches(long n, double alpha_lo, long grid_size,
                           const GeomConfig& cfg = {});

// Principal-branch argument of M^{-2} (A + iV)/(A - iV) at cone angle alpha,
// evaluated in W = 1/V coordinates (stable at the cusp) or V coordinates.
double principal_arg_w(double alpha, std::complex<double> w);
double principal_arg_v(double alpha, std::complex<double> v);

// Accumulated winding for the continuous log branch along a sweep: the first
// sample uses the principal value, later samples take the 2*pi translate
// nearest the previous sample. Steps larger than pi/2 abort with
// TrackingError rather than wrapping silently.
struct PhaseState {
    bool started = false;
    double prev = 0.0;
    double step(double raw_principal);
};

// Theorem integrand, phase-continuous along a sweep:
//   one branch  (hyperbolic side): Im 2 log(M^{-2}(A+iV)/(A-iV)), V = 1/w
//   two branches (spherical side): the sum of the two single logs.
double integrand_hyperbolic(ConeAngle a, std::complex<double> w, PhaseState& ps);
double integrand_spherical(ConeAngle a, std::complex<double> v1,
                           std::complex<double> v2, PhaseState& p1,
                           PhaseState& p2);

// Continuous limit of the hyperbolic integrand at the cusp (alpha -> 0): the
// tracked argument tends to pi (longitude holonomy -1), so the doubled
// integrand tends to 2*pi. Used as the closed quadrature endpoint value.
inline double cusp_endpoint_integrand() { return 2.0 * M_PI; }

}  // namespace twistcs
