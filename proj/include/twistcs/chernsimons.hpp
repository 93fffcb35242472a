#pragma once

#include "twistcs/geom.hpp"

namespace twistcs {

// Exact value of the lens-space term (6n+4)/(8n+2) reduced mod 1 into [0, 1).
BigRat lens_cs(long n);

// Composite Simpson rule for samples f[0..N] of a function on [a, b] at
// equally spaced points. N = f.size() - 1 must be even and >= 2, and a < b;
// otherwise throws std::invalid_argument.
double simpson(const std::vector<double>& f, double a, double b);

struct QuadratureSpec {
    long intervals_h = 10000;  // subintervals on [alpha_lo, alpha0]
    long intervals_s = 10000;  // subintervals on [alpha0, pi]
};

struct CsValue {
    double raw = 0.0;       // value before modular reduction
    BigRat modulus;         // the defined-mod-modulus of this invariant
    double canonical = 0.0; // raw reduced into [0, modulus)
};

// Reduce x into [0, m). Values within 1e-12 of the upper boundary snap to 0.
double reduce_mod(double x, const BigRat& modulus);

// Full sampled pipeline for one lower cone angle: the branch track plus the
// unwrapped integrand samples on both sides and the assembled raw value.
// Useful for dumping and debugging; the cs_* entry points reduce its raw.
struct CsSamples {
    BranchTrack track;
    std::vector<double> fh;  // integrand on track.grid_h (hyperbolic side)
    std::vector<double> fs;  // integrand on track.grid_s (spherical side)
    double raw = 0.0;
};

CsSamples cs_samples(long n, double alpha_lo, const QuadratureSpec& quad = {},
                     const GeomConfig& cfg = {});

// Chern-Simons invariant of the cone-manifold / orbifold with cone angle
// 2*pi/k along the twist knot T_2n, defined mod 1/k (k even) or 1/(2k)
// (k odd). Throws NonHyperbolicError when the cone angle is >= alpha0 and
// std::invalid_argument for k <= 0 or invalid quadrature specs.
CsValue cs_orbifold(long n, long k, const QuadratureSpec& quad = {},
                    const GeomConfig& cfg = {});

// Chern-Simons invariant of the k-fold cyclic cover branched over T_2n:
// k times the orbifold raw value, defined mod 1 (k even) or 1/2 (k odd).
CsValue cs_cyclic_cover(long n, long k, const QuadratureSpec& quad = {},
                        const GeomConfig& cfg = {});

// Chern-Simons invariant of the hyperbolic knot complement itself
// (cone angle 0), defined mod 1/2.
CsValue cs_knot(long n, const QuadratureSpec& quad = {},
                const GeomConfig& cfg = {});

}  // namespace twistcs
