#pragma once

#include <cstddef>

// Embedded reference values (see data/*.csv and tools/gen_golden.py).
// Keeping them compiled in makes validation independent of the working
// directory at runtime.
namespace twistcs::golden {

struct OrbifoldRow {
    long n;
    long k;
    double cs_orbifold;  // canonical value mod 1/k (k even) or 1/(2k) (k odd)
    double cs_cover;     // canonical value mod 1 (k even) or 1/2 (k odd)
};

struct CuspedRow {
    long n;
    double alpha0;   // Euclidean cone angle
    double cs_knot;  // canonical value mod 1/2
};

extern const OrbifoldRow kOrbifoldTable[];
extern const std::size_t kOrbifoldTableSize;
extern const CuspedRow kCuspedTable[];
extern const std::size_t kCuspedTableSize;

}  // namespace twistcs::golden
