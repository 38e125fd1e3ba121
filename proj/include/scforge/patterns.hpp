#pragma once

#include "scforge/params.hpp"

namespace scforge {

// The nine protograph patterns able to lift to length-8 cycles, named by the
// dimensions of their submatrix (CNs x VNs).
// P1=2x2 P2=2x3 P3=3x2 P4=2x4 P5=4x2 P6=3x3 P7=3x4 P8=4x3 P9=4x4
inline constexpr int kNumPatterns = 9;

inline int pattern_cn_count(int ell) {
    switch (ell) {
        case 1: case 2: case 4: return 2;
        case 3: case 6: case 7: return 3;
        default: return 4;
    }
}

inline int pattern_vn_count(int ell) {
    switch (ell) {
        case 1: case 3: case 5: return 2;
        case 2: case 6: case 8: return 3;
        default: return 4;
    }
}

inline int pattern_from_dims(int cns, int vns) {
    if (cns == 2) return vns == 2 ? 1 : (vns == 3 ? 2 : 4);
    if (cns == 3) return vns == 2 ? 3 : (vns == 3 ? 6 : 7);
    return vns == 2 ? 5 : (vns == 3 ? 8 : 9);
}

// Distinct cycle-8 candidates per pattern instance.
inline int zeta(int ell) {
    switch (ell) {
        case 1: case 6: case 9: return 1;
        case 7: case 8: return 2;
        case 2: case 3: return 3;
        default: return 6; // 4, 5
    }
}

// Pattern weight in the weighted sum: 1/2 for P1, zeta otherwise.
inline Half beta(int ell) {
    return ell == 1 ? Half::halves(1) : Half::from_int(zeta(ell));
}

// Maximum internal connections (diagonal VN pairs) a pattern can have.
inline int eta(int ell) {
    switch (ell) {
        case 1: case 3: case 5: return 0;
        case 2: case 6: case 8: return 1;
        default: return 2; // 4, 7, 9
    }
}

// Maximum replica span: m+1 except for P8 and P9 which reach 2m+1.
inline int chi(int ell, int m) { return (ell == 8 || ell == 9) ? 2 * m + 1 : m + 1; }

// P5 and P8 need four 1's in a column block; impossible for gamma = 3.
inline bool pattern_exists(int ell, int gamma) {
    return !((ell == 5 || ell == 8) && gamma < 4);
}

} // namespace scforge
