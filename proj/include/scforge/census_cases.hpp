#pragma once

#include <cstdint>
#include <span>

#include "scforge/params.hpp"

// Per-case instance counts of the nine patterns, as functions of the overlap
// parameters involved. Argument names follow the roles: t12 is the overlap
// count of the CN pair (c1,c2) in the reference replica, e/s/u prefixes mark
// parameters taken from the other replicas of the case.

namespace scforge::cases {

using std::int64_t;

inline int64_t pp(int64_t x) { return x > 0 ? x : 0; } // (x)^+

inline int64_t choose2(int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline int64_t choose3(int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
inline int64_t choose4(int64_t n) { return n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24; }

// ---- P1 (2x2): two c1-c2 overlaps ----
inline int64_t p1_a(int64_t t12) { return choose2(t12); }
inline int64_t p1_b(int64_t t12, int64_t e12) { return t12 * e12; }

// ---- P2 (2x3): three c1-c2 overlaps ----
inline int64_t p2_a(int64_t t12) { return choose3(t12); }
inline int64_t p2_b(int64_t t12, int64_t e12) { return choose2(t12) * e12; }
inline int64_t p2_c(int64_t t12, int64_t e12, int64_t s12) { return t12 * e12 * s12; }

// ---- P3 (3x2): two c1-c2-c3 overlaps ----
inline int64_t p3_a(int64_t t123) { return choose2(t123); }
inline int64_t p3_b(int64_t t123, int64_t e123) { return t123 * e123; }

// ---- P4 (2x4): four c1-c2 overlaps ----
inline int64_t p4_a(int64_t t12) { return choose4(t12); }
inline int64_t p4_b(int64_t t12, int64_t e12) { return choose3(t12) * e12; }
inline int64_t p4_c(int64_t t12, int64_t e12) { return choose2(t12) * choose2(e12); }
inline int64_t p4_d(int64_t t12, int64_t e12, int64_t s12) { return choose2(t12) * e12 * s12; }
inline int64_t p4_e(int64_t t12, int64_t e12, int64_t s12, int64_t u12) { return t12 * e12 * s12 * u12; }

// ---- P5 (4x2): two c1-c2-c3-c4 overlaps ----
inline int64_t p5_a(int64_t t1234) { return choose2(t1234); }
inline int64_t p5_b(int64_t t1234, int64_t e1234) { return t1234 * e1234; }

// ---- P6 (3x3): c1 joins all three VNs; overlaps c1-c2, c1-c3, c1-c2-c3 ----
inline int64_t p6_a(int64_t t12, int64_t t13, int64_t t123) {
    return t123 * pp(t123 - 1) * pp(t13 - 2) + t123 * (t12 - t123) * pp(t13 - 1);
}
inline int64_t p6_b(int64_t t12, int64_t t13, int64_t t123, int64_t e123) {
    return (t123 * pp(t13 - 1) + (t12 - t123) * t13) * e123;
}
inline int64_t p6_c(int64_t t12, int64_t t123, int64_t e13) {
    return t123 * pp(t12 - 1) * e13;
}
inline int64_t p6_d(int64_t t12, int64_t e13, int64_t s123) { return t12 * e13 * s123; }

// ---- P7 (3x4): c1 joins all four VNs; two c1-c2 and two c1-c3 overlaps ----
inline int64_t p7_a(int64_t t12, int64_t t13, int64_t t123) {
    return choose2(t123) * choose2(pp(t13 - 2)) +
           t123 * (t12 - t123) * choose2(pp(t13 - 1)) +
           choose2(t12 - t123) * choose2(t13);
}
inline int64_t p7_b(int64_t t12, int64_t t13, int64_t t123, int64_t e13) {
    return (choose2(t123) * pp(t13 - 2) + t123 * (t12 - t123) * pp(t13 - 1) +
            choose2(t12 - t123) * t13) *
           e13;
}
inline int64_t p7_c(int64_t t12, int64_t e13) { return choose2(t12) * choose2(e13); }
inline int64_t p7_mixed(int64_t t12, int64_t t13, int64_t t123) {
    // one c1-c2 and one c1-c3 overlap chosen in a single replica
    return t123 * pp(t13 - 1) + (t12 - t123) * t13;
}
inline int64_t p7_d(int64_t t12, int64_t t13, int64_t t123, int64_t e12, int64_t e13, int64_t e123) {
    return p7_mixed(t12, t13, t123) * p7_mixed(e12, e13, e123);
}
inline int64_t p7_e(int64_t t12, int64_t e13, int64_t s13) { return choose2(t12) * e13 * s13; }
inline int64_t p7_g(int64_t t12, int64_t t13, int64_t t123, int64_t e12, int64_t s13) {
    return p7_mixed(t12, t13, t123) * e12 * s13;
}
inline int64_t p7_i(int64_t t12, int64_t e12, int64_t s13, int64_t u13) { return t12 * e12 * s13 * u13; }

// ---- P8 (4x3): overlaps c1-c2, c3-c4 (mutually exclusive) and c1-c2-c3-c4 ----
inline int64_t p8_a(int64_t t12, int64_t t34, int64_t t1234) {
    return t1234 * pp(t1234 - 1) * pp(t34 - 2) + t1234 * (t12 - t1234) * pp(t34 - 1);
}
inline int64_t p8_b(int64_t t12, int64_t t34, int64_t t1234, int64_t e1234) {
    return (t1234 * pp(t34 - 1) + (t12 - t1234) * t34) * e1234;
}
inline int64_t p8_c(int64_t t12, int64_t t1234, int64_t e34) {
    return t1234 * pp(t12 - 1) * e34;
}
inline int64_t p8_d(int64_t t12, int64_t e34, int64_t s1234) { return t12 * e34 * s1234; }

// ---- P9 (4x4): cycle c1-c2-c3-c4; overlaps c1-c2, c2-c3, c3-c4, c1-c4 ----
inline int64_t p9_a(int64_t t12, int64_t t23, int64_t t34, int64_t t14, int64_t t123,
                    int64_t t124, int64_t t134, int64_t t234, int64_t t1234) {
    const int64_t a1 =
        t1234 * pp(t1234 - 1) * pp(t134 - 2) * pp(t14 - 3) +
        t1234 * pp(t1234 - 1) * (t34 - t134) * pp(t14 - 2) +
        t1234 * (t234 - t1234) * pp(t134 - 1) * pp(t14 - 2) +
        t1234 * (t234 - t1234) * pp(t34 - t134 - 1) * pp(t14 - 1) +
        t1234 * (t23 - t234) * pp(t134 - 1) * pp(t14 - 2) +
        t1234 * (t23 - t234) * (t34 - t134) * pp(t14 - 1);
    const int64_t a2 =
        (t123 - t1234) * t1234 * pp(t134 - 1) * pp(t14 - 2) +
        (t123 - t1234) * t1234 * (t34 - t134) * pp(t14 - 1) +
        (t123 - t1234) * (t234 - t1234) * t134 * pp(t14 - 1) +
        (t123 - t1234) * (t234 - t1234) * pp(t34 - t134 - 1) * t14 +
        (t123 - t1234) * pp(t23 - t234 - 1) * t134 * pp(t14 - 1) +
        (t123 - t1234) * pp(t23 - t234 - 1) * (t34 - t134) * t14;
    const int64_t a3 =
        (t124 - t1234) * t1234 * pp(t134 - 1) * pp(t14 - 3) +
        (t124 - t1234) * t1234 * (t34 - t134) * pp(t14 - 2) +
        (t124 - t1234) * (t234 - t1234) * t134 * pp(t14 - 2) +
        (t124 - t1234) * (t234 - t1234) * pp(t34 - t134 - 1) * pp(t14 - 1) +
        (t124 - t1234) * (t23 - t234) * t134 * pp(t14 - 2) +
        (t124 - t1234) * (t23 - t234) * (t34 - t134) * pp(t14 - 1);
    const int64_t q = t12 - t123 - t124 + t1234;
    const int64_t a4 =
        q * t1234 * pp(t134 - 1) * pp(t14 - 2) +
        q * t1234 * (t34 - t134) * pp(t14 - 1) +
        q * (t234 - t1234) * t134 * pp(t14 - 1) +
        q * (t234 - t1234) * pp(t34 - t134 - 1) * t14 +
        q * (t23 - t234) * t134 * pp(t14 - 1) +
        q * (t23 - t234) * (t34 - t134) * t14;
    return a1 + a2 + a3 + a4;
}
inline int64_t p9_b(int64_t t12, int64_t t23, int64_t t34, int64_t t123, int64_t t234,
                    int64_t t1234, int64_t e14) {
    return (t1234 * pp(t234 - 1) * pp(t34 - 2) +
            t1234 * (t23 - t234) * pp(t34 - 1) +
            (t123 - t1234) * t234 * pp(t34 - 1) +
            (t123 - t1234) * pp(t23 - t234 - 1) * t34 +
            (t12 - t123) * t234 * pp(t34 - 1) +
            (t12 - t123) * (t23 - t234) * t34) *
           e14;
}
inline int64_t p9_path3(int64_t t12, int64_t t23, int64_t t123) {
    // two adjacent overlaps (c1-c2 then c2-c3) placed in a single replica
    return t123 * pp(t23 - 1) + (t12 - t123) * t23;
}
inline int64_t p9_c(int64_t t12, int64_t t23, int64_t t123, int64_t e34, int64_t e14, int64_t e134) {
    return p9_path3(t12, t23, t123) * (e134 * pp(e14 - 1) + (e34 - e134) * e14);
}
inline int64_t p9_opp(int64_t t12, int64_t t34, int64_t t1234) {
    // two opposite overlaps (c1-c2 and c3-c4) placed in a single replica
    return t1234 * pp(t34 - 1) + (t12 - t1234) * t34;
}
inline int64_t p9_d(int64_t t12, int64_t t34, int64_t t1234, int64_t e23, int64_t e14, int64_t e1234) {
    return p9_opp(t12, t34, t1234) * (e1234 * pp(e14 - 1) + (e23 - e1234) * e14);
}
inline int64_t p9_e(int64_t t12, int64_t t23, int64_t t123, int64_t e34, int64_t s14) {
    return p9_path3(t12, t23, t123) * e34 * s14;
}
inline int64_t p9_g(int64_t t12, int64_t t34, int64_t t1234, int64_t e23, int64_t s14) {
    return p9_opp(t12, t34, t1234) * e23 * s14;
}
inline int64_t p9_i(int64_t t12, int64_t e23, int64_t s34, int64_t u14) { return t12 * e23 * s34 * u14; }

// Generic dispatcher for tests: case ids are 'A'..'E', 'G', 'I' in the order
// the lemmas list them, args in the lemma's argument order.
int64_t case_count(int ell, char case_id, std::span<const int64_t> args);

} // namespace scforge::cases
