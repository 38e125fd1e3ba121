#include "scforge/census.hpp"

#include "scforge/census_cases.hpp"

// Each F^k expression below transcribes the corresponding theorem term for
// term. Conventions shared by all of them:
//  - R = (m+1)*gamma is one past the last row of the reference replica, so
//    "from the start of R_k to the end of R_1" is the index range
//    [(k-1)*gamma, R-1].
//  - A shifted parameter t_{i+d, j+d} is looked up through T*, which returns
//    0 as soon as any shifted index leaves [0, R).
//  - Sums over an unordered index set iterate i1 < i2 (< ...); sums whose
//    indices have distinct ranges iterate them independently.
//  - Residue exclusions are the ones each theorem states; P7 allows equal
//    residues for (i2, i3) and P9 for (i1, i3) and (i2, i4), with the indices
//    themselves distinct.

namespace scforge {

using namespace cases;

namespace {

struct Ctx {
    const OverlapParams& t;
    int gamma, m, R;

    int res(int i) const { return ((i % gamma) + gamma) % gamma; }

    std::int64_t T2(int a, int b) const {
        if (a < 0 || b < 0 || a >= R || b >= R) return 0;
        return t.of_mask((1u << a) | (1u << b));
    }
    std::int64_t T3(int a, int b, int c) const {
        if (a < 0 || b < 0 || c < 0 || a >= R || b >= R || c >= R) return 0;
        return t.of_mask((1u << a) | (1u << b) | (1u << c));
    }
    std::int64_t T4(int a, int b, int c, int d) const {
        if (a < 0 || b < 0 || c < 0 || d < 0 || a >= R || b >= R || c >= R || d >= R) return 0;
        return t.of_mask((1u << a) | (1u << b) | (1u << c) | (1u << d));
    }
};

// ---------------------------------------------------------------- P1 / P2 / P4
// Two CNs c1, c2 with all overlaps in the c1-c2 family.

template <class Fn>
std::int64_t sum_pairs(const Ctx& x, int lo, int hi, Fn&& f) {
    std::int64_t s = 0;
    for (int i1 = lo; i1 <= hi; ++i1)
        for (int i2 = i1 + 1; i2 <= hi; ++i2) {
            if (x.res(i1) == x.res(i2)) continue;
            s += f(i1, i2);
        }
    return s;
}

std::int64_t p1_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma;
    if (k == 1)
        return sum_pairs(x, 0, R - 1, [&](int i1, int i2) { return p1_a(x.T2(i1, i2)); });
    const int d = (k - 1) * g;
    return sum_pairs(x, d, R - 1, [&](int i1, int i2) {
        return p1_b(x.T2(i1, i2), x.T2(i1 - d, i2 - d));
    });
}

std::int64_t p2_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma, m = x.m;
    if (k == 1)
        return sum_pairs(x, 0, R - 1, [&](int i1, int i2) { return p2_a(x.T2(i1, i2)); });
    const int d = (k - 1) * g;
    std::int64_t s = 0;
    s += sum_pairs(x, d, R - 1, [&](int i1, int i2) {
        return p2_b(x.T2(i1, i2), x.T2(i1 - d, i2 - d));
    });
    s += sum_pairs(x, 0, (m - k + 2) * g - 1, [&](int i1, int i2) {
        return p2_b(x.T2(i1, i2), x.T2(i1 + d, i2 + d));
    });
    for (int h = 2; h <= k - 1; ++h) {
        const int dh = (h - 1) * g;
        s += sum_pairs(x, d, R - 1, [&](int i1, int i2) {
            return p2_c(x.T2(i1, i2), x.T2(i1 - dh, i2 - dh), x.T2(i1 - d, i2 - d));
        });
    }
    return s;
}

std::int64_t p3_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma;
    auto sum_triples = [&](int lo, int hi, auto&& f) {
        std::int64_t s = 0;
        for (int i1 = lo; i1 <= hi; ++i1)
            for (int i2 = i1 + 1; i2 <= hi; ++i2) {
                if (x.res(i1) == x.res(i2)) continue;
                for (int i3 = i2 + 1; i3 <= hi; ++i3) {
                    if (x.res(i3) == x.res(i1) || x.res(i3) == x.res(i2)) continue;
                    s += f(i1, i2, i3);
                }
            }
        return s;
    };
    if (k == 1)
        return sum_triples(0, R - 1, [&](int i1, int i2, int i3) { return p3_a(x.T3(i1, i2, i3)); });
    const int d = (k - 1) * g;
    return sum_triples(d, R - 1, [&](int i1, int i2, int i3) {
        return p3_b(x.T3(i1, i2, i3), x.T3(i1 - d, i2 - d, i3 - d));
    });
}

std::int64_t p4_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma, m = x.m;
    if (k == 1)
        return sum_pairs(x, 0, R - 1, [&](int i1, int i2) { return p4_a(x.T2(i1, i2)); });
    const int d = (k - 1) * g;
    std::int64_t s = 0;
    s += sum_pairs(x, d, R - 1, [&](int i1, int i2) {
        return p4_b(x.T2(i1, i2), x.T2(i1 - d, i2 - d));
    });
    s += sum_pairs(x, 0, (m - k + 2) * g - 1, [&](int i1, int i2) {
        return p4_b(x.T2(i1, i2), x.T2(i1 + d, i2 + d));
    });
    s += sum_pairs(x, d, R - 1, [&](int i1, int i2) {
        return p4_c(x.T2(i1, i2), x.T2(i1 - d, i2 - d));
    });
    for (int h = 2; h <= k - 1; ++h) {
        const int dh = (h - 1) * g, dkh = (k - h) * g;
        s += sum_pairs(x, d, R - 1, [&](int i1, int i2) {
            return p4_d(x.T2(i1, i2), x.T2(i1 - dh, i2 - dh), x.T2(i1 - d, i2 - d));
        });
        s += sum_pairs(x, dkh, (m - h + 2) * g - 1, [&](int i1, int i2) {
            return p4_d(x.T2(i1, i2), x.T2(i1 + dh, i2 + dh), x.T2(i1 - dkh, i2 - dkh));
        });
        s += sum_pairs(x, 0, (m - k + 2) * g - 1, [&](int i1, int i2) {
            return p4_d(x.T2(i1, i2), x.T2(i1 + d, i2 + d), x.T2(i1 + dkh, i2 + dkh));
        });
    }
    for (int h = 2; h <= k - 2; ++h)
        for (int w = h + 1; w <= k - 1; ++w) {
            const int dh = (h - 1) * g, dw = (w - 1) * g;
            s += sum_pairs(x, d, R - 1, [&](int i1, int i2) {
                return p4_e(x.T2(i1, i2), x.T2(i1 - dh, i2 - dh), x.T2(i1 - dw, i2 - dw),
                            x.T2(i1 - d, i2 - d));
            });
        }
    return s;
}

std::int64_t p5_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma;
    auto sum_quads = [&](int lo, int hi, auto&& f) {
        std::int64_t s = 0;
        for (int i1 = lo; i1 <= hi; ++i1)
            for (int i2 = i1 + 1; i2 <= hi; ++i2) {
                if (x.res(i1) == x.res(i2)) continue;
                for (int i3 = i2 + 1; i3 <= hi; ++i3) {
                    if (x.res(i3) == x.res(i1) || x.res(i3) == x.res(i2)) continue;
                    for (int i4 = i3 + 1; i4 <= hi; ++i4) {
                        if (x.res(i4) == x.res(i1) || x.res(i4) == x.res(i2) ||
                            x.res(i4) == x.res(i3))
                            continue;
                        s += f(i1, i2, i3, i4);
                    }
                }
            }
        return s;
    };
    if (k == 1)
        return sum_quads(0, R - 1, [&](int i1, int i2, int i3, int i4) {
            return p5_a(x.T4(i1, i2, i3, i4));
        });
    const int d = (k - 1) * g;
    return sum_quads(d, R - 1, [&](int i1, int i2, int i3, int i4) {
        return p5_b(x.T4(i1, i2, i3, i4), x.T4(i1 - d, i2 - d, i3 - d, i4 - d));
    });
}

// ---------------------------------------------------------------------- P6
// i1 is the CN joining all three VNs; i2, i3 the arm CNs.

std::int64_t p6_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma, m = x.m;
    auto distinct3 = [&](int i1, int i2, int i3) {
        return x.res(i1) != x.res(i2) && x.res(i1) != x.res(i3) && x.res(i2) != x.res(i3);
    };
    std::int64_t s = 0;
    if (k == 1) {
        for (int i1 = 0; i1 < R; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = i2 + 1; i3 < R; ++i3) {
                    if (!distinct3(i1, i2, i3)) continue;
                    s += p6_a(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3));
                }
        return s;
    }
    const int d = (k - 1) * g;
    const int hiB = (m - k + 2) * g - 1;
    // degree-3 overlap in the other replica (both orders of r, e)
    for (int i1 = d; i1 < R; ++i1)
        for (int i2 = d; i2 < R; ++i2)
            for (int i3 = i2 + 1; i3 < R; ++i3) {
                if (!distinct3(i1, i2, i3)) continue;
                s += p6_b(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3),
                          x.T3(i1 - d, i2 - d, i3 - d));
            }
    for (int i1 = 0; i1 <= hiB; ++i1)
        for (int i2 = 0; i2 <= hiB; ++i2)
            for (int i3 = i2 + 1; i3 <= hiB; ++i3) {
                if (!distinct3(i1, i2, i3)) continue;
                s += p6_b(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3),
                          x.T3(i1 + d, i2 + d, i3 + d));
            }
    // degree-3 overlap with the c1-c2 overlap; c1-c3 in the other replica
    for (int i1 = d; i1 < R; ++i1)
        for (int i2 = 0; i2 < R; ++i2)
            for (int i3 = d; i3 < R; ++i3) {
                if (i2 == i3 || !distinct3(i1, i2, i3)) continue;
                s += p6_c(x.T2(i1, i2), x.T3(i1, i2, i3), x.T2(i1 - d, i3 - d));
            }
    for (int i1 = 0; i1 <= hiB; ++i1)
        for (int i2 = 0; i2 < R; ++i2)
            for (int i3 = 0; i3 <= hiB; ++i3) {
                if (i2 == i3 || !distinct3(i1, i2, i3)) continue;
                s += p6_c(x.T2(i1, i2), x.T3(i1, i2, i3), x.T2(i1 + d, i3 + d));
            }
    // three replicas
    for (int h = 2; h <= k - 1; ++h) {
        const int dh = (h - 1) * g, dkh = (k - h) * g;
        for (int i1 = d; i1 < R; ++i1)
            for (int i2 = d; i2 < R; ++i2)
                for (int i3 = d; i3 <= (m + h) * g - 1; ++i3) {
                    if (i2 == i3 || !distinct3(i1, i2, i3)) continue;
                    s += p6_d(x.T2(i1, i2), x.T2(i1 - dh, i3 - dh), x.T3(i1 - d, i2 - d, i3 - d));
                }
        for (int i1 = d; i1 < R; ++i1)
            for (int i2 = dh; i2 < R; ++i2)
                for (int i3 = d; i3 <= (m + h) * g - 1; ++i3) {
                    if (i2 == i3 || !distinct3(i1, i2, i3)) continue;
                    s += p6_d(x.T2(i1, i2), x.T2(i1 - d, i3 - d), x.T3(i1 - dh, i2 - dh, i3 - dh));
                }
        for (int i1 = dkh; i1 <= (m - h + 2) * g - 1; ++i1)
            for (int i2 = 0; i2 <= (m - h + 2) * g - 1; ++i2)
                for (int i3 = dkh; i3 <= (m - h + 2) * g - 1; ++i3) {
                    if (i2 == i3 || !distinct3(i1, i2, i3)) continue;
                    s += p6_d(x.T2(i1, i2), x.T2(i1 - dkh, i3 - dkh), x.T3(i1 + dh, i2 + dh, i3 + dh));
                }
    }
    return s;
}

// ---------------------------------------------------------------------- P7
// i1 joins all four VNs; two overlaps with i2, two with i3. i2 and i3 only
// need to be distinct indices (equal residues allowed across replicas).

std::int64_t p7_span(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma, m = x.m;
    auto ok = [&](int i1, int i2, int i3) {
        return x.res(i1) != x.res(i2) && x.res(i1) != x.res(i3) && i2 != i3;
    };
    std::int64_t s = 0;
    if (k == 1) {
        for (int i1 = 0; i1 < R; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = i2 + 1; i3 < R; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_a(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3));
                }
        return s;
    }
    const int d = (k - 1) * g;
    const int hiB = (m - k + 2) * g - 1;
    for (int i1 = d; i1 < R; ++i1)
        for (int i2 = 0; i2 < R; ++i2)
            for (int i3 = d; i3 < R; ++i3) {
                if (!ok(i1, i2, i3)) continue;
                s += p7_b(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3), x.T2(i1 - d, i3 - d));
            }
    for (int i1 = 0; i1 <= hiB; ++i1)
        for (int i2 = 0; i2 < R; ++i2)
            for (int i3 = 0; i3 <= hiB; ++i3) {
                if (!ok(i1, i2, i3)) continue;
                s += p7_b(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3), x.T2(i1 + d, i3 + d));
            }
    for (int i1 = d; i1 < R; ++i1)
        for (int i2 = 0; i2 < R; ++i2)
            for (int i3 = d; i3 <= (m + k) * g - 1; ++i3) {
                if (!ok(i1, i2, i3)) continue;
                s += p7_c(x.T2(i1, i2), x.T2(i1 - d, i3 - d));
            }
    for (int i1 = d; i1 < R; ++i1)
        for (int i2 = d; i2 < R; ++i2)
            for (int i3 = i2 + 1; i3 < R; ++i3) {
                if (!ok(i1, i2, i3)) continue;
                s += p7_d(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3), x.T2(i1 - d, i2 - d),
                          x.T2(i1 - d, i3 - d), x.T3(i1 - d, i2 - d, i3 - d));
            }
    for (int h = 2; h <= k - 1; ++h) {
        const int dh = (h - 1) * g, dkh = (k - h) * g;
        for (int i1 = d; i1 < R; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = d; i3 <= (m + h) * g - 1; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_e(x.T2(i1, i2), x.T2(i1 - dh, i3 - dh), x.T2(i1 - d, i3 - d));
                }
        for (int i1 = dkh; i1 <= (m - h + 2) * g - 1; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = dkh; i3 <= (m - h + 2) * g - 1; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_e(x.T2(i1, i2), x.T2(i1 + dh, i3 + dh), x.T2(i1 - dkh, i3 - dkh));
                }
        for (int i1 = 0; i1 <= hiB; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = -dkh; i3 <= hiB; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_e(x.T2(i1, i2), x.T2(i1 + d, i3 + d), x.T2(i1 + dkh, i3 + dkh));
                }
        for (int i1 = d; i1 < R; ++i1)
            for (int i2 = dh; i2 < R; ++i2)
                for (int i3 = d; i3 < R; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_g(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3), x.T2(i1 - dh, i2 - dh),
                              x.T2(i1 - d, i3 - d));
                }
        for (int i1 = dkh; i1 <= (m - h + 2) * g - 1; ++i1)
            for (int i2 = 0; i2 <= (m - h + 2) * g - 1; ++i2)
                for (int i3 = dkh; i3 < R; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_g(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3), x.T2(i1 + dh, i2 + dh),
                              x.T2(i1 - dkh, i3 - dkh));
                }
        for (int i1 = 0; i1 <= hiB; ++i1)
            for (int i2 = 0; i2 <= hiB; ++i2)
                for (int i3 = 0; i3 <= (m - k + h + 1) * g - 1; ++i3) {
                    if (!ok(i1, i2, i3)) continue;
                    s += p7_g(x.T2(i1, i2), x.T2(i1, i3), x.T3(i1, i2, i3), x.T2(i1 + d, i2 + d),
                              x.T2(i1 + dkh, i3 + dkh));
                }
    }
    for (int h = 2; h <= k - 2; ++h)
        for (int w = h + 1; w <= k - 1; ++w) {
            const int dh = (h - 1) * g, dw = (w - 1) * g;
            for (int i1 = d; i1 < R; ++i1)
                for (int i2 = dh; i2 < R; ++i2)
                    for (int i3 = d; i3 <= (m + w) * g - 1; ++i3) {
                        if (!ok(i1, i2, i3)) continue;
                        s += p7_i(x.T2(i1, i2), x.T2(i1 - dh, i2 - dh), x.T2(i1 - dw, i3 - dw),
                                  x.T2(i1 - d, i3 - d));
                    }
            for (int i1 = d; i1 < R; ++i1)
                for (int i2 = dw; i2 < R; ++i2)
                    for (int i3 = d; i3 <= (m + h) * g - 1; ++i3) {
                        if (!ok(i1, i2, i3)) continue;
                        s += p7_i(x.T2(i1, i2), x.T2(i1 - dw, i2 - dw), x.T2(i1 - dh, i3 - dh),
                                  x.T2(i1 - d, i3 - d));
                    }
            for (int i1 = d; i1 < R; ++i1)
                for (int i2 = d; i2 < R; ++i2)
                    for (int i3 = dw; i3 <= (m + h) * g - 1; ++i3) {
                        if (!ok(i1, i2, i3)) continue;
                        s += p7_i(x.T2(i1, i2), x.T2(i1 - d, i2 - d), x.T2(i1 - dh, i3 - dh),
                                  x.T2(i1 - dw, i3 - dw));
                    }
        }
    return s;
}

// ---------------------------------------------------------------------- P8
// Two mutually exclusive degree-2 overlaps {i1,i2}, {i3,i4} plus the
// degree-4 overlap. The 1/2 factors deduplicate the unordered pair of pairs.

std::int64_t p8_span_twice(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma, m = x.m;
    auto res_ok = [&](int a, int b, int c, int dd) {
        int ra = x.res(a), rb = x.res(b), rc = x.res(c), rd = x.res(dd);
        return ra != rb && ra != rc && ra != rd && rb != rc && rb != rd && rc != rd;
    };
    // Sums over {i1,i2} in [lo1,hi1], {i3,i4} in [lo2,hi2]; returns twice the
    // printed sum so the 1/2 coefficients stay integral (`half` marks terms
    // the theorem halves).
    auto sum4 = [&](int lo1, int hi1, int lo2, int hi2, bool half, auto&& f) {
        std::int64_t s = 0;
        for (int i1 = lo1; i1 <= hi1; ++i1)
            for (int i2 = i1 + 1; i2 <= hi1; ++i2)
                for (int i3 = lo2; i3 <= hi2; ++i3)
                    for (int i4 = i3 + 1; i4 <= hi2; ++i4) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += f(i1, i2, i3, i4);
                    }
        return half ? s : 2 * s;
    };
    if (k == 1)
        return sum4(0, R - 1, 0, R - 1, true, [&](int i1, int i2, int i3, int i4) {
            return p8_a(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4));
        });
    const int d = (k - 1) * g;
    const int hiB = (m - k + 2) * g - 1;
    std::int64_t s = 0;
    s += sum4(d, R - 1, d, R - 1, true, [&](int i1, int i2, int i3, int i4) {
        return p8_b(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4),
                    x.T4(i1 - d, i2 - d, i3 - d, i4 - d));
    });
    s += sum4(0, hiB, 0, hiB, true, [&](int i1, int i2, int i3, int i4) {
        return p8_b(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4),
                    x.T4(i1 + d, i2 + d, i3 + d, i4 + d));
    });
    s += sum4(0, R - 1, d, R - 1, false, [&](int i1, int i2, int i3, int i4) {
        return p8_c(x.T2(i1, i2), x.T4(i1, i2, i3, i4), x.T2(i3 - d, i4 - d));
    });
    s += sum4(0, R - 1, 0, hiB, false, [&](int i1, int i2, int i3, int i4) {
        return p8_c(x.T2(i1, i2), x.T4(i1, i2, i3, i4), x.T2(i3 + d, i4 + d));
    });
    for (int h = 2; h <= k - 1; ++h) {
        const int dh = (h - 1) * g, dkh = (k - h) * g;
        s += sum4(d, R - 1, d, (m + h) * g - 1, false, [&](int i1, int i2, int i3, int i4) {
            return p8_d(x.T2(i1, i2), x.T2(i3 - dh, i4 - dh), x.T4(i1 - d, i2 - d, i3 - d, i4 - d));
        });
        s += sum4(dh, R - 1, d, (m + h) * g - 1, false, [&](int i1, int i2, int i3, int i4) {
            return p8_d(x.T2(i1, i2), x.T2(i3 - d, i4 - d), x.T4(i1 - dh, i2 - dh, i3 - dh, i4 - dh));
        });
        s += sum4(0, (m - h + 2) * g - 1, dkh, (m - h + 2) * g - 1, false,
                  [&](int i1, int i2, int i3, int i4) {
                      return p8_d(x.T2(i1, i2), x.T2(i3 - dkh, i4 - dkh),
                                  x.T4(i1 + dh, i2 + dh, i3 + dh, i4 + dh));
                  });
    }
    return s;
}

// ---------------------------------------------------------------------- P9
// CN cycle i1-i2-i3-i4; diagonals (i1,i3) and (i2,i4) may share residues.
// The 1/2 factors deduplicate the three pairings of four CNs.

std::int64_t p9_span_twice(const Ctx& x, int k) {
    const int R = x.R, g = x.gamma, m = x.m;
    auto res_ok = [&](int i1, int i2, int i3, int i4) {
        return x.res(i1) != x.res(i2) && i1 != i3 && x.res(i1) != x.res(i4) &&
               x.res(i2) != x.res(i3) && i2 != i4 && x.res(i3) != x.res(i4);
    };
    std::int64_t s = 0;
    if (k == 1) {
        for (int i1 = 0; i1 < R; ++i1)
            for (int i3 = i1 + 1; i3 < R; ++i3)
                for (int i2 = 0; i2 < R; ++i2)
                    for (int i4 = i2 + 1; i4 < R; ++i4) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += p9_a(x.T2(i1, i2), x.T2(i2, i3), x.T2(i3, i4), x.T2(i1, i4),
                                  x.T3(i1, i2, i3), x.T3(i1, i2, i4), x.T3(i1, i3, i4),
                                  x.T3(i2, i3, i4), x.T4(i1, i2, i3, i4));
                    }
        return s; // printed coefficient is 1/2, so this is already "twice"
    }
    const int d = (k - 1) * g;
    const int hiB = (m - k + 2) * g - 1;
    // B: three overlaps in one replica, the c1-c4 overlap in the other.
    for (int i1 = d; i1 < R; ++i1)
        for (int i4 = i1 + 1; i4 < R; ++i4)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = 0; i3 < R; ++i3) {
                    if (!res_ok(i1, i2, i3, i4)) continue;
                    s += 2 * p9_b(x.T2(i1, i2), x.T2(i2, i3), x.T2(i3, i4), x.T3(i1, i2, i3),
                                  x.T3(i2, i3, i4), x.T4(i1, i2, i3, i4), x.T2(i1 - d, i4 - d));
                }
    for (int i1 = 0; i1 <= hiB; ++i1)
        for (int i4 = i1 + 1; i4 <= hiB; ++i4)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = 0; i3 < R; ++i3) {
                    if (!res_ok(i1, i2, i3, i4)) continue;
                    s += 2 * p9_b(x.T2(i1, i2), x.T2(i2, i3), x.T2(i3, i4), x.T3(i1, i2, i3),
                                  x.T3(i2, i3, i4), x.T4(i1, i2, i3, i4), x.T2(i1 + d, i4 + d));
                }
    // C: adjacent halves in two replicas.
    for (int i1 = d; i1 < R; ++i1)
        for (int i3 = i1 + 1; i3 < R; ++i3)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i4 = d; i4 <= (m + k) * g - 1; ++i4) {
                    if (!res_ok(i1, i2, i3, i4)) continue;
                    s += 2 * p9_c(x.T2(i1, i2), x.T2(i2, i3), x.T3(i1, i2, i3),
                                  x.T2(i3 - d, i4 - d), x.T2(i1 - d, i4 - d),
                                  x.T3(i1 - d, i3 - d, i4 - d));
                }
    // D: opposite halves in two replicas (printed with a 1/2).
    for (int i1 = d; i1 < R; ++i1)
        for (int i4 = i1 + 1; i4 < R; ++i4)
            for (int i2 = d; i2 < R; ++i2)
                for (int i3 = d; i3 < R; ++i3) {
                    if (!res_ok(i1, i2, i3, i4)) continue;
                    s += p9_d(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4),
                              x.T2(i2 - d, i3 - d), x.T2(i1 - d, i4 - d),
                              x.T4(i1 - d, i2 - d, i3 - d, i4 - d));
                }
    for (int h = 2; h <= k - 1; ++h) {
        const int dh = (h - 1) * g, dkh = (k - h) * g;
        // E: c1-c2 and c2-c3 together, c3-c4 and c1-c4 in later replicas.
        for (int i1 = d; i1 < R; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = dh; i3 < R; ++i3)
                    for (int i4 = d; i4 <= (m + h) * g - 1; ++i4) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += 2 * p9_e(x.T2(i1, i2), x.T2(i2, i3), x.T3(i1, i2, i3),
                                      x.T2(i3 - dh, i4 - dh), x.T2(i1 - d, i4 - d));
                    }
        for (int i1 = dkh; i1 < R; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = 0; i3 <= (m - h + 2) * g - 1; ++i3)
                    for (int i4 = dkh; i4 <= (m - h + 2) * g - 1; ++i4) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += 2 * p9_e(x.T2(i1, i2), x.T2(i2, i3), x.T3(i1, i2, i3),
                                      x.T2(i3 + dh, i4 + dh), x.T2(i1 - dkh, i4 - dkh));
                    }
        for (int i1 = 0; i1 <= (m - k + h + 1) * g - 1; ++i1)
            for (int i2 = 0; i2 < R; ++i2)
                for (int i3 = 0; i3 <= hiB; ++i3)
                    for (int i4 = -dkh; i4 <= hiB; ++i4) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += 2 * p9_e(x.T2(i1, i2), x.T2(i2, i3), x.T3(i1, i2, i3),
                                      x.T2(i3 + d, i4 + d), x.T2(i1 + dkh, i4 + dkh));
                    }
        // G: opposite overlaps together, the other two in later replicas.
        for (int i1 = d; i1 < R; ++i1)
            for (int i4 = i1 + 1; i4 < R; ++i4)
                for (int i2 = dh; i2 < R; ++i2)
                    for (int i3 = dh; i3 < R; ++i3) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += 2 * p9_g(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4),
                                      x.T2(i2 - dh, i3 - dh), x.T2(i1 - d, i4 - d));
                    }
        for (int i1 = dkh; i1 < R; ++i1)
            for (int i4 = i1 + 1; i4 < R; ++i4)
                for (int i2 = 0; i2 <= (m - h + 2) * g - 1; ++i2)
                    for (int i3 = 0; i3 <= (m - h + 2) * g - 1; ++i3) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += 2 * p9_g(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4),
                                      x.T2(i2 + dh, i3 + dh), x.T2(i1 - dkh, i4 - dkh));
                    }
        for (int i1 = 0; i1 <= (m - k + h + 1) * g - 1; ++i1)
            for (int i4 = i1 + 1; i4 <= (m - k + h + 1) * g - 1; ++i4)
                for (int i2 = 0; i2 <= hiB; ++i2)
                    for (int i3 = 0; i3 <= hiB; ++i3) {
                        if (!res_ok(i1, i2, i3, i4)) continue;
                        s += 2 * p9_g(x.T2(i1, i2), x.T2(i3, i4), x.T4(i1, i2, i3, i4),
                                      x.T2(i2 + d, i3 + d), x.T2(i1 + dkh, i4 + dkh));
                    }
    }
    for (int h = 2; h <= k - 2; ++h)
        for (int w = h + 1; w <= k - 1; ++w) {
            const int dh = (h - 1) * g, dw = (w - 1) * g;
            for (int i1 = d; i1 < R; ++i1)
                for (int i2 = dh; i2 < R; ++i2)
                    for (int i3 = dw; i3 <= (m + h) * g - 1; ++i3)
                        for (int i4 = d; i4 <= (m + w) * g - 1; ++i4) {
                            if (!res_ok(i1, i2, i3, i4)) continue;
                            s += 2 * p9_i(x.T2(i1, i2), x.T2(i2 - dh, i3 - dh),
                                          x.T2(i3 - dw, i4 - dw), x.T2(i1 - d, i4 - d));
                        }
            for (int i1 = d; i1 < R; ++i1)
                for (int i2 = dw; i2 < R; ++i2)
                    for (int i3 = dw; i3 <= (m + h) * g - 1; ++i3)
                        for (int i4 = d; i4 <= (m + h) * g - 1; ++i4) {
                            if (!res_ok(i1, i2, i3, i4)) continue;
                            s += 2 * p9_i(x.T2(i1, i2), x.T2(i2 - dw, i3 - dw),
                                          x.T2(i3 - dh, i4 - dh), x.T2(i1 - d, i4 - d));
                        }
            for (int i1 = dw; i1 < R; ++i1)
                for (int i2 = dh; i2 < R; ++i2)
                    for (int i3 = d; i3 <= (m + h) * g - 1; ++i3)
                        for (int i4 = d; i4 <= (m + w) * g - 1; ++i4) {
                            if (!res_ok(i1, i2, i3, i4)) continue;
                            s += 2 * p9_i(x.T2(i1, i2), x.T2(i2 - dh, i3 - dh),
                                          x.T2(i3 - d, i4 - d), x.T2(i1 - dw, i4 - dw));
                        }
        }
    return s;
}

std::int64_t span_twice(int ell, int k, const Ctx& x) {
    switch (ell) {
        case 1: return 2 * p1_span(x, k);
        case 2: return 2 * p2_span(x, k);
        case 3: return 2 * p3_span(x, k);
        case 4: return 2 * p4_span(x, k);
        case 5: return 2 * p5_span(x, k);
        case 6: return 2 * p6_span(x, k);
        case 7: return 2 * p7_span(x, k);
        case 8: return p8_span_twice(x, k);
        case 9: return p9_span_twice(x, k);
        default: throw ConfigError("pattern id must be 1..9");
    }
}

} // namespace

std::int64_t pattern_span_count(int ell, int k, const OverlapParams& t, const CodeParams& p) {
    if (ell < 1 || ell > 9) throw ConfigError("pattern id must be 1..9");
    if (k < 1 || k > chi(ell, p.m)) throw ConfigError("span k out of range for pattern");
    Ctx x{t, p.gamma, p.m, (p.m + 1) * p.gamma};
    std::int64_t tw = span_twice(ell, k, x);
    // Every F^k is an integer; the halved P8/P9 sums come out even.
    return tw / 2;
}

std::int64_t pattern_total(int ell, const OverlapParams& t, const CodeParams& p) {
    std::int64_t total = 0;
    for (int k = 1; k <= chi(ell, p.m); ++k) {
        long long w = p.L - k + 1;
        if (w <= 0) break;
        total += w * pattern_span_count(ell, k, t, p);
    }
    return total;
}

PatternCensus census(const OverlapParams& t, const CodeParams& p) {
    PatternCensus out;
    for (int ell = 1; ell <= 9; ++ell) {
        if (!pattern_exists(ell, p.gamma)) continue;
        out.total[ell] = pattern_total(ell, t, p);
        out.f_sum += Half{beta(ell).twice * out.total[ell]};
    }
    return out;
}

namespace cases {

std::int64_t case_count(int ell, char case_id, std::span<const std::int64_t> a) {
    auto need = [&](size_t n) {
        if (a.size() != n) throw ConfigError("wrong argument count for pattern case");
    };
    switch (ell) {
        case 1:
            if (case_id == 'A') { need(1); return p1_a(a[0]); }
            if (case_id == 'B') { need(2); return p1_b(a[0], a[1]); }
            break;
        case 2:
            if (case_id == 'A') { need(1); return p2_a(a[0]); }
            if (case_id == 'B') { need(2); return p2_b(a[0], a[1]); }
            if (case_id == 'C') { need(3); return p2_c(a[0], a[1], a[2]); }
            break;
        case 3:
            if (case_id == 'A') { need(1); return p3_a(a[0]); }
            if (case_id == 'B') { need(2); return p3_b(a[0], a[1]); }
            break;
        case 4:
            if (case_id == 'A') { need(1); return p4_a(a[0]); }
            if (case_id == 'B') { need(2); return p4_b(a[0], a[1]); }
            if (case_id == 'C') { need(2); return p4_c(a[0], a[1]); }
            if (case_id == 'D') { need(3); return p4_d(a[0], a[1], a[2]); }
            if (case_id == 'E') { need(4); return p4_e(a[0], a[1], a[2], a[3]); }
            break;
        case 5:
            if (case_id == 'A') { need(1); return p5_a(a[0]); }
            if (case_id == 'B') { need(2); return p5_b(a[0], a[1]); }
            break;
        case 6:
            if (case_id == 'A') { need(3); return p6_a(a[0], a[1], a[2]); }
            if (case_id == 'B') { need(4); return p6_b(a[0], a[1], a[2], a[3]); }
            if (case_id == 'C') { need(3); return p6_c(a[0], a[1], a[2]); }
            if (case_id == 'D') { need(3); return p6_d(a[0], a[1], a[2]); }
            break;
        case 7:
            if (case_id == 'A') { need(3); return p7_a(a[0], a[1], a[2]); }
            if (case_id == 'B') { need(4); return p7_b(a[0], a[1], a[2], a[3]); }
            if (case_id == 'C') { need(2); return p7_c(a[0], a[1]); }
            if (case_id == 'D') { need(6); return p7_d(a[0], a[1], a[2], a[3], a[4], a[5]); }
            if (case_id == 'E') { need(3); return p7_e(a[0], a[1], a[2]); }
            if (case_id == 'G') { need(5); return p7_g(a[0], a[1], a[2], a[3], a[4]); }
            if (case_id == 'I') { need(4); return p7_i(a[0], a[1], a[2], a[3]); }
            break;
        case 8:
            if (case_id == 'A') { need(3); return p8_a(a[0], a[1], a[2]); }
            if (case_id == 'B') { need(4); return p8_b(a[0], a[1], a[2], a[3]); }
            if (case_id == 'C') { need(3); return p8_c(a[0], a[1], a[2]); }
            if (case_id == 'D') { need(3); return p8_d(a[0], a[1], a[2]); }
            break;
        case 9:
            if (case_id == 'A') { need(9); return p9_a(a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8]); }
            if (case_id == 'B') { need(7); return p9_b(a[0], a[1], a[2], a[3], a[4], a[5], a[6]); }
            if (case_id == 'C') { need(6); return p9_c(a[0], a[1], a[2], a[3], a[4], a[5]); }
            if (case_id == 'D') { need(6); return p9_d(a[0], a[1], a[2], a[3], a[4], a[5]); }
            if (case_id == 'E') { need(5); return p9_e(a[0], a[1], a[2], a[3], a[4]); }
            if (case_id == 'G') { need(5); return p9_g(a[0], a[1], a[2], a[3], a[4]); }
            if (case_id == 'I') { need(4); return p9_i(a[0], a[1], a[2], a[3]); }
            break;
        default: break;
    }
    throw ConfigError("unknown (pattern, case) pair");
}

} // namespace cases

} // namespace scforge
