#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Batch evaluation of circulant power conditions. Every condition is a
// signed sum of up to 4+4 entries of the gamma x kappa power table, tested
// for == target (mod z). Conditions are stored plane-wise (structure of
// arrays) so the SIMD variants can gather one plane per instruction.

namespace scforge::kernels {

struct ConditionBatch {
    int count = 0;
    int table_size = 0;                     // power table entries incl. zero sentinel
    std::array<std::vector<std::int32_t>, 4> plus;  // index planes
    std::array<std::vector<std::int32_t>, 4> minus;

    void reserve(int n) {
        for (auto& v : plus) v.reserve(n);
        for (auto& v : minus) v.reserve(n);
    }
    // unused slots point at the zero sentinel (index table_size-1)
    void push(const std::int32_t* p, int np, const std::int32_t* m, int nm, std::int32_t sentinel) {
        for (int s = 0; s < 4; ++s) plus[s].push_back(s < np ? p[s] : sentinel);
        for (int s = 0; s < 4; ++s) minus[s].push_back(s < nm ? m[s] : sentinel);
        ++count;
    }
};

// out[i] = 1 iff sum(plus) - sum(minus) + bias == 0 (mod z), for i in [first, last).
using EvalFn = void (*)(const ConditionBatch&, const std::int32_t* table, int z, int bias,
                        int first, int last, std::uint8_t* out);

EvalFn scalar_eval();
EvalFn active_eval();              // best variant for this machine
const std::string& active_eval_name();

void eval_conditions(const ConditionBatch& b, const std::int32_t* table, int z, int bias,
                     std::uint8_t* out); // full range, active variant

// Scalar single-condition helper shared with incremental recounts.
inline bool condition_holds(const ConditionBatch& b, int i, const std::int32_t* table, int z,
                            int bias) {
    std::int64_t s = bias;
    for (int sl = 0; sl < 4; ++sl) s += table[b.plus[sl][i]];
    for (int sl = 0; sl < 4; ++sl) s -= table[b.minus[sl][i]];
    return s % z == 0;
}

} // namespace scforge::kernels
