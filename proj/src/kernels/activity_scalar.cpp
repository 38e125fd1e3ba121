#include "scforge/kernels/activity.hpp"

namespace scforge::kernels {

namespace {

void eval_scalar(const ConditionBatch& b, const std::int32_t* table, int z, int bias, int first,
                 int last, std::uint8_t* out) {
    const std::int32_t* p0 = b.plus[0].data();
    const std::int32_t* p1 = b.plus[1].data();
    const std::int32_t* p2 = b.plus[2].data();
    const std::int32_t* p3 = b.plus[3].data();
    const std::int32_t* m0 = b.minus[0].data();
    const std::int32_t* m1 = b.minus[1].data();
    const std::int32_t* m2 = b.minus[2].data();
    const std::int32_t* m3 = b.minus[3].data();
    for (int i = first; i < last; ++i) {
        std::int32_t s = bias + table[p0[i]] + table[p1[i]] + table[p2[i]] + table[p3[i]] -
                         table[m0[i]] - table[m1[i]] - table[m2[i]] - table[m3[i]];
        out[i] = (s % z) == 0;
    }
}

} // namespace

EvalFn scalar_eval() { return &eval_scalar; }

} // namespace scforge::kernels
