#include "scforge/kernels/activity.hpp"

namespace scforge::kernels {

#ifdef SCFORGE_HAVE_AVX2_TU
void eval_avx2(const ConditionBatch&, const std::int32_t*, int, int, int, int, std::uint8_t*);
#endif

namespace {

struct Dispatch {
    EvalFn fn;
    std::string name;
    Dispatch() {
        fn = scalar_eval();
        name = "scalar";
#ifdef SCFORGE_HAVE_AVX2_TU
        if (__builtin_cpu_supports("avx2")) {
            fn = &eval_avx2;
            name = "avx2";
        }
#endif
    }
};

const Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

} // namespace

EvalFn active_eval() { return dispatch().fn; }
const std::string& active_eval_name() { return dispatch().name; }

void eval_conditions(const ConditionBatch& b, const std::int32_t* table, int z, int bias,
                     std::uint8_t* out) {
    // the reciprocal trick needs |s| < 2^23; fall back to scalar for huge z
    EvalFn fn = (z <= (1 << 19)) ? active_eval() : scalar_eval();
    fn(b, table, z, bias, 0, b.count, out);
}

} // namespace scforge::kernels
