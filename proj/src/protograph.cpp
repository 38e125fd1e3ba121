#include "scforge/protograph.hpp"

namespace scforge {

SCProtograph build_sc_protograph(const PartitionMatrix& part, long long L) {
    if (L < 1) throw ConfigError("L must be >= 1");
    SCProtograph sc;
    sc.gamma = part.gamma;
    sc.kappa = part.kappa;
    sc.m = part.m;
    sc.L = L;
    if (sc.rows() * sc.cols() > (1LL << 28))
        throw GuardExceeded("SC protograph too large to materialize");
    sc.bits.assign(static_cast<size_t>(sc.rows() * sc.cols()), 0);
    for (long long rho = 1; rho <= L; ++rho)
        for (int j = 0; j < part.kappa; ++j)
            for (int i = 0; i < part.gamma; ++i) {
                long long r = (rho - 1 + part.at(i, j)) * part.gamma + i;
                long long c = (rho - 1) * part.kappa + j;
                sc.bits[r * sc.cols() + c] = 1;
            }
    return sc;
}

} // namespace scforge
