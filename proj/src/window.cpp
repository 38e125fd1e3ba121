#include "scforge/window.hpp"

namespace scforge {

Window build_window(const PartitionMatrix& part, [[maybe_unused]] const CodeParams& p) {
    Window w;
    w.gamma = part.gamma;
    w.kappa = part.kappa;
    w.m = part.m;
    w.xi = 2 * part.m + 1;
    w.rows = (w.xi + w.m) * w.gamma;
    w.cols = w.xi * w.kappa;
    if (w.rows > 31) throw GuardExceeded("window has more than 31 rows");
    w.row_adj.resize(w.rows);
    w.col_adj.resize(w.cols);
    w.col_mask.assign(w.cols, 0);
    for (int rho = 1; rho <= w.xi; ++rho)
        for (int j = 0; j < w.kappa; ++j) {
            const int c = (rho - 1) * w.kappa + j;
            for (int i = 0; i < w.gamma; ++i) {
                const int r = (rho - 1 + part.at(i, j)) * w.gamma + i;
                w.row_adj[r].push_back(static_cast<std::int16_t>(c));
                w.col_adj[c].push_back(static_cast<std::int16_t>(r));
                w.col_mask[c] |= 1u << r;
            }
        }
    return w;
}

} // namespace scforge
