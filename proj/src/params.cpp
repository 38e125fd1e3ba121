#include "scforge/params.hpp"

namespace scforge {

void CodeParams::validate() const {
    if (gamma == 2)
        throw ConfigError(
            "gamma=2 is rejected: in a column-weight-2 code every cycle is an "
            "unlabeled low-weight codeword, so the common-substructure "
            "minimization this tool performs does not apply; use gamma >= 3");
    if (gamma < 3) throw ConfigError("gamma must be >= 3");
    if (kappa < 0) throw ConfigError("kappa must be non-negative");
    if (m < 0) throw ConfigError("m must be non-negative");
    if (L < 1) throw ConfigError("L must be >= 1");
    if (z <= kappa)
        throw ConfigError("circulant size z must exceed kappa (base codes have no "
                          "zero circulants and z > kappa)");
    if (stacked_rows() > 20)
        throw ConfigError("(m+1)*gamma above 20 is not supported");
}

} // namespace scforge
