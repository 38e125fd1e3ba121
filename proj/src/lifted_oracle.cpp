#include "scforge/lifted_oracle.hpp"

#include <algorithm>
#include <vector>

namespace scforge {

std::int64_t brute_force_lifted_count(const LiftedCode& code, std::int64_t guard) {
    const std::int64_t n = code.cols;
    if (n > 4096) throw GuardExceeded("lifted graph too large for the brute-force census");
    if (n * n > guard * 16) throw GuardExceeded("lifted census guard exceeded");

    const int words = static_cast<int>((n + 63) / 64);
    std::vector<std::uint64_t> adj(static_cast<size_t>(n) * words, 0);

    // share-a-CN adjacency; two shared CNs would be a 4-cycle
    std::vector<std::vector<std::int32_t>> row_cols(static_cast<size_t>(code.rows));
    for (std::int64_t c = 0; c < n; ++c)
        for (std::int32_t r : code.col_rows[static_cast<size_t>(c)])
            row_cols[r].push_back(static_cast<std::int32_t>(c));
    std::vector<std::uint8_t> shares(static_cast<size_t>(n), 0);
    for (std::int64_t p = 0; p < n; ++p) {
        std::fill(shares.begin(), shares.end(), 0);
        for (std::int32_t r : code.col_rows[static_cast<size_t>(p)])
            for (std::int32_t q : row_cols[r]) {
                if (q == p) continue;
                if (++shares[q] > 1)
                    throw ConfigError("lifted census requires girth >= 6 (found a 4-cycle)");
                adj[p * words + q / 64] |= 1ull << (q % 64);
            }
    }

    // count 4-cycles of the share graph with both diagonals non-adjacent;
    // each object is seen from its two diagonals
    std::int64_t twice = 0;
    std::vector<std::int32_t> common;
    for (std::int64_t p = 0; p < n; ++p)
        for (std::int64_t r = p + 1; r < n; ++r) {
            if ((adj[p * words + r / 64] >> (r % 64)) & 1ull) continue; // diagonal must be non-adjacent
            common.clear();
            for (int wd = 0; wd < words; ++wd) {
                std::uint64_t both = adj[p * words + wd] & adj[r * words + wd];
                while (both) {
                    common.push_back(wd * 64 + __builtin_ctzll(both));
                    both &= both - 1;
                }
            }
            for (size_t a = 0; a < common.size(); ++a)
                for (size_t b = a + 1; b < common.size(); ++b) {
                    std::int64_t q = common[a], s = common[b];
                    if (!((adj[q * words + s / 64] >> (s % 64)) & 1ull)) ++twice;
                }
        }
    return twice / 2;
}

} // namespace scforge
