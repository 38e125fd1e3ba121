#pragma once

#include <cstdint>
#include <vector>

#include "scforge/candidates.hpp"
#include "scforge/params.hpp"
#include "scforge/partition.hpp"

namespace scforge {

struct CirculantPowers {
    int gamma = 0, kappa = 0;
    std::vector<std::int32_t> f; // gamma*kappa, reduced mod z

    std::int32_t at(int i, int j) const { return f[static_cast<size_t>(i) * kappa + j]; }
    std::int32_t& at(int i, int j) { return f[static_cast<size_t>(i) * kappa + j]; }

    // power table with the zero sentinel the condition batches expect
    std::vector<std::int32_t> table() const {
        std::vector<std::int32_t> t = f;
        t.push_back(0);
        return t;
    }
};

// Separable initial powers f(i,j) = (i^2)(2j) mod z; gives girth >= 6 for the
// parameter sets this tool targets.
CirculantPowers scb_powers(const CodeParams& p);

struct ActivityResult {
    std::vector<std::uint8_t> eq8ok;   // per candidate
    std::vector<std::uint8_t> conn_ok; // per connection
    std::vector<std::uint8_t> active;  // eq8ok and no realized internal connection
    std::int64_t f_sc = 0;             // weighted lifted count
    std::int64_t forty = 0;            // eq8ok with both diagonals realized (whole window)
    std::int64_t girth_violations = 0; // satisfied 4-cycle classes
};

ActivityResult evaluate_activity(const CandidateSet& set, const CirculantPowers& powers,
                                 long long L);

bool is_active(const CandidateSet& set, int cand_id, const CirculantPowers& powers);

std::int64_t count_f_sc(const CandidateSet& set, const CirculantPowers& powers, long long L);
std::int64_t count_f_sc(const PartitionMatrix& part, const CirculantPowers& powers,
                        const CodeParams& p);

bool girth_ok(const CandidateSet& set, const CirculantPowers& powers);
bool girth_ok(const PartitionMatrix& part, const CirculantPowers& powers, const CodeParams& p);

// (4,0) detection for gamma = 3: candidates meeting the length-8 condition
// whose both diagonal VN pairs gain an internal connection after lifting.
std::int64_t count_40_uas(const PartitionMatrix& part, const CirculantPowers& powers,
                          const CodeParams& p);

// Lifted parity-check matrix, stored as sorted CN lists per VN.
struct LiftedCode {
    CodeParams p;
    PartitionMatrix partition;
    CirculantPowers powers;
    std::int64_t rows = 0, cols = 0;
    std::vector<std::vector<std::int32_t>> col_rows;
};

LiftedCode assemble_parity_matrix(const PartitionMatrix& part, const CirculantPowers& powers,
                                  const CodeParams& p);

} // namespace scforge
