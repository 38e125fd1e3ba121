#pragma once

#include <stdexcept>
#include <string>

namespace scforge {

// Thrown when an input violates a documented precondition.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed a configured size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeParams {
    int gamma = 3;   // column weight (VN degree)
    int kappa = 0;   // row weight (CN degree)
    int z = 1;       // circulant size
    int m = 1;       // memory (number of component matrices minus one)
    long long L = 1; // coupling length

    // Full validation used by solvers and the CLI. Low-level matrix
    // helpers stay permissive so toy inputs (z=1, gamma=2 blocks) remain
    // usable in tests.
    void validate() const;

    int stacked_rows() const { return (m + 1) * gamma; } // rows of the stacked replica PM
    int xi() const { return 2 * m + 1; }                 // working-window replica count
};

// Exact rational with denominator at most 2; stores twice the value.
struct Half {
    long long twice = 0;

    static Half from_int(long long v) { return Half{2 * v}; }
    static Half halves(long long t) { return Half{t}; }

    Half operator+(Half o) const { return Half{twice + o.twice}; }
    Half& operator+=(Half o) { twice += o.twice; return *this; }
    Half operator-(Half o) const { return Half{twice - o.twice}; }
    bool operator==(const Half&) const = default;
    bool operator<(Half o) const { return twice < o.twice; }

    bool is_integer() const { return twice % 2 == 0; }
    double as_double() const { return 0.5 * static_cast<double>(twice); }
    // Nearest integer, halves away from zero ("rounded weighted sum").
    long long rounded() const {
        long long q = twice / 2, r = twice % 2;
        if (r == 0) return q;
        return twice > 0 ? q + 1 : q - 1;
    }
};

} // namespace scforge
