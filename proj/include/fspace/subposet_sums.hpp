#pragma once

#include <vector>

#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"

namespace fspace {

// Γ table: gamma[i] = Γ_n^i, the sum of determinants of all induced
// subposets with n-i points (equivalently the (n-i)-order principal minors
// of X_M). gamma[0] = det(X), gamma[n] = 1, and the values telescope to
// det(X_M + I).
struct GammaTable {
    std::vector<BigInt> gamma;  // indices 0..n
    BigInt det_plus_identity;   // det(X_M + I), always 0 or 1
};

// det(X_M + I); equals 1 iff the poset is a chain, 0 otherwise.
BigInt det_plus_identity(const Poset& p);

// Γ_n^i by subset enumeration with the exact determinant per subset.
// Exponential; guarded by the size cap (default 14, FSPACE_SIZE_LIMIT
// overrides, a positive size_cap argument overrides both). Throws
// SizeLimitExceeded beyond the cap.
BigInt gamma(const Poset& p, int i, int size_cap = 0);

GammaTable gamma_table(const Poset& p, int size_cap = 0);

int gamma_size_limit();

struct PatternCounts {
    BigInt a2;   // 2-antichains
    BigInt a3;   // 3-antichains
    BigInt l32;  // induced 3-point subposets with exactly one comparable pair
};

// A2/A3 as in the trace-based counts; L32 by subset scan with a
// homeomorphism check against the template {y1<y2, y3}.
PatternCounts count_patterns(const Poset& p);

struct GammaReport {
    bool codim1_zero = false;        // Γ_n^{n-1} = 0
    bool codim2_matches = false;     // Γ_n^{n-2} = -A2
    bool codim3_matches = false;     // Γ_n^{n-3} = L32 + 2·A3
    bool sum_matches = false;        // Σ_i Γ_n^i = det(X+I)
    GammaTable table;
    PatternCounts patterns;
    bool all() const { return codim1_zero && codim2_matches && codim3_matches && sum_matches; }
};

// Checks the closed-form Γ identities against the brute-force table.
// Codimension clauses that need more points than the poset has hold
// vacuously.
GammaReport verify_gamma_formulas(const Poset& p);

}  // namespace fspace
