#include "fspace/subposet_sums.hpp"

#include <cstdlib>
#include <string>

#include "fspace/config.hpp"
#include "fspace/errors.hpp"
#include "fspace/homotopy.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

int size_limit_override_or(int fallback) {
    const char* env = std::getenv("FSPACE_SIZE_LIMIT");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end && *end == '\0' && value > 0) return static_cast<int>(value);
    return fallback;
}

int gamma_size_limit() { return size_limit_override_or(kDefaultGammaLimit); }

BigInt det_plus_identity(const Poset& p) {
    IntMatrix m = IntMatrix::from(matrix_from_poset(p)) + IntMatrix::identity(p.size());
    return determinant(m);
}

namespace {

void check_gamma_size(const Poset& p, int size_cap) {
    const int cap = size_cap > 0 ? size_cap : gamma_size_limit();
    if (p.size() > cap)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "Γ subset sums capped at n <= " + std::to_string(cap));
}

BigInt principal_minor_sum(const Poset& p, int order) {
    // Σ det over induced subposets with `order` points.
    const int n = p.size();
    if (order == 0) return BigInt(1);
    BigInt sum = 0;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(subset.size()) == order) {
            sum += determinant(matrix_from_poset(induced(p, subset)));
            return;
        }
        for (int v = from; v < n; ++v) {
            if (n - v < order - static_cast<int>(subset.size())) break;
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return sum;
}

}  // namespace

BigInt gamma(const Poset& p, int i, int size_cap) {
    const int n = p.size();
    if (i < 0 || i > n)
        throw Error(ErrorCode::InvalidPoset, "Γ index must be between 0 and n");
    check_gamma_size(p, size_cap);
    return principal_minor_sum(p, n - i);
}

GammaTable gamma_table(const Poset& p, int size_cap) {
    check_gamma_size(p, size_cap);
    const int n = p.size();
    GammaTable t;
    t.gamma.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) t.gamma[i] = principal_minor_sum(p, n - i);
    t.det_plus_identity = det_plus_identity(p);
    return t;
}

PatternCounts count_patterns(const Poset& p) {
    const int n = p.size();
    PatternCounts c;
    auto counts = antichain_counts(p);
    c.a2 = counts.a2;
    c.a3 = counts.a3;
    c.l32 = 0;
    if (n >= 3) {
        const Poset l32_template =
            Poset::from_relations(3, {{0, 1}});  // y1 < y2, y3 incomparable
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int d = b + 1; d < n; ++d)
                    if (homeomorphic(induced(p, {a, b, d}), l32_template)) ++c.l32;
    }
    return c;
}

GammaReport verify_gamma_formulas(const Poset& p) {
    const int n = p.size();
    GammaReport r;
    r.table = gamma_table(p);
    r.patterns = count_patterns(p);
    r.codim1_zero = n < 1 || r.table.gamma[n - 1] == 0;
    r.codim2_matches = n < 2 || r.table.gamma[n - 2] == -r.patterns.a2;
    r.codim3_matches = n < 3 || r.table.gamma[n - 3] == r.patterns.l32 + 2 * r.patterns.a3;
    BigInt total = 0;
    for (const auto& g : r.table.gamma) total += g;
    r.sum_matches = total == r.table.det_plus_identity;
    return r;
}

}  // namespace fspace
