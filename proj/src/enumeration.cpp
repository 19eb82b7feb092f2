#include "fspace/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "fspace/config.hpp"
#include "fspace/errors.hpp"
#include "fspace/homotopy.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

Poset make_chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(n, rel);
}

Poset make_antichain(int n) { return Poset::from_relations(n, {}); }

Poset make_fence(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0)
            rel.emplace_back(i, i + 1);  // x_{i} < x_{i+1}
        else
            rel.emplace_back(i + 1, i);  // x_{i} > x_{i+1}
    }
    return Poset::from_relations(n, rel);
}

Poset make_sphere_model(int dimension) {
    if (dimension < 0)
        throw Error(ErrorCode::InvalidPoset, "sphere dimension must be >= 0");
    const int n = 2 * (dimension + 1);
    std::vector<std::pair<int, int>> rel;
    for (int low = 0; low <= dimension; ++low)
        for (int high = low + 1; high <= dimension; ++high)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) rel.emplace_back(2 * low + a, 2 * high + b);
    return Poset::from_relations(n, rel);
}

Poset make_circle8() {
    // x1<x5>x2<x6>x3<x7>x4<x8>x1
    return Poset::from_relations(
        8, {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7}});
}

Poset make_twocircles8() {
    // y1<y5>y2<y6>y1 and y3<y7>y4<y8>y3
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i) labels.push_back("y" + std::to_string(i));
    return Poset::from_relations(
        8, {{0, 4}, {1, 4}, {1, 5}, {0, 5}, {2, 6}, {3, 6}, {3, 7}, {2, 7}},
        std::move(labels));
}

Poset make_weakbeat4() {
    // a < b < x, a < c < x
    return Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                 {"a", "b", "c", "x"});
}

Poset make_family(const FamilySpec& spec) {
    const auto& name = spec.name;
    if (name == "chain") return make_chain(spec.size);
    if (name == "antichain") return make_antichain(spec.size);
    if (name == "fence") return make_fence(spec.size);
    if (name == "sphere_model") return make_sphere_model(spec.size);
    if (name == "circle8") return make_circle8();
    if (name == "twocircles8") return make_twocircles8();
    if (name == "weakbeat4") return make_weakbeat4();
    throw Error(ErrorCode::InvalidPoset, "unknown family '" + name + "'");
}

int enumeration_size_limit() { return size_limit_override_or(kDefaultEnumerationLimit); }

namespace {

// Downset extension: point i (in label order, a linear extension) chooses a
// downward closed strict down-set among points 0..i-1. Every labelled poset
// whose labelling is a linear extension arises exactly once; canonical forms
// collapse the isomorphic duplicates.
void extend(int n, int next, std::vector<std::uint32_t>& down,
            std::unordered_set<std::string>& seen) {
    if (next == n) {
        std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            leq[static_cast<std::size_t>(i) * n + i] = 1;
            for (int j = 0; j < n; ++j)
                if (down[i] >> j & 1) leq[static_cast<std::size_t>(j) * n + i] = 1;
        }
        seen.insert(canonical_form(Poset::from_leq(n, leq)).bits);
        return;
    }
    const std::uint32_t all_prev = next == 0 ? 0 : (std::uint32_t(1) << next) - 1;
    for (std::uint32_t mask = 0;; ++mask) {
        bool closed = true;
        for (int j = 0; j < next && closed; ++j)
            if (mask >> j & 1)
                if ((down[j] & mask) != down[j]) closed = false;
        if (closed) {
            down[next] = mask;
            extend(n, next + 1, down, seen);
        }
        if (mask == all_prev) break;
    }
    down[next] = 0;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidPoset, "enumeration needs n >= 1");
    const int limit = std::min(enumeration_size_limit(), 16);  // bitmask width guard
    if (n > limit)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "enumeration capped at n <= " + std::to_string(limit));
    std::unordered_set<std::string> seen;
    std::vector<std::uint32_t> down(static_cast<std::size_t>(n), 0);
    extend(n, 0, down, seen);
    std::vector<std::string> bits(seen.begin(), seen.end());
    std::sort(bits.begin(), bits.end());
    std::vector<Poset> out;
    out.reserve(bits.size());
    for (const auto& b : bits) {
        std::vector<std::uint8_t> entries(b.size());
        for (std::size_t t = 0; t < b.size(); ++t) entries[t] = b[t] == '1' ? 1 : 0;
        out.push_back(poset_from_matrix(ZeroOneMatrix::from_entries(n, std::move(entries))));
    }
    return out;
}

IntPolynomial fence_charpoly_closed_form(int n) {
    // (-1)^n λ (λ - (n-2)) (λ+1)^(n-2)
    IntPolynomial sign = IntPolynomial::constant(n % 2 == 0 ? 1 : -1);
    IntPolynomial lambda({BigInt(0), BigInt(1)});
    IntPolynomial shifted({BigInt(-(n - 2)), BigInt(1)});
    IntPolynomial plus_one_power = IntPolynomial::constant(1);
    IntPolynomial plus_one({BigInt(1), BigInt(1)});
    for (int t = 0; t < n - 2; ++t) plus_one_power = plus_one_power * plus_one;
    return sign * lambda * shifted * plus_one_power;
}

bool fence_charpoly_check(int n) {
    if (n < 2) throw Error(ErrorCode::InvalidPoset, "fence check needs n >= 2");
    return char_poly(matrix_from_poset(make_fence(n))) == fence_charpoly_closed_form(n);
}

}  // namespace fspace
