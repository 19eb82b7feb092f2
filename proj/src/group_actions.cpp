#include "fspace/group_actions.hpp"

#include <algorithm>
#include <string>

#include "fspace/errors.hpp"

namespace fspace {

Permutation compose(const Permutation& g, const Permutation& h) {
    Permutation out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
    return out;
}

Permutation inverse(const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = static_cast<int>(i);
    return out;
}

namespace {

bool is_permutation(const Permutation& g, int n) {
    if (static_cast<int>(g.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : g) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

GroupAction validate_action(const Poset& p, const std::vector<Permutation>& perms) {
    const int n = p.size();
    const int m = static_cast<int>(perms.size());
    if (m == 0) throw Error(ErrorCode::NotAGroup, "no group elements given");
    for (const auto& g : perms)
        if (!is_permutation(g, n))
            throw Error(ErrorCode::NotAGroup, "element is not a permutation of the points");
    for (int i = 0; i < n; ++i)
        if (perms[0][i] != i)
            throw Error(ErrorCode::NotAGroup, "first element must be the identity");
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (perms[a] == perms[b]) throw Error(ErrorCode::NotAGroup, "duplicate element");

    GroupAction action;
    action.elements = perms;
    action.composition.assign(static_cast<std::size_t>(m), std::vector<int>(m, -1));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Permutation prod = compose(perms[a], perms[b]);
            auto it = std::find(perms.begin(), perms.end(), prod);
            if (it == perms.end())
                throw Error(ErrorCode::NotAGroup,
                            "not closed under composition (g" + std::to_string(a + 1) + "∘g" +
                                std::to_string(b + 1) + " missing)");
            action.composition[a][b] = static_cast<int>(it - perms.begin());
        }

    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.leq(i, j) != p.leq(perms[a][i], perms[a][j]))
                    throw Error(ErrorCode::NotOrderPreserving,
                                "g" + std::to_string(a + 1) + " breaks the relation on (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

    for (int a = 1; a < m; ++a)
        for (int i = 0; i < n; ++i)
            if (perms[a][i] == i)
                throw Error(ErrorCode::NotFree, "g" + std::to_string(a + 1) + " fixes point " +
                                                    std::to_string(i + 1));

    // Free orbits all have exactly m points, so this cannot fire once the
    // checks above pass; kept as a backstop for the block arithmetic.
    if (n % m != 0)
        throw Error(ErrorCode::OrbitSizeMismatch,
                    std::to_string(n) + " points cannot split into orbits of size " +
                        std::to_string(m));
    return action;
}

BlockForm block_form(const Poset& p, const GroupAction& action) {
    const int n = p.size();
    const int m = action.order();
    const int d = n / m;

    BlockForm out{.domain = {},
                  .point_order = {},
                  .reordered = matrix_from_poset(p),
                  .block_of = {},
                  .latin_verified = false};

    // Greedy fundamental domain: lowest index not yet covered by an orbit.
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n && static_cast<int>(out.domain.size()) < d; ++i) {
        if (covered[i]) continue;
        out.domain.push_back(i);
        for (const auto& g : action.elements) covered[g[i]] = 1;
    }

    out.point_order.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < m; ++a)
        for (int rep : out.domain) out.point_order.push_back(action.elements[a][rep]);

    Poset reordered_poset = induced(p, out.point_order);
    out.reordered = matrix_from_poset(reordered_poset);

    // Block (i,j) must equal block (1,s) with g_s = g_i⁻¹ ∘ g_j.
    std::vector<int> inverse_index(static_cast<std::size_t>(m), -1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (action.composition[a][b] == 0) inverse_index[a] = b;

    out.block_of.assign(static_cast<std::size_t>(m), std::vector<int>(m, -1));
    out.latin_verified = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int s = action.composition[inverse_index[a]][b];
            out.block_of[a][b] = s;
            for (int x = 0; x < d && out.latin_verified; ++x)
                for (int y = 0; y < d; ++y)
                    if (out.reordered.at(a * d + x, b * d + y) !=
                        out.reordered.at(0 * d + x, s * d + y)) {
                        out.latin_verified = false;
                        break;
                    }
        }
    if (!out.latin_verified)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "block structure does not match the free action");
    return out;
}

Z2Factorization z2_det_factorization(const Poset& p, const GroupAction& action) {
    if (action.order() != 2)
        throw Error(ErrorCode::NotZ2,
                    "group has order " + std::to_string(action.order()) + ", need 2");
    BlockForm blocks = block_form(p, action);
    const int d = p.size() / 2;
    IntMatrix a11(d), a12(d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            a11.at(x, y) = blocks.reordered.at(x, y);
            a12.at(x, y) = blocks.reordered.at(x, d + y);
        }
    Z2Factorization f;
    f.det_sum = determinant(a11 + a12);
    f.det_difference = determinant(a11 - a12);
    f.product = f.det_sum * f.det_difference;
    f.det_full = determinant(matrix_from_poset(p));
    if (f.product != f.det_full)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "ℤ₂ factorization does not reproduce det(X_M)");
    return f;
}

OrbitSumReport orbit_sum_check(const Poset& p, const GroupAction& action) {
    OrbitSumReport r;
    r.group_order = action.order();
    for (int i = 0; i < p.size(); ++i) {
        r.sum_down += static_cast<long long>(down_set(p, i).size());
        r.sum_up += static_cast<long long>(up_set(p, i).size());
    }
    r.down_divisible = r.sum_down % r.group_order == 0;
    r.up_divisible = r.sum_up % r.group_order == 0;
    return r;
}

}  // namespace fspace
