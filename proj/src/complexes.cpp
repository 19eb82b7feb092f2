#include "fspace/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fspace/errors.hpp"

namespace fspace {

namespace {

constexpr std::size_t kSimplexCap = std::size_t(1) << 20;

std::vector<std::vector<int>> close_under_faces(const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> all;
    for (const auto& facet : facets) {
        // all nonempty subsets
        const std::size_t m = facet.size();
        if (m > 60 || (std::size_t(1) << m) > kSimplexCap)
            throw Error(ErrorCode::SizeLimitExceeded, "facet too large to materialize");
        for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < m; ++b)
                if (mask >> b & 1) face.push_back(facet[b]);
            all.insert(std::move(face));
            if (all.size() > kSimplexCap)
                throw Error(ErrorCode::SizeLimitExceeded, "complex too large to materialize");
        }
    }
    std::vector<std::vector<int>> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 std::vector<std::vector<int>> facets) {
    const int nv = static_cast<int>(vertices.size());
    if (facets.empty())
        throw Error(ErrorCode::InvalidComplex, "a complex needs at least one facet");
    for (auto& facet : facets) {
        if (facet.empty())
            throw Error(ErrorCode::InvalidComplex, "empty facet");
        std::sort(facet.begin(), facet.end());
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
        for (int v : facet)
            if (v < 0 || v >= nv)
                throw Error(ErrorCode::InvalidComplex, "facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // drop facets dominated by a larger one
    std::vector<std::vector<int>> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j) {
            if (i == j || facets[j].size() <= facets[i].size()) continue;
            dominated = std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                      facets[i].end());
        }
        if (!dominated) maximal.push_back(facets[i]);
    }
    auto simplices = close_under_faces(maximal);
    return SimplicialComplex(std::move(vertices), std::move(maximal), std::move(simplices));
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (const auto& s : simplices_) {
        const std::size_t d = s.size() - 1;
        if (f.size() <= d) f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

SimplicialComplex order_complex(const Poset& p) {
    // Maximal chains = paths along cover edges from minimal points.
    const int n = p.size();
    auto cover_pairs = covers(p);
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
    for (auto [i, j] : cover_pairs) above[i].push_back(j);
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        if (above[v].empty())
            facets.push_back(chain);
        else
            for (int w : above[v]) self(self, w);
        chain.pop_back();
    };
    for (int v = 0; v < n; ++v)
        if (strict_down_set(p, v).empty()) dfs(dfs, v);
    return SimplicialComplex::from_facets(p.labels(), std::move(facets));
}

Poset face_poset(const SimplicialComplex& k) {
    const auto& simplices = k.simplices();
    const int n = static_cast<int>(simplices.size());
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string label = "{";
        for (std::size_t t = 0; t < simplices[i].size(); ++t) {
            if (t) label += ",";
            label += k.vertices()[simplices[i][t]];
        }
        label += "}";
        labels[i] = label;
    }
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[static_cast<std::size_t>(a) * n + b] =
                std::includes(simplices[b].begin(), simplices[b].end(), simplices[a].begin(),
                              simplices[a].end())
                    ? 1
                    : 0;
    return Poset::from_leq(n, leq, std::move(labels));
}

long long euler(const SimplicialComplex& k) {
    long long chi = 0;
    auto f = k.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0) ? f[d] : -f[d];
    return chi;
}

long long reduced_euler(const SimplicialComplex& k) { return euler(k) - 1; }

BigInt det_of_complex(const SimplicialComplex& k) {
    return abs(determinant(matrix_from_poset(face_poset(k))));
}

int rankbar_of_complex(const SimplicialComplex& k) { return rank_bar(face_poset(k)); }

BigInt reduced_euler_of_poset(const Poset& p) {
    const int n = p.size();
    // chains_ending[x][k] = number of k-element chains with maximum x,
    // filled in height order so dependencies are ready.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return strict_down_set(p, a).size() < strict_down_set(p, b).size();
    });
    std::vector<std::vector<BigInt>> chains_ending(
        static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    for (int x : order) {
        chains_ending[x][1] = 1;
        for (int y = 0; y < n; ++y)
            if (p.less(y, x))
                for (int k = 2; k <= n; ++k) chains_ending[x][k] += chains_ending[y][k - 1];
    }
    BigInt chi = 0;
    for (int k = 1; k <= n; ++k) {
        BigInt ck = 0;
        for (int x = 0; x < n; ++x) ck += chains_ending[x][k];
        chi += (k % 2 == 1) ? ck : -ck;
    }
    return chi - 1;
}

}  // namespace fspace
