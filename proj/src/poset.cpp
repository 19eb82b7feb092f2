#include "fspace/poset.hpp"

#include <algorithm>
#include <numeric>

namespace fspace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i + 1);
    return labels;
}

namespace {

std::vector<std::string> resolve_labels(int n, std::vector<std::string> labels) {
    if (labels.empty()) return default_labels(n);
    if (static_cast<int>(labels.size()) != n)
        throw Error(ErrorCode::InvalidPoset, "expected " + std::to_string(n) +
                                                 " labels, got " + std::to_string(labels.size()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[i] == labels[j])
                throw Error(ErrorCode::InvalidPoset, "duplicate label '" + labels[i] + "'");
    return labels;
}

std::string point_pair(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Poset Poset::from_leq(int n, const std::vector<std::uint8_t>& leq,
                      std::vector<std::string> labels) {
    if (n < 1) throw Error(ErrorCode::InvalidPoset, "a poset needs at least one point");
    if (leq.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorCode::InvalidPoset, "relation table has wrong size");
    auto at = [&](int i, int j) { return leq[static_cast<std::size_t>(i) * n + j] != 0; };
    for (int i = 0; i < n; ++i)
        if (!at(i, i))
            throw Error(ErrorCode::InvalidPoset,
                        "not reflexive at " + point_pair(i, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && at(i, j) && at(j, i))
                throw Error(ErrorCode::InvalidPoset,
                            "not antisymmetric at " + point_pair(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j))
                for (int k = 0; k < n; ++k)
                    if (at(j, k) && !at(i, k))
                        throw Error(ErrorCode::InvalidPoset,
                                    "not transitive: " + point_pair(i, j) + "," +
                                        point_pair(j, k) + " but not " + point_pair(i, k));
    std::vector<std::uint8_t> normalized(leq.size());
    for (std::size_t t = 0; t < leq.size(); ++t) normalized[t] = leq[t] ? 1 : 0;
    return Poset(n, std::move(normalized), resolve_labels(n, std::move(labels)));
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& strict_pairs,
                            std::vector<std::string> labels) {
    if (n < 1) throw Error(ErrorCode::InvalidPoset, "a poset needs at least one point");
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (auto [i, j] : strict_pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw Error(ErrorCode::InvalidPoset, "relation index out of range");
        if (i == j)
            throw Error(ErrorCode::InvalidPoset,
                        "strict relation " + point_pair(i, j) + " relates a point to itself");
        leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[static_cast<std::size_t>(i) * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq[static_cast<std::size_t>(k) * n + j])
                        leq[static_cast<std::size_t>(i) * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq[static_cast<std::size_t>(i) * n + j] && leq[static_cast<std::size_t>(j) * n + i])
                throw Error(ErrorCode::InvalidPoset,
                            "relations contain a cycle through " + point_pair(i, j));
    return Poset(n, std::move(leq), resolve_labels(n, std::move(labels)));
}

std::vector<int> down_set(const Poset& p, int i) {
    std::vector<int> out;
    for (int j = 0; j < p.size(); ++j)
        if (p.leq(j, i)) out.push_back(j);
    return out;
}

std::vector<int> up_set(const Poset& p, int i) {
    std::vector<int> out;
    for (int j = 0; j < p.size(); ++j)
        if (p.leq(i, j)) out.push_back(j);
    return out;
}

std::vector<int> cset(const Poset& p, int i) {
    std::vector<int> out;
    for (int j = 0; j < p.size(); ++j)
        if (p.leq(j, i) || p.leq(i, j)) out.push_back(j);
    return out;
}

std::vector<int> strict_down_set(const Poset& p, int i) {
    std::vector<int> out;
    for (int j = 0; j < p.size(); ++j)
        if (j != i && p.leq(j, i)) out.push_back(j);
    return out;
}

std::vector<int> strict_up_set(const Poset& p, int i) {
    std::vector<int> out;
    for (int j = 0; j < p.size(); ++j)
        if (j != i && p.leq(i, j)) out.push_back(j);
    return out;
}

std::vector<std::pair<int, int>> covers(const Poset& p) {
    const int n = p.size();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !p.leq(i, j)) continue;
            // r_i + c_j must vanish exactly at i and j: a zero at k means
            // x_i <= x_k <= x_j, i.e. an intermediate point.
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    return out;
}

namespace {

// Longest-chain DP in |U|-size order (a linear extension).
std::vector<int> all_point_heights(const Poset& p) {
    const int n = p.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return strict_down_set(p, a).size() < strict_down_set(p, b).size();
    });
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    for (int x : order)
        for (int y = 0; y < n; ++y)
            if (p.less(y, x)) h[x] = std::max(h[x], h[y] + 1);
    return h;
}

}  // namespace

int point_height(const Poset& p, int i) { return all_point_heights(p)[i]; }

int height(const Poset& p) {
    auto h = all_point_heights(p);
    return *std::max_element(h.begin(), h.end());
}

namespace {

// Kuhn augmenting paths on the split graph (left copy -> right copy, edge
// for every strict relation). Max matching size m gives width = n - m.
bool augment(const Poset& p, int u, std::vector<int>& match_right, std::vector<char>& used) {
    for (int v = 0; v < p.size(); ++v) {
        if (!p.less(u, v) || used[v]) continue;
        used[v] = 1;
        if (match_right[v] < 0 || augment(p, match_right[v], match_right, used)) {
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

int width(const Poset& p) {
    const int n = p.size();
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    int matched = 0;
    for (int u = 0; u < n; ++u) {
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        if (augment(p, u, match_right, used)) ++matched;
    }
    return n - matched;
}

std::vector<int> components(const Poset& p) {
    const int n = p.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && p.comparable(u, v)) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

int component_count(const Poset& p) {
    auto comp = components(p);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

ExtremalPoints extremal_points(const Poset& p) {
    const int n = p.size();
    ExtremalPoints out;
    auto sums = sum_profile(p);
    for (int i = 0; i < n; ++i) {
        if (sums.col_sums[i] == n - 1) out.minimal.push_back(i);
        if (sums.row_sums[i] == n - 1) out.maximal.push_back(i);
        if (sums.row_sums[i] == 0) out.minimum = i;
        if (sums.col_sums[i] == 0) out.maximum = i;
    }
    return out;
}

bool is_chain_sequence(const Poset& p, const std::vector<int>& seq) {
    for (int i : seq)
        if (i < 0 || i >= p.size())
            throw Error(ErrorCode::InvalidPoset, "chain index out of range");
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] == seq[b]) return false;
    for (std::size_t a = 0; a + 1 < seq.size(); ++a)
        if (!p.leq(seq[a], seq[a + 1])) return false;
    return true;
}

SumProfile sum_profile(const Poset& p) {
    const int n = p.size();
    SumProfile s;
    s.row_sums.assign(static_cast<std::size_t>(n), 0);
    s.col_sums.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!p.leq(i, j)) {
                ++s.row_sums[i];
                ++s.col_sums[j];
                ++s.total;
            }
    return s;
}

Poset opposite(const Poset& p) {
    const int n = p.size();
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[static_cast<std::size_t>(i) * n + j] = p.leq(j, i) ? 1 : 0;
    return Poset::from_leq(n, leq, p.labels());
}

Poset induced(const Poset& p, const std::vector<int>& points) {
    const int m = static_cast<int>(points.size());
    for (int i : points)
        if (i < 0 || i >= p.size())
            throw Error(ErrorCode::InvalidPoset, "induced point out of range");
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
    std::vector<std::string> labels(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        labels[a] = p.label(points[a]);
        for (int b = 0; b < m; ++b)
            leq[static_cast<std::size_t>(a) * m + b] = p.leq(points[a], points[b]) ? 1 : 0;
    }
    return Poset::from_leq(m, leq, std::move(labels));
}

Poset remove_point(const Poset& p, int i) {
    if (p.size() <= 1)
        throw Error(ErrorCode::InvalidPoset, "cannot remove the last point");
    std::vector<int> keep;
    for (int j = 0; j < p.size(); ++j)
        if (j != i) keep.push_back(j);
    return induced(p, keep);
}

}  // namespace fspace
