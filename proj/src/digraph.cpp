#include "fspace/digraph.hpp"

#include <algorithm>
#include <functional>

namespace fspace {

Digraph to_digraph(const ZeroOneMatrix& m) {
    const int n = m.order();
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.at(i, j) == 1) adj[static_cast<std::size_t>(i) * n + j] = 1;
    return Digraph(n, std::move(adj));
}

SccResult scc(const Digraph& g) {
    const int n = g.size();
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<int> raw(static_cast<std::size_t>(n), -1);
    int next_index = 0;
    int raw_count = 0;

    // Iterative Tarjan: frame = (vertex, next neighbour to try).
    struct Frame {
        int v;
        int next;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < n) {
                int w = f.next++;
                if (!g.edge(f.v, w)) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        raw[w] = raw_count;
                        if (w == v) break;
                    }
                    ++raw_count;
                }
            }
        }
    }
    // Renumber in first-seen vertex order.
    SccResult result;
    result.component.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> remap(static_cast<std::size_t>(raw_count), -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v) {
        if (remap[raw[v]] < 0) remap[raw[v]] = next_id++;
        result.component[v] = remap[raw[v]];
    }
    result.count = next_id;
    return result;
}

namespace {

void extend_clique(const Digraph& g, int k, int from, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int v = from; v < g.size(); ++v) {
        bool ok = true;
        for (int u : current)
            if (!g.edge(u, v) || !g.edge(v, u)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(v);
        extend_clique(g, k, v + 1, current, out);
        current.pop_back();
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::vector<std::vector<int>> antichain_cliques(const Digraph& g, int k) {
    std::vector<std::vector<int>> out;
    if (k < 1) return out;
    std::vector<int> current;
    extend_clique(g, k, 0, current, out);
    return out;
}

std::string export_dot(const Digraph& g, const std::vector<std::string>& labels) {
    std::string out = "digraph gx {\n";
    for (int i = 0; i < g.size(); ++i)
        out += "  n" + std::to_string(i + 1) + " [label=" + quote(labels[i]) + "];\n";
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.edge(i, j))
                out += "  n" + std::to_string(i + 1) + " -> n" + std::to_string(j + 1) + ";\n";
    out += "}\n";
    return out;
}

std::string export_dot_hasse(const Poset& p) {
    const int n = p.size();
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < n; ++i)
        out += "  n" + std::to_string(i + 1) + " [label=" + quote(p.label(i)) + "];\n";
    std::vector<int> level_of(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) level_of[i] = point_height(p, i);
    const int h = *std::max_element(level_of.begin(), level_of.end());
    for (int level = 0; level <= h; ++level) {
        std::string group;
        for (int i = 0; i < n; ++i)
            if (level_of[i] == level) group += " n" + std::to_string(i + 1) + ";";
        out += "  { rank=same;" + group + " }\n";
    }
    for (auto [i, j] : covers(p))
        out += "  n" + std::to_string(i + 1) + " -> n" + std::to_string(j + 1) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace fspace
