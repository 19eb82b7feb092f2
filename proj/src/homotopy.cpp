#include "fspace/homotopy.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "fspace/complexes.hpp"
#include "fspace/errors.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

const char* beat_kind_name(BeatKind k) {
    switch (k) {
        case BeatKind::up: return "up";
        case BeatKind::down: return "down";
        default: return "both";
    }
}

const char* move_kind_name(MoveKind k) {
    return k == MoveKind::beat ? "beat" : "weak-beat";
}

const char* weak_kind_name(WeakKind k) { return k == WeakKind::down ? "down" : "up"; }

std::vector<BeatPointReport> find_beat_points(const Poset& p) {
    const ZeroOneMatrix m = matrix_from_poset(p);
    const int n = m.order();
    std::vector<BeatPointReport> out;
    for (int i = 0; i < n; ++i) {
        std::optional<int> up_witness, down_witness;
        for (int j = 0; j < n && !up_witness; ++j) {
            if (j == i) continue;
            // r_i - r_j = -e_i: rows agree away from i, and x_{j,i} = 1.
            bool ok = m.at(j, i) == 1 && m.at(i, i) == 0;
            for (int k = 0; k < n && ok; ++k)
                if (k != i && m.at(i, k) != m.at(j, k)) ok = false;
            if (ok) up_witness = j;
        }
        for (int j = 0; j < n && !down_witness; ++j) {
            if (j == i) continue;
            bool ok = m.at(i, j) == 1 && m.at(i, i) == 0;
            for (int k = 0; k < n && ok; ++k)
                if (k != i && m.at(k, i) != m.at(k, j)) ok = false;
            if (ok) down_witness = j;
        }
        if (!up_witness && !down_witness) continue;
        BeatPointReport r;
        r.point = i;
        if (up_witness && down_witness) {
            r.kind = BeatKind::both;
            r.witness = *down_witness;
        } else if (up_witness) {
            r.kind = BeatKind::up;
            r.witness = *up_witness;
        } else {
            r.kind = BeatKind::down;
            r.witness = *down_witness;
        }
        out.push_back(r);
    }
    return out;
}

std::pair<Poset, ReductionTrace> core(const Poset& p) {
    Poset current = p;
    ReductionTrace trace;
    while (true) {
        auto beats = find_beat_points(current);
        if (beats.empty()) break;
        const BeatPointReport& b = beats.front();
        ReductionMove move;
        move.index = b.point;
        move.label = current.label(b.point);
        move.move = MoveKind::beat;
        move.witness = current.label(b.witness);
        trace.moves.push_back(std::move(move));
        current = remove_point(current, b.point);
    }
    return {std::move(current), std::move(trace)};
}

bool is_contractible(const Poset& p) { return core(p).first.size() == 1; }

std::vector<WeakBeatPoint> find_weak_beat_points(const Poset& p) {
    std::vector<WeakBeatPoint> out;
    for (int i = 0; i < p.size(); ++i) {
        auto below = strict_down_set(p, i);
        if (!below.empty() && is_contractible(induced(p, below)))
            out.push_back({i, WeakKind::down});
        auto above = strict_up_set(p, i);
        if (!above.empty() && is_contractible(induced(p, above)))
            out.push_back({i, WeakKind::up});
    }
    return out;
}

std::pair<Poset, ReductionTrace> weak_reduce(const Poset& p) {
    Poset current = p;
    ReductionTrace trace;
    while (true) {
        auto beats = find_beat_points(current);
        if (!beats.empty()) {
            const BeatPointReport& b = beats.front();
            ReductionMove move;
            move.index = b.point;
            move.label = current.label(b.point);
            move.move = MoveKind::beat;
            move.witness = current.label(b.witness);
            trace.moves.push_back(std::move(move));
            current = remove_point(current, b.point);
            continue;
        }
        auto weaks = find_weak_beat_points(current);
        if (weaks.empty()) break;
        const WeakBeatPoint& w = weaks.front();
        ReductionMove move;
        move.index = w.point;
        move.label = current.label(w.point);
        move.move = MoveKind::weak_beat;
        trace.moves.push_back(std::move(move));
        current = remove_point(current, w.point);
    }
    return {std::move(current), std::move(trace)};
}

InvariantsBundle invariants_bundle(const Poset& p) {
    InvariantsBundle b;
    b.det = determinant(matrix_from_poset(p));
    b.abs_det = abs(b.det);
    b.rank_bar = rank_bar(p);
    b.sums = sum_profile(p);
    b.reduced_euler = reduced_euler_of_poset(p);
    b.euler_consistent = b.abs_det == abs(b.reduced_euler);
    return b;
}

namespace {

// Stable colour refinement. Seed colours from (|U|, |F|, height); then
// re-colour by (colour, multiset of colours strictly below, multiset of
// colours strictly above) until the number of colours stops growing.
std::vector<int> refine_colors(const Poset& p) {
    const int n = p.size();
    std::vector<int> color(static_cast<std::size_t>(n));
    {
        std::map<std::tuple<int, int, int>, int> ranks;
        std::vector<std::tuple<int, int, int>> seed(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            seed[i] = {static_cast<int>(down_set(p, i).size()),
                       static_cast<int>(up_set(p, i).size()), point_height(p, i)};
            ranks[seed[i]] = 0;
        }
        int next = 0;
        for (auto& [key, rank] : ranks) rank = next++;
        for (int i = 0; i < n; ++i) color[i] = ranks[seed[i]];
    }
    while (true) {
        using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::vector<Signature> sig(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int> below, above;
            for (int j = 0; j < n; ++j) {
                if (p.less(j, i)) below.push_back(color[j]);
                if (p.less(i, j)) above.push_back(color[j]);
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            sig[i] = {color[i], std::move(below), std::move(above)};
        }
        std::map<Signature, int> ranks;
        for (int i = 0; i < n; ++i) ranks[sig[i]] = 0;
        int next = 0;
        for (auto& [key, rank] : ranks) rank = next++;
        std::vector<int> refined(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) refined[i] = ranks[sig[i]];
        int old_count = 1 + *std::max_element(color.begin(), color.end());
        if (next == old_count) return refined;
        color = std::move(refined);
    }
}

struct CanonicalSearch {
    const Poset& p;
    int n;
    std::vector<std::vector<int>> classes;  // points grouped by colour rank
    std::vector<int> assignment;            // assignment[pos] = original point
    std::vector<char> used;
    std::string best_bits;
    std::vector<int> best_assignment;

    void try_complete() {
        std::string bits(static_cast<std::size_t>(n) * n, '0');
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                bits[static_cast<std::size_t>(a) * n + b] =
                    p.leq(assignment[a], assignment[b]) ? '0' : '1';
        if (best_bits.empty() || bits < best_bits) {
            best_bits = std::move(bits);
            best_assignment = assignment;
        }
    }

    void search(std::size_t class_idx, int pos) {
        if (class_idx == classes.size()) {
            try_complete();
            return;
        }
        const auto& cls = classes[class_idx];
        if (pos == static_cast<int>(cls.size())) {
            search(class_idx + 1, 0);
            return;
        }
        for (int point : cls) {
            if (used[point]) continue;
            used[point] = 1;
            assignment.push_back(point);
            search(class_idx, pos + 1);
            assignment.pop_back();
            used[point] = 0;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
    const int n = p.size();
    std::vector<int> color = refine_colors(p);
    const int color_count = 1 + *std::max_element(color.begin(), color.end());
    CanonicalSearch s{p, n, {}, {}, std::vector<char>(static_cast<std::size_t>(n), 0), {}, {}};
    s.classes.resize(static_cast<std::size_t>(color_count));
    for (int i = 0; i < n; ++i) s.classes[color[i]].push_back(i);
    s.assignment.reserve(static_cast<std::size_t>(n));
    s.search(0, 0);
    CanonicalForm out;
    out.bits = std::move(s.best_bits);
    out.to_canonical.assign(static_cast<std::size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos) out.to_canonical[s.best_assignment[pos]] = pos;
    return out;
}

std::optional<std::vector<int>> homeomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return std::nullopt;
    CanonicalForm cp = canonical_form(p);
    CanonicalForm cq = canonical_form(q);
    if (cp.bits != cq.bits) return std::nullopt;
    // σ = cq⁻¹ ∘ cp maps p-points through the shared canonical order.
    const int n = p.size();
    std::vector<int> from_canonical(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) from_canonical[cq.to_canonical[i]] = i;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[i] = from_canonical[cp.to_canonical[i]];
    return sigma;
}

bool homeomorphic(const Poset& p, const Poset& q) { return homeomorphism(p, q).has_value(); }

}  // namespace fspace
