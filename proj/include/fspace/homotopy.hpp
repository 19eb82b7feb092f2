#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"

namespace fspace {

enum class BeatKind { up, down, both };

const char* beat_kind_name(BeatKind k);

// A beat point with its witness: the minimum of F̂ (up) or the maximum of Û
// (down). When the point is both, the down witness is reported.
struct BeatPointReport {
    int point = 0;
    BeatKind kind = BeatKind::up;
    int witness = 0;
};

// Matrix criterion: x_i is an up beat point iff some row satisfies
// r_i - r_j = -e_i, a down beat point iff some column satisfies
// c_i - c_j = -e_i. Reports are sorted by point index.
std::vector<BeatPointReport> find_beat_points(const Poset& p);

enum class MoveKind { beat, weak_beat };

const char* move_kind_name(MoveKind k);

struct ReductionMove {
    int index = 0;       // index within the poset at the time of removal
    std::string label;   // removed point's label
    MoveKind move = MoveKind::beat;
    std::optional<std::string> witness;  // beat moves only
};

// Every removal flips the determinant sign once, so |det| and rank_bar of
// the final poset match the input's.
struct ReductionTrace {
    std::vector<ReductionMove> moves;
    int sign_flips() const { return static_cast<int>(moves.size()); }
};

// Stong core: repeatedly removes the lowest-index beat point until none
// remain. The result is a minimal finite space, unique up to homeomorphism.
std::pair<Poset, ReductionTrace> core(const Poset& p);

bool is_contractible(const Poset& p);

enum class WeakKind { down, up };

const char* weak_kind_name(WeakKind k);

struct WeakBeatPoint {
    int point = 0;
    WeakKind kind = WeakKind::down;
};

// x_i is a down (up) weak beat point iff Û_{x_i} (F̂_{x_i}) is nonempty and
// contractible, decided by a full core computation of the induced subposet.
// A point that is weak in both directions yields two entries (down first).
std::vector<WeakBeatPoint> find_weak_beat_points(const Poset& p);

// Removal-only simple-homotopy reduction: removes the lowest-index beat
// point while any exists, otherwise the lowest-index weak beat point, until
// neither remains. |det| and rank_bar are preserved at every step.
std::pair<Poset, ReductionTrace> weak_reduce(const Poset& p);

struct InvariantsBundle {
    BigInt det;            // det(X_M)
    BigInt abs_det;        // |det|, the simple homotopy invariant
    int rank_bar = 0;      // |X| - rank
    SumProfile sums;
    BigInt reduced_euler;  // χ̃ by independent chain counting
    bool euler_consistent = false;  // |det| == |χ̃|
};

InvariantsBundle invariants_bundle(const Poset& p);

// Canonical labelling: stable colour refinement seeded with
// (|U|, |F|, height), then lexicographic minimisation of the matrix bits
// over the permutations consistent with the refined ordered partition.
struct CanonicalForm {
    std::string bits;              // canonical matrix, row-major '0'/'1'
    std::vector<int> to_canonical; // canonical position of each point
};

CanonicalForm canonical_form(const Poset& p);

// Witnessing permutation σ with q.leq(σ(i), σ(j)) == p.leq(i, j), or nullopt.
std::optional<std::vector<int>> homeomorphism(const Poset& p, const Poset& q);
bool homeomorphic(const Poset& p, const Poset& q);

}  // namespace fspace
