#pragma once

// Independent brute-force oracles for the property and acceptance suites.
// Everything here is deliberately naive (cofactor expansion, full subset or
// permutation scans) and kept separate from the library implementations it
// checks.

#include <optional>
#include <random>
#include <vector>

#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace oracles {

// One poset per homeomorphism class, cached across tests.
const std::vector<fspace::Poset>& census(int n);

// Determinant by recursive Laplace expansion along the first row.
fspace::BigInt naive_determinant(const fspace::IntMatrix& m);
fspace::BigInt naive_determinant(const fspace::ZeroOneMatrix& m);

// Number of k-element antichains by subset scan.
long count_antichains(const fspace::Poset& p, int k);

// Number of induced 3-point subposets with exactly one comparable pair.
long count_l32(const fspace::Poset& p);

// Homeomorphism test over all n! permutations (n <= 8 sensible).
bool brute_homeomorphic(const fspace::Poset& p, const fspace::Poset& q);

// Transitive reduction by triple-loop elimination of implied pairs.
std::vector<std::pair<int, int>> transitive_reduction(const fspace::Poset& p);

// Maximum clique of the incomparability graph by full subset scan.
int max_incomparability_clique(const fspace::Poset& p);

// Beat points straight from the order-theoretic definition.
struct DefinitionBeatPoint {
    int point;
    bool down;  // Û has a maximum
    bool up;    // F̂ has a minimum
    std::optional<int> down_witness;
    std::optional<int> up_witness;
};
std::vector<DefinitionBeatPoint> beat_points_by_definition(const fspace::Poset& p);

// All labelled posets on n points, by filtering every zero/one matrix with
// zero diagonal through the membership check. 2^(n^2-n) candidates.
std::vector<fspace::Poset> labelled_posets_by_matrix_filter(int n);

// Random poset: random DAG edges on a shuffled order, closed transitively.
fspace::Poset random_poset(std::mt19937_64& rng, int n);

// Adds one new point that is a beat point by construction (down: its strict
// down-set is U_w for a random w and its up-set a random up-closed subset of
// F̂_w; up: dual). The new point is spliced at a random position.
fspace::Poset attach_random_beat_point(std::mt19937_64& rng, const fspace::Poset& p);

}  // namespace oracles
