#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fspace/enumeration.hpp"
#include "fspace/errors.hpp"
#include "fspace/group_actions.hpp"
#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"
#include "fspace/zero_one_matrix.hpp"

using namespace fspace;

namespace {

Permutation identity_perm(int n) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
}

// Antipodal map of the sphere model: swap the two points at each height.
std::vector<Permutation> antipodal(int dimension) {
    const int n = 2 * (dimension + 1);
    Permutation swap_levels(n);
    for (int h = 0; h <= dimension; ++h) {
        swap_levels[2 * h] = 2 * h + 1;
        swap_levels[2 * h + 1] = 2 * h;
    }
    return {identity_perm(n), swap_levels};
}

// k disjoint copies of the regular action of a permutation group, with
// right-invariant relations between consecutive levels: (g, level) <
// (g∘w, level+1) for w in a random subset. The left action g ↦ (g∘-, id on
// levels) is free and order-preserving by construction.
struct GluedAction {
    Poset poset;
    std::vector<Permutation> perms;
};

GluedAction glue_orbits(const std::vector<Permutation>& group, int levels,
                        std::mt19937_64& rng) {
    const int m = static_cast<int>(group.size());
    const int n = m * levels;
    // composition table index
    auto index_of = [&](const Permutation& g) {
        for (int i = 0; i < m; ++i)
            if (group[i] == g) return i;
        REQUIRE(false);
        return -1;
    };
    std::bernoulli_distribution include(0.45);
    std::vector<std::pair<int, int>> rel;
    for (int level = 0; level + 1 < levels; ++level) {
        std::vector<int> chosen;
        for (int w = 0; w < m; ++w)
            if (include(rng)) chosen.push_back(w);
        if (chosen.empty()) chosen.push_back(static_cast<int>(rng() % m));
        for (int g = 0; g < m; ++g)
            for (int w : chosen) {
                int h = index_of(compose(group[g], group[w]));
                rel.emplace_back(level * m + g, (level + 1) * m + h);
            }
    }
    GluedAction out{Poset::from_relations(n, rel), {}};
    for (int a = 0; a < m; ++a) {
        Permutation act(n);
        for (int level = 0; level < levels; ++level)
            for (int g = 0; g < m; ++g)
                act[level * m + g] = level * m + index_of(compose(group[a], group[g]));
        out.perms.push_back(std::move(act));
    }
    return out;
}

std::vector<Permutation> cyclic_group(int m) {
    std::vector<Permutation> out;
    for (int shift = 0; shift < m; ++shift) {
        Permutation g(m);
        for (int i = 0; i < m; ++i) g[i] = (i + shift) % m;
        out.push_back(std::move(g));
    }
    return out;
}

// S3 as the regular action on its own six elements.
std::vector<Permutation> s3_regular() {
    // elements as permutations of {0,1,2}
    std::vector<Permutation> elements;
    Permutation base{0, 1, 2};
    do elements.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    const int m = static_cast<int>(elements.size());
    std::vector<Permutation> regular;
    for (int a = 0; a < m; ++a) {
        Permutation row(m);
        for (int b = 0; b < m; ++b) {
            Permutation prod = compose(elements[a], elements[b]);
            for (int c = 0; c < m; ++c)
                if (elements[c] == prod) row[b] = c;
        }
        regular.push_back(std::move(row));
    }
    return regular;
}

}  // namespace

TEST_CASE("action validation") {
    Poset anti2 = make_antichain(2);
    CHECK_NOTHROW(validate_action(anti2, {identity_perm(2), {1, 0}}));

    CHECK_THROWS_AS(validate_action(make_chain(2), {identity_perm(2), {1, 0}}), Error);
    try {
        validate_action(make_chain(2), {identity_perm(2), {1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotOrderPreserving);
    }

    Poset v = Poset::from_relations(3, {{0, 2}, {1, 2}});
    try {
        validate_action(v, {identity_perm(3), {1, 0, 2}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFree);
    }

    // a transposition on the 3-antichain fails freeness first
    try {
        validate_action(make_antichain(3), {identity_perm(3), {1, 0, 2}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFree);
    }

    // group axioms
    try {
        validate_action(make_antichain(3), {identity_perm(3), {1, 2, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAGroup);  // missing the square
    }
    try {
        validate_action(make_antichain(2), {{1, 0}, identity_perm(2)});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAGroup);  // identity must come first
    }
}

TEST_CASE("block form of the swap on the 2-antichain") {
    Poset anti2 = make_antichain(2);
    auto action = validate_action(anti2, {identity_perm(2), {1, 0}});
    auto blocks = block_form(anti2, action);
    CHECK(blocks.latin_verified);
    CHECK(blocks.domain == std::vector<int>{0});
    CHECK(blocks.reordered.at(0, 0) == 0);  // A11 = [0]
    CHECK(blocks.reordered.at(0, 1) == 1);  // A12 = [1]
}

TEST_CASE("block form of the antipodal action on sphere models") {
    // dimension 1 by hand: domain {x1, x3}, A11 = [[0,0],[1,0]], A12 = [[1,0],[1,1]]
    Poset s1 = make_sphere_model(1);
    auto action = validate_action(s1, antipodal(1));
    auto blocks = block_form(s1, action);
    CHECK(blocks.latin_verified);
    CHECK(blocks.domain == std::vector<int>{0, 2});
    int a11[2][2] = {{0, 0}, {1, 0}};
    int a12[2][2] = {{1, 0}, {1, 1}};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(blocks.reordered.at(x, y) == a11[x][y]);
            CHECK(blocks.reordered.at(x, 2 + y) == a12[x][y]);
            // Z2 symmetry: A21 = A12 and A22 = A11
            CHECK(blocks.reordered.at(2 + x, 2 + y) == a11[x][y]);
            CHECK(blocks.reordered.at(2 + x, y) == a12[x][y]);
        }

    for (int dim = 0; dim <= 3; ++dim) {
        Poset s = make_sphere_model(dim);
        CHECK(block_form(s, validate_action(s, antipodal(dim))).latin_verified);
    }
}

TEST_CASE("Z2 determinant factorization") {
    Poset anti2 = make_antichain(2);
    auto f = z2_det_factorization(anti2, validate_action(anti2, {identity_perm(2), {1, 0}}));
    CHECK(f.det_sum == 1);
    CHECK(f.det_difference == -1);
    CHECK(f.product == -1);
    CHECK(f.det_full == -1);

    Poset s1 = make_sphere_model(1);
    auto fs = z2_det_factorization(s1, validate_action(s1, antipodal(1)));
    CHECK(fs.det_sum == 1);
    CHECK(fs.det_difference == 1);
    CHECK(fs.product == 1);

    // two disjoint 2-chains swapped componentwise
    Poset chains = Poset::from_relations(4, {{0, 1}, {2, 3}});
    auto fc = z2_det_factorization(chains, validate_action(chains, {identity_perm(4), {2, 3, 0, 1}}));
    CHECK(fc.product == fc.det_full);

    // wrong group order
    Poset anti3 = make_antichain(3);
    auto z3 = validate_action(anti3, {identity_perm(3), {1, 2, 0}, {2, 0, 1}});
    CHECK_THROWS_AS(z2_det_factorization(anti3, z3), Error);
}

TEST_CASE("orbit sums are multiples of the group order") {
    for (int dim = 0; dim <= 3; ++dim) {
        Poset s = make_sphere_model(dim);
        auto r = orbit_sum_check(s, validate_action(s, antipodal(dim)));
        CHECK(r.sum_down == 2 * (dim + 1) * (dim + 1));
        CHECK(r.sum_up == 2 * (dim + 1) * (dim + 1));
        CHECK(r.down_divisible);
        CHECK(r.up_divisible);
    }

    Poset anti2 = make_antichain(2);
    auto r2 = orbit_sum_check(anti2, validate_action(anti2, {identity_perm(2), {1, 0}}));
    CHECK(r2.sum_down == 2);
    CHECK(r2.sum_up == 2);

    Poset anti4 = make_antichain(4);
    auto r4 = orbit_sum_check(
        anti4, validate_action(anti4, {identity_perm(4), {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}));
    CHECK(r4.sum_down == 4);
    CHECK(r4.sum_up == 4);
    CHECK(r4.down_divisible);
    CHECK(r4.up_divisible);
}

TEST_CASE("random orbit gluings keep the Latin block structure") {
    std::mt19937_64 rng(777);
    std::vector<std::vector<Permutation>> groups = {cyclic_group(2), cyclic_group(3),
                                                    cyclic_group(4), s3_regular()};
    for (int trial = 0; trial < 40; ++trial) {
        const auto& group = groups[trial % groups.size()];
        const int max_levels = 12 / static_cast<int>(group.size());
        const int levels = 1 + static_cast<int>(rng() % std::max(1, max_levels));
        GluedAction glued = glue_orbits(group, levels, rng);
        auto action = validate_action(glued.poset, glued.perms);
        auto blocks = block_form(glued.poset, action);
        CHECK(blocks.latin_verified);
        auto sums = orbit_sum_check(glued.poset, action);
        CHECK(sums.down_divisible);
        CHECK(sums.up_divisible);
        if (action.order() == 2)
            CHECK(z2_det_factorization(glued.poset, action).product ==
                  determinant(matrix_from_poset(glued.poset)));
    }
}
