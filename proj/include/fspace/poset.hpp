#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fspace/errors.hpp"

namespace fspace {

// A labelled finite partial order. Point identity is the positional index
// (0-based throughout the API); labels are display metadata only. Instances
// are immutable after construction and every operation on them is a pure
// function, so concurrent use is safe.
class Poset {
public:
    // Builds from a full reflexive relation given row-major (leq[i*n+j] != 0
    // means x_i <= x_j). Throws InvalidPoset naming the violated axiom.
    static Poset from_leq(int n, const std::vector<std::uint8_t>& leq,
                          std::vector<std::string> labels = {});

    // Builds from strict pairs (i < j as order relations, any subset, not
    // necessarily covers): takes the reflexive-transitive closure and rejects
    // cycles. This is the loader-facing constructor.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& strict_pairs,
                                std::vector<std::string> labels = {});

    int size() const { return n_; }
    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    bool less(int i, int j) const { return i != j && leq(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool same_relation(const Poset& other) const {
        return n_ == other.n_ && leq_ == other.leq_;
    }

private:
    Poset(int n, std::vector<std::uint8_t> leq, std::vector<std::string> labels)
        : n_(n), leq_(std::move(leq)), labels_(std::move(labels)) {}

    int n_;
    std::vector<std::uint8_t> leq_;  // row-major, leq_[i*n+j] <=> x_i <= x_j
    std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(int n);

// U_x, F_x, C_x and the punctured variants. All return sorted index vectors.
std::vector<int> down_set(const Poset& p, int i);         // U_{x_i}
std::vector<int> up_set(const Poset& p, int i);           // F_{x_i}
std::vector<int> cset(const Poset& p, int i);             // C_{x_i} = U ∩ F
std::vector<int> strict_down_set(const Poset& p, int i);  // Û_{x_i}
std::vector<int> strict_up_set(const Poset& p, int i);    // F̂_{x_i}

// Hasse edges (i,j) with x_i ≺ x_j, detected by the row+column zero-pattern:
// (r_i + c_j) vanishes exactly at positions i and j. Sorted lexicographically.
std::vector<std::pair<int, int>> covers(const Poset& p);

int height(const Poset& p);
int point_height(const Poset& p, int i);

// Maximum antichain size via minimum chain cover (Dilworth), computed as
// n minus a maximum matching of the split bipartite graph of the strict order.
int width(const Poset& p);

// Connected components of the comparability graph. Returns one id per point;
// ids are assigned in first-seen index order starting at 0.
std::vector<int> components(const Poset& p);
int component_count(const Poset& p);

struct ExtremalPoints {
    std::vector<int> minimal;
    std::vector<int> maximal;
    std::optional<int> minimum;
    std::optional<int> maximum;
};

// Derived from row/column sums of the 0/1 matrix: column sum n-1 <=> minimal,
// row sum n-1 <=> maximal, row sum 0 => minimum, column sum 0 => maximum.
ExtremalPoints extremal_points(const Poset& p);

// True iff the indices are pairwise distinct and every consecutive matrix
// entry x_{i_k, i_{k+1}} is 0, i.e. the sequence is a strictly increasing
// chain. Out-of-range indices throw InvalidPoset.
bool is_chain_sequence(const Poset& p, const std::vector<int>& seq);

struct SumProfile {
    std::vector<long long> row_sums;  // R(X), entry i = n - |F_{x_i}|
    std::vector<long long> col_sums;  // C(X), entry i = n - |U_{x_i}|
    long long total = 0;              // Σ(X)
};

SumProfile sum_profile(const Poset& p);

// The opposite order; its matrix is the transpose. Involution.
Poset opposite(const Poset& p);

// Induced subposet on the given (distinct, in-range) points, kept in the
// given order. Labels are preserved.
Poset induced(const Poset& p, const std::vector<int>& points);
Poset remove_point(const Poset& p, int i);

}  // namespace fspace
