#include "fspace/zero_one_matrix.hpp"

#include "fspace/errors.hpp"

namespace fspace {

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw Error(ErrorCode::NonSquare, "matrix has no rows");
    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::NonSquare,
                        "row of length " + std::to_string(row.size()) + " in an order-" +
                            std::to_string(n) + " matrix");
        for (int v : row) {
            if (v != 0 && v != 1)
                throw Error(ErrorCode::NonBinaryEntry, "entry " + std::to_string(v));
            entries.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return ZeroOneMatrix(n, std::move(entries));
}

ZeroOneMatrix ZeroOneMatrix::from_entries(int n, std::vector<std::uint8_t> entries) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "matrix order must be positive");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorCode::NonSquare, "entry count does not match order");
    for (auto v : entries)
        if (v > 1) throw Error(ErrorCode::NonBinaryEntry, "entry " + std::to_string(int(v)));
    return ZeroOneMatrix(n, std::move(entries));
}

ZeroOneMatrix ZeroOneMatrix::transpose() const {
    std::vector<std::uint8_t> t(entries_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t[static_cast<std::size_t>(j) * n_ + i] = entries_[static_cast<std::size_t>(i) * n_ + j];
    return ZeroOneMatrix(n_, std::move(t));
}

std::string MembershipViolation::describe() const {
    switch (condition) {
        case 1:
            return "condition 1 violated at (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "): diagonal entry must be 0";
        case 2:
            return "condition 2 violated at (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "): a[i][j]=0 requires a[j][i]=1";
        default:
            return "condition 3 violated on (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "),(" + std::to_string(j + 1) + "," +
                   std::to_string(k + 1) + "): a[" + std::to_string(i + 1) + "][" +
                   std::to_string(k + 1) + "] must be 0";
    }
}

std::optional<MembershipViolation> validate_membership(const ZeroOneMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        if (m.at(i, i) != 0) return MembershipViolation{1, i, i, 0};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.at(i, j) == 0 && m.at(j, i) != 1)
                return MembershipViolation{2, i, j, 0};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) == 0)
                for (int k = 0; k < n; ++k)
                    if (m.at(j, k) == 0 && m.at(i, k) != 0)
                        return MembershipViolation{3, i, j, k};
    return std::nullopt;
}

bool validate_boolean_idempotent(const ZeroOneMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        if (m.at(i, i) != 0)
            throw Error(ErrorCode::NonZeroDiagonal,
                        "entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    // b = 1 - m; check OR_k (b_ik AND b_kj) == b_ij. The diagonal of b is 1,
    // so the product always contains b; equality is exactly transitivity.
    auto b = [&](int i, int j) { return m.at(i, j) == 0; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool prod = false;
            for (int k = 0; k < n && !prod; ++k) prod = b(i, k) && b(k, j);
            if (prod != b(i, j)) return false;
        }
    return true;
}

ZeroOneMatrix matrix_from_poset(const Poset& p) {
    const int n = p.size();
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entries[static_cast<std::size_t>(i) * n + j] = p.leq(i, j) ? 0 : 1;
    return ZeroOneMatrix::from_entries(n, std::move(entries));
}

Poset poset_from_matrix(const ZeroOneMatrix& m, std::vector<std::string> labels) {
    if (auto violation = validate_membership(m))
        throw Error(ErrorCode::InvalidMatrix, violation->describe());
    const int n = m.order();
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[static_cast<std::size_t>(i) * n + j] = m.at(i, j) == 0 ? 1 : 0;
    return Poset::from_leq(n, leq, std::move(labels));
}

}  // namespace fspace
