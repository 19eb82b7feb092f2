#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fspace/poset.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

// Arbitrary-precision signed integer. Everything in this module is exact;
// no rounding happens anywhere.
using BigInt = mpz_class;

// Dense square matrix of BigInt. Only what the determinant/char-poly/trace
// machinery needs.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static IntMatrix identity(int n);
    static IntMatrix from(const ZeroOneMatrix& m);

    int order() const { return n_; }
    BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;

    BigInt trace() const;

private:
    int n_;
    std::vector<BigInt> a_;
};

// Integer-coefficient polynomial, coefficients stored degree-ascending.
// Normalized: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& x) const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& rhs) const = default;

    // Human form "c_n*λ^n + ... + c_0" with zero terms omitted.
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
};

// Exact determinant by Bareiss fraction-free elimination with full pivoting.
// Every intermediate division is exact; O(n^3) BigInt operations.
BigInt determinant(const IntMatrix& m);
BigInt determinant(const ZeroOneMatrix& m);

// Rank over the rationals, same elimination kernel.
int rank(const IntMatrix& m);
int rank(const ZeroOneMatrix& m);

// rank_bar(X) = |X| - rank(X_M).
int rank_bar(const Poset& p);

// Characteristic polynomial with the convention p(λ) = det(M - λI), computed
// from n+1 exact determinant evaluations and exact interpolation. Leading
// coefficient is (-1)^n and p(0) = det(M).
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly(const ZeroOneMatrix& m);

// tr(M^k) by exact matrix powering.
BigInt trace_power(const ZeroOneMatrix& m, int k);

struct AntichainCounts {
    BigInt a2;  // antichains of 2 points
    BigInt a3;  // antichains of 3 points
};

// A2 = tr(M^2)/2. A3 is the triangle count of the incomparability graph,
// computed as tr(N^3)/6 for N = M ⊙ Mᵀ: raw tr(M^3) also picks up directed
// 3-cycles through a comparable pair (3 per such triple), so tr(M^3)/6
// overcounts whenever those exist; the symmetrized trace counts exactly the
// 3-antichains. Both divisions are checked and raise
// InternalInvariantViolation if inexact.
AntichainCounts antichain_counts(const Poset& p);

}  // namespace fspace
