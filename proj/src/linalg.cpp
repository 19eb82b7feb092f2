#include "fspace/linalg.hpp"

#include <cassert>
#include <utility>

#include "fspace/errors.hpp"

namespace fspace {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from(const ZeroOneMatrix& z) {
    IntMatrix m(z.order());
    for (int i = 0; i < z.order(); ++i)
        for (int j = 0; j < z.order(); ++j) m.at(i, j) = z.at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    assert(n_ == rhs.n_);
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    assert(n_ == rhs.n_);
    IntMatrix out(n_);
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] + rhs.a_[t];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    assert(n_ == rhs.n_);
    IntMatrix out(n_);
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] - rhs.a_[t];
    return out;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

namespace {

struct Elimination {
    BigInt det;
    int rank;
};

// Bareiss fraction-free elimination with full pivoting. The trailing
// submatrix entries are minors of the (permuted) input bordered by the
// processed rows and columns, so every division by the previous pivot is
// exact. Row and column swaps each flip the determinant sign.
Elimination bareiss(IntMatrix a) {
    const int n = a.order();
    BigInt prev = 1;
    int sign = 1;
    int step = 0;
    for (; step < n; ++step) {
        int pi = -1, pj = -1;
        for (int i = step; i < n && pi < 0; ++i)
            for (int j = step; j < n; ++j)
                if (a.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != step) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pi, j), a.at(step, j));
            sign = -sign;
        }
        if (pj != step) {
            for (int i = 0; i < n; ++i) std::swap(a.at(i, pj), a.at(i, step));
            sign = -sign;
        }
        const BigInt pivot = a.at(step, step);
        for (int i = step + 1; i < n; ++i) {
            for (int j = step + 1; j < n; ++j) {
                BigInt num = a.at(i, j) * pivot - a.at(i, step) * a.at(step, j);
                assert(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, step) = 0;
        }
        prev = pivot;
    }
    if (step < n) return {BigInt(0), step};
    return {sign > 0 ? prev : BigInt(-prev), n};
}

}  // namespace

BigInt determinant(const IntMatrix& m) { return bareiss(m).det; }
BigInt determinant(const ZeroOneMatrix& m) { return bareiss(IntMatrix::from(m)).det; }

int rank(const IntMatrix& m) { return bareiss(m).rank; }
int rank(const ZeroOneMatrix& m) { return bareiss(IntMatrix::from(m)).rank; }

int rank_bar(const Poset& p) { return p.size() - rank(matrix_from_poset(p)); }

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    return IntPolynomial(std::vector<BigInt>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = coeff(static_cast<int>(t)) + rhs.coeff(static_cast<int>(t));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = coeff(static_cast<int>(t)) - rhs.coeff(static_cast<int>(t));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b)
            out[a + b] += coeffs_[a] * rhs.coeffs_[b];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = -coeffs_[t];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool first = out.empty();
        BigInt abs_c = abs(c);
        if (first)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        const bool unit = abs_c == 1;
        if (!unit || k == 0) out += abs_c.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "λ";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial char_poly(const IntMatrix& m) {
    const int n = m.order();
    // Evaluate det(M - kI) for k = 0..n, then Lagrange-interpolate. The
    // coefficients are integers, so the rational accumulation must clear.
    std::vector<BigInt> values(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        IntMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= k;
        values[static_cast<std::size_t>(k)] = determinant(shifted);
    }
    std::vector<mpq_class> acc(static_cast<std::size_t>(n) + 1, mpq_class(0));
    for (int k = 0; k <= n; ++k) {
        // numerator poly Π_{j≠k} (λ - j), denominator Π_{j≠k} (k - j)
        std::vector<BigInt> numer{BigInt(1)};
        BigInt denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            std::vector<BigInt> next(numer.size() + 1);
            for (std::size_t t = 0; t < numer.size(); ++t) {
                next[t + 1] += numer[t];
                next[t] -= numer[t] * j;
            }
            numer = std::move(next);
            denom *= BigInt(k - j);
        }
        mpq_class weight(values[static_cast<std::size_t>(k)], denom);
        weight.canonicalize();
        for (std::size_t t = 0; t < numer.size(); ++t)
            acc[t] += weight * mpq_class(numer[t]);
    }
    std::vector<BigInt> coeffs(acc.size());
    for (std::size_t t = 0; t < acc.size(); ++t) {
        if (acc[t].get_den() != 1)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "characteristic polynomial interpolation produced a non-integer");
        coeffs[t] = acc[t].get_num();
    }
    IntPolynomial p{std::move(coeffs)};
    if (p.coeff(n) != (n % 2 == 0 ? 1 : -1))
        throw Error(ErrorCode::InternalInvariantViolation,
                    "characteristic polynomial leading coefficient is not (-1)^n");
    return p;
}

IntPolynomial char_poly(const ZeroOneMatrix& m) { return char_poly(IntMatrix::from(m)); }

BigInt trace_power(const ZeroOneMatrix& m, int k) {
    if (k < 1) throw Error(ErrorCode::InternalInvariantViolation, "trace power needs k >= 1");
    IntMatrix base = IntMatrix::from(m);
    IntMatrix acc = base;
    for (int t = 1; t < k; ++t) acc = acc * base;
    return acc.trace();
}

AntichainCounts antichain_counts(const Poset& p) {
    ZeroOneMatrix m = matrix_from_poset(p);
    const int n = m.order();
    BigInt tr2 = trace_power(m, 2);
    if (tr2 % 2 != 0)
        throw Error(ErrorCode::InternalInvariantViolation, "tr(M^2) must be even");
    // Symmetrize: n_ij = m_ij * m_ji marks incomparable pairs.
    std::vector<std::uint8_t> sym(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sym[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::uint8_t>(m.at(i, j) & m.at(j, i));
    ZeroOneMatrix incomp = ZeroOneMatrix::from_entries(n, std::move(sym));
    BigInt tr3 = trace_power(incomp, 3);
    if (tr3 % 6 != 0)
        throw Error(ErrorCode::InternalInvariantViolation, "symmetrized tr(N^3) must be divisible by 6");
    return AntichainCounts{tr2 / 2, tr3 / 6};
}

}  // namespace fspace
