#include "freehilb/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace freehilb {

RationalFunction::RationalFunction() : denominator_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator) {
    if (denominator.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (numerator.is_zero()) {
        denominator_ = IntPolynomial::constant(1);
        return;
    }
    IntPolynomial g = gcd(numerator, denominator);
    numerator_ = IntPolynomial::div_exact(numerator, g);
    denominator_ = IntPolynomial::div_exact(denominator, g);
    if (denominator_.trailing_coeff() < 0) {
        numerator_ = -numerator_;
        denominator_ = -denominator_;
    }
}

RationalFunction RationalFunction::from_int(long value) {
    return RationalFunction(IntPolynomial::constant(value), IntPolynomial::constant(1));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                            a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.numerator_ * b.denominator_ - b.numerator_ * a.denominator_,
                            a.denominator_ * b.denominator_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return RationalFunction(a.numerator_ * b.denominator_, a.denominator_ * b.numerator_);
}

std::vector<BigInt> RationalFunction::expand(std::size_t max_degree) const {
    if (denominator_.coeff(0) != 1)
        throw std::domain_error("expand requires denominator constant term 1");
    std::vector<BigInt> h(max_degree + 1, BigInt(0));
    for (std::size_t d = 0; d <= max_degree; ++d) {
        BigInt value = numerator_.coeff(d);
        const std::size_t window = std::min<std::size_t>(d, static_cast<std::size_t>(
                                       std::max<std::ptrdiff_t>(denominator_.degree(), 0)));
        for (std::size_t k = 1; k <= window; ++k)
            value -= denominator_.coeff(k) * h[d - k];
        h[d] = std::move(value);
    }
    return h;
}

RationalFunction RationalFunction::affine() const {
    return RationalFunction(numerator_, denominator_ * IntPolynomial{1, -1});
}

std::string RationalFunction::str() const {
    if (is_zero()) return "0";
    if (denominator_.is_one()) return numerator_.str();
    return "(" + numerator_.str() + ")/(" + denominator_.str() + ")";
}

namespace {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

// Fraction-free Bareiss elimination with Markowitz pivoting. Consumes the
// matrix and returns the exact determinant.
IntPolynomial bareiss_determinant(PolyMatrix m) {
    const std::size_t r = m.size();
    if (r == 0) return IntPolynomial::constant(1);
    int sign = 1;
    IntPolynomial previous_pivot = IntPolynomial::constant(1);
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<long> row_nnz(r, 0), col_nnz(r, 0);
        for (std::size_t i = k; i < r; ++i)
            for (std::size_t j = k; j < r; ++j)
                if (!m[i][j].is_zero()) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
        std::size_t pivot_i = r, pivot_j = r;
        long best_cost = -1;
        for (std::size_t i = k; i < r; ++i) {
            for (std::size_t j = k; j < r; ++j) {
                if (m[i][j].is_zero()) continue;
                long cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    pivot_i = i;
                    pivot_j = j;
                }
            }
        }
        if (best_cost < 0) return IntPolynomial();
        if (pivot_i != k) {
            std::swap(m[pivot_i], m[k]);
            sign = -sign;
        }
        if (pivot_j != k) {
            for (auto& row : m) std::swap(row[pivot_j], row[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i) {
            for (std::size_t j = k + 1; j < r; ++j)
                m[i][j] = IntPolynomial::div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j],
                                                   previous_pivot);
            m[i][k] = IntPolynomial();
        }
        previous_pivot = m[k][k];
    }
    IntPolynomial det = std::move(m[r - 1][r - 1]);
    return sign < 0 ? -det : det;
}

PolyMatrix identity_minus_t_times(const IntMatrix& A) {
    const std::size_t r = A.size();
    PolyMatrix m(r, std::vector<IntPolynomial>(r));
    for (std::size_t i = 0; i < r; ++i) {
        if (A[i].size() != r) throw std::invalid_argument("adjacency matrix must be square");
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = IntPolynomial{i == j ? 1 : 0, -A[i][j]};
    }
    return m;
}

} // namespace

IntPolynomial det_identity_minus_tA(const IntMatrix& A) {
    return bareiss_determinant(identity_minus_t_times(A));
}

RationalFunction solve_first_component(const IntMatrix& A, const std::vector<int>& constants) {
    const std::size_t r = A.size();
    if (constants.size() != r)
        throw std::invalid_argument("constant vector size must match matrix dimension");
    if (r == 0) throw std::invalid_argument("empty system");
    IntPolynomial denominator = bareiss_determinant(identity_minus_t_times(A));
    PolyMatrix replaced = identity_minus_t_times(A);
    for (std::size_t i = 0; i < r; ++i)
        replaced[i][0] = IntPolynomial::constant(constants[i]);
    IntPolynomial numerator = bareiss_determinant(std::move(replaced));
    return RationalFunction(std::move(numerator), std::move(denominator));
}

} // namespace freehilb
