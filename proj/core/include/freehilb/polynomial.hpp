#ifndef FREEHILB_POLYNOMIAL_HPP
#define FREEHILB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace freehilb {

using BigInt = mpz_class;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. Coefficient k is the coefficient of t^k; the vector never
/// carries trailing zeros, and the zero polynomial is the empty vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(BigInt value);
    /// c * t^power
    static IntPolynomial monomial(BigInt coefficient, std::size_t power);

    bool is_zero() const { return coefficients_.empty(); }
    bool is_one() const;
    /// Degree of the zero polynomial is -1.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coefficients_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    /// Coefficient of t^k, zero beyond the degree.
    const BigInt& coeff(std::size_t k) const;
    /// Lowest-degree nonzero coefficient; zero for the zero polynomial.
    const BigInt& trailing_coeff() const;

    bool operator==(const IntPolynomial& other) const = default;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    IntPolynomial& operator+=(const IntPolynomial& other) { return *this = *this + other; }
    IntPolynomial& operator-=(const IntPolynomial& other) { return *this = *this - other; }
    IntPolynomial& operator*=(const IntPolynomial& other) { return *this = *this * other; }

    /// Gcd of the absolute values of the coefficients; zero for zero.
    BigInt content() const;
    /// The polynomial divided by its content; zero stays zero.
    IntPolynomial primitive_part() const;

    /// Exact quotient a / b; throws std::domain_error when b does not
    /// divide a over the integers.
    static IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

    /// Ascending rendering with explicit '*' and '^', e.g.
    /// "1 - 3*t + t^2 + t^3". The zero polynomial renders as "0".
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coefficients_;
};

/// Gcd over the rationals scaled back to the integers: the product of the
/// coefficient-content gcd and the primitive polynomial gcd, normalized so
/// the lowest-degree nonzero coefficient is positive. gcd(p, 0) is p under
/// the same normalization.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

} // namespace freehilb

#endif
