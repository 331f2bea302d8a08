#ifndef FREEHILB_RATIONAL_FUNCTION_HPP
#define FREEHILB_RATIONAL_FUNCTION_HPP

#include <string>
#include <vector>

#include "freehilb/polynomial.hpp"

namespace freehilb {

using IntMatrix = std::vector<std::vector<long>>;

/// Quotient of two integer polynomials in normal form: numerator and
/// denominator are coprime over the rationals with coprime contents, and
/// the lowest-degree nonzero coefficient of the denominator is positive.
/// Every Hilbert series produced here therefore has denominator constant
/// term exactly +1.
class RationalFunction {
public:
    /// The zero function 0/1.
    RationalFunction();
    /// Reduces and normalizes. Throws std::domain_error on zero denominator.
    RationalFunction(IntPolynomial numerator, IntPolynomial denominator);

    static RationalFunction from_int(long value);

    const IntPolynomial& numerator() const { return numerator_; }
    const IntPolynomial& denominator() const { return denominator_; }
    bool is_zero() const { return numerator_.is_zero(); }

    bool operator==(const RationalFunction& other) const = default;

    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }

    /// Power-series coefficients h_0 .. h_max_degree around t = 0.
    /// Requires denominator constant term 1; throws std::domain_error
    /// otherwise.
    std::vector<BigInt> expand(std::size_t max_degree) const;

    /// this / (1 - t). Expanding the result gives the partial sums of the
    /// expansion of this.
    RationalFunction affine() const;

    /// "(num)/(den)" with both polynomials rendered ascending; "num" alone
    /// when the denominator is 1, and "0" for the zero function.
    std::string str() const;

private:
    IntPolynomial numerator_;
    IntPolynomial denominator_;
};

/// Exact determinant of (Identity - t*A) for a square nonnegative integer
/// matrix A, computed by fraction-free Bareiss elimination over the
/// integer-polynomial ring with Markowitz (minimum fill) pivoting. The
/// result always has constant term 1.
IntPolynomial det_identity_minus_tA(const IntMatrix& A);

/// First component of the unique solution H of (I - t*A) H = C, returned
/// fully reduced: Cramer quotient det(M_0)/det(M) where M = I - t*A and
/// M_0 is M with column 0 replaced by C.
RationalFunction solve_first_component(const IntMatrix& A, const std::vector<int>& constants);

} // namespace freehilb

#endif
