#include "freehilb/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace freehilb {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coefficients_.reserve(coefficients.size());
    for (long c : coefficients) coefficients_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt value) {
    IntPolynomial p;
    if (value != 0) p.coefficients_.push_back(std::move(value));
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t power) {
    IntPolynomial p;
    if (coefficient != 0) {
        p.coefficients_.assign(power + 1, BigInt(0));
        p.coefficients_[power] = std::move(coefficient);
    }
    return p;
}

bool IntPolynomial::is_one() const {
    return coefficients_.size() == 1 && coefficients_[0] == 1;
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
    if (k >= coefficients_.size()) return kZero;
    return coefficients_[k];
}

const BigInt& IntPolynomial::trailing_coeff() const {
    for (const BigInt& c : coefficients_)
        if (c != 0) return c;
    return kZero;
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out;
    out.coefficients_.reserve(coefficients_.size());
    for (const BigInt& c : coefficients_) out.coefficients_.push_back(-c);
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coefficients_.size(), b.coefficients_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coefficients_.size(), b.coefficients_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] -= b.coefficients_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
            out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const BigInt& c : coefficients_) {
        g = ::gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    BigInt c = content();
    std::vector<BigInt> out;
    out.reserve(coefficients_.size());
    for (const BigInt& x : coefficients_) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) throw std::domain_error("div_exact: not divisible");

    std::vector<BigInt> rem = a.coefficients_;
    std::vector<BigInt> quo(a.coefficients_.size() - b.coefficients_.size() + 1, BigInt(0));
    const BigInt& lead = b.coefficients_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        BigInt& top = rem[k + b.coefficients_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("div_exact: not divisible");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t i = 0; i < b.coefficients_.size(); ++i)
            rem[k + i] -= q * b.coefficients_[i];
        quo[k] = std::move(q);
    }
    for (const BigInt& c : rem)
        if (c != 0) throw std::domain_error("div_exact: not divisible");
    return IntPolynomial(std::move(quo));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const BigInt& c = coefficients_[k];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (k == 0) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += "*";
            }
            out += "t";
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

namespace {

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const std::ptrdiff_t db = b.degree();
    const IntPolynomial lead = IntPolynomial::constant(b.coefficients().back());
    while (!a.is_zero() && a.degree() >= db) {
        IntPolynomial shift =
            IntPolynomial::monomial(a.coefficients().back(), static_cast<std::size_t>(a.degree() - db));
        a = lead * a - shift * b;
    }
    return a;
}

IntPolynomial normalize_sign(IntPolynomial p) {
    if (p.trailing_coeff() < 0) return -p;
    return p;
}

} // namespace

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero()) return normalize_sign(q);
    if (q.is_zero()) return normalize_sign(p);
    BigInt content_gcd = ::gcd(p.content(), q.content());
    IntPolynomial a = p.primitive_part();
    IntPolynomial b = q.primitive_part();
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return normalize_sign(IntPolynomial::constant(content_gcd) * a);
}

} // namespace freehilb
