#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wt {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficient of x^i at index i, no trailing zeros (zero is empty).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coeffs);
    explicit Polynomial(std::vector<BigInt> coeffs);

    /// x^k
    static Polynomial monomial(std::size_t k, BigInt coeff = 1);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    BigInt operator[](std::size_t i) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial&) const = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of a by b. The leading coefficient of b must be ±1 so the
/// division stays in the integers; throws std::domain_error otherwise or when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// numerator / denominator as a formal power series.
struct RationalSeries {
    Polynomial numerator;
    Polynomial denominator;

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
};

/// Coefficients of x^0..x^upto. Throws NotExpandable unless the denominator's constant
/// term is ±1.
std::vector<BigInt> series_coefficients(const RationalSeries& f, std::size_t upto);

/// Same coefficients by long division of power series (used to cross-check).
std::vector<BigInt> series_long_division(const RationalSeries& f, std::size_t upto);

}  // namespace wt
