#include "wt/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "wt/errors.hpp"

namespace wt {

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t k, BigInt coeff) {
    std::vector<BigInt> c(k + 1);
    c[k] = std::move(coeff);
    return Polynomial(std::move(c));
}

BigInt Polynomial::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const BigInt mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) {
            out += mag.str();
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] - b[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const BigInt lead = b.coefficients().back();
    if (lead != 1 && lead != -1) {
        throw std::domain_error("divisor must have leading coefficient +1 or -1");
    }
    std::vector<BigInt> rem = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
        return {Polynomial{}, a};
    }
    std::vector<BigInt> quot(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        const BigInt q = rem[k] * lead;  // lead is its own inverse
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= q * b[j];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    return {a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator};
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    return {a.numerator * b.denominator - b.numerator * a.denominator, a.denominator * b.denominator};
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return {a.numerator * b.numerator, a.denominator * b.denominator};
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    return {a.numerator * b.denominator, a.denominator * b.numerator};
}

namespace {

const BigInt& unit_constant(const RationalSeries& f) {
    static const BigInt zero = 0;
    const auto& den = f.denominator.coefficients();
    const BigInt& c0 = den.empty() ? zero : den.front();
    if (c0 != 1 && c0 != -1) {
        throw NotExpandable("denominator constant term is " + c0.str() + ", not +1 or -1");
    }
    return c0;
}

}  // namespace

std::vector<BigInt> series_coefficients(const RationalSeries& f, std::size_t upto) {
    const BigInt c0 = unit_constant(f);
    const auto& den = f.denominator.coefficients();
    // den * a = num, so a_n = c0 * (num_n - sum_{j>=1} den_j a_{n-j}).
    std::vector<BigInt> a(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) {
        BigInt acc = f.numerator[n];
        for (std::size_t j = 1; j < den.size() && j <= n; ++j) {
            acc -= den[j] * a[n - j];
        }
        a[n] = acc * c0;
    }
    return a;
}

std::vector<BigInt> series_long_division(const RationalSeries& f, std::size_t upto) {
    const BigInt c0 = unit_constant(f);
    std::vector<BigInt> rem(upto + 1);
    for (std::size_t i = 0; i <= upto; ++i) {
        rem[i] = f.numerator[i];
    }
    std::vector<BigInt> out(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) {
        out[n] = rem[n] * c0;
        for (std::size_t j = 0; n + j <= upto; ++j) {
            rem[n + j] -= out[n] * f.denominator[j];
        }
    }
    return out;
}

}  // namespace wt
