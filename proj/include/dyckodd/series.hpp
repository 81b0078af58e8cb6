#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckodd/numeric.hpp"

namespace dyckodd {

struct division_by_zero_series : std::domain_error {
    division_by_zero_series()
        : std::domain_error(
              "division by a series with no nonzero coefficient within its precision") {}
};

struct precision_exceeded : std::out_of_range {
    precision_exceeded(std::int64_t n, std::int64_t precision)
        : std::out_of_range("coefficient of exponent " + std::to_string(n) +
                            " requested from a series only certain below exponent " +
                            std::to_string(precision)) {}
};

struct odd_coefficient_present : std::domain_error {
    explicit odd_coefficient_present(std::int64_t n)
        : std::domain_error("cannot reindex by z^2 = Z: nonzero coefficient at odd exponent " +
                            std::to_string(n)) {}
};

// Truncated Laurent series with exact rational coefficients.
//
// A value holds the window [valuation, precision) of certain coefficients:
//
//     s = sum_{valuation <= n < precision} coeff(n) * z^n  +  O(z^precision).
//
// Coefficients at exponents >= precision are unknown, never "zero by default".
// Stored values are normalized: the leading stored coefficient is nonzero, and
// the zero series is an empty window with valuation == precision.  Every
// operation computes the exact window its result is entitled to and reports
// nothing beyond it, so a coefficient you can read is a coefficient you can
// trust.  All arithmetic is exact; there is no floating point here.
class series {
public:
    // Zero at the default precision.
    series() : valuation_(default_precision), precision_(default_precision) {}

    static series zero(std::int64_t precision = default_precision) {
        series s;
        s.valuation_ = precision;
        s.precision_ = precision;
        return s;
    }

    static series constant(rational c, std::int64_t precision = default_precision) {
        return monomial(std::move(c), 0, precision);
    }

    static series one(std::int64_t precision = default_precision) {
        return constant(1, precision);
    }

    static series monomial(rational c, std::int64_t exponent,
                           std::int64_t precision = default_precision) {
        if (exponent >= precision || c == 0) return zero(precision);
        series s;
        s.valuation_ = exponent;
        s.precision_ = precision;
        s.coeffs_.assign(static_cast<std::size_t>(precision - exponent), rational(0));
        s.coeffs_[0] = std::move(c);
        return s;
    }

    // coeffs[k] is the coefficient of z^(valuation + k); the vector must fill
    // the whole window, i.e. coeffs.size() == precision - valuation.
    static series from_coefficients(std::int64_t valuation, std::vector<rational> coeffs,
                                    std::int64_t precision) {
        if (static_cast<std::int64_t>(coeffs.size()) != precision - valuation)
            throw std::invalid_argument("from_coefficients: window size mismatch");
        return series(valuation, precision, std::move(coeffs));
    }

    // Exact polynomial given as {exponent, coefficient} terms; certain through
    // the given precision (terms at or above it fall into the O() tail).
    static series polynomial(std::initializer_list<std::pair<std::int64_t, rational>> terms,
                             std::int64_t precision = default_precision) {
        std::int64_t val = precision;
        for (const auto& t : terms)
            if (t.second != 0 && t.first < val) val = t.first;
        if (val == precision) return zero(precision);
        std::vector<rational> coeffs(static_cast<std::size_t>(precision - val), rational(0));
        for (const auto& t : terms)
            if (t.first < precision) coeffs[static_cast<std::size_t>(t.first - val)] += t.second;
        return series(val, precision, std::move(coeffs));
    }

    // Equals precision() for the zero series.
    std::int64_t valuation() const { return valuation_; }
    std::int64_t precision() const { return precision_; }
    bool is_zero() const { return coeffs_.empty(); }

    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    rational coeff(std::int64_t n) const {
        if (n >= precision_) throw precision_exceeded(n, precision_);
        return at(n);
    }

    series truncated(std::int64_t new_precision) const {
        if (new_precision > precision_)
            throw std::invalid_argument("truncated: cannot raise precision from " +
                                        std::to_string(precision_) + " to " +
                                        std::to_string(new_precision));
        if (new_precision <= valuation_) return zero(new_precision);
        std::vector<rational> coeffs(coeffs_.begin(),
                                     coeffs_.begin() + (new_precision - valuation_));
        return series(valuation_, new_precision, std::move(coeffs));
    }

    // Multiplication by z^k, exact.
    series shifted(std::int64_t k) const {
        series r = *this;
        r.valuation_ += k;
        r.precision_ += k;
        return r;
    }

    series scaled(const rational& c) const {
        if (c == 0) return zero(precision_);
        series r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    // Reads an even series in z as a series in Z with z^2 = Z.
    series decimate() const {
        for (std::int64_t n = valuation_; n < precision_; ++n)
            if (n % 2 != 0 && at(n) != 0) throw odd_coefficient_present(n);
        std::int64_t val = ceil_div2(valuation_);
        std::int64_t prec = ceil_div2(precision_);
        std::vector<rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(std::max<std::int64_t>(prec - val, 0)));
        for (std::int64_t m = val; m < prec; ++m) coeffs.push_back(at(2 * m));
        return series(val, prec, std::move(coeffs));
    }

    // Z^m -> z^(2m); inverse of decimate on even series.
    series inflate() const {
        std::vector<rational> coeffs;
        coeffs.reserve(coeffs_.size() * 2);
        for (const auto& c : coeffs_) {
            coeffs.push_back(c);
            coeffs.push_back(0);
        }
        return series(2 * valuation_, 2 * precision_, std::move(coeffs));
    }

    friend series operator-(const series& s) { return s.scaled(-1); }

    friend series operator+(const series& a, const series& b) {
        std::int64_t prec = std::min(a.precision_, b.precision_);
        std::int64_t val = std::min({a.valuation_, b.valuation_, prec});
        std::vector<rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(prec - val));
        for (std::int64_t n = val; n < prec; ++n) coeffs.push_back(a.at(n) + b.at(n));
        return series(val, prec, std::move(coeffs));
    }

    friend series operator-(const series& a, const series& b) { return a + (-b); }

    // Cauchy product.  The certain window is n < min(a.prec + b.val, b.prec + a.val):
    // the unknown tail of one factor, shifted by the valuation of the other, is the
    // first exponent that could be wrong.
    friend series operator*(const series& a, const series& b) {
        std::int64_t prec = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
        std::int64_t val = a.valuation_ + b.valuation_;
        std::int64_t len = prec - val;  // == min of the two window lengths
        if (len <= 0 || a.is_zero() || b.is_zero()) return zero(prec);
        std::vector<rational> coeffs(static_cast<std::size_t>(len), rational(0));
        for (std::int64_t i = 0; i < len; ++i)
            for (std::int64_t j = 0; i + j < len; ++j)
                coeffs[static_cast<std::size_t>(i + j)] +=
                    a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
        return series(val, prec, std::move(coeffs));
    }

    // Long division by the leading coefficient.  q = a/b satisfies q*b = a on the
    // certain window; quotient coefficient k consumes b's window up to depth k, so
    // the result is certain for n < min(a.prec - b.val, b.prec + a.val - 2*b.val).
    friend series operator/(const series& a, const series& b) {
        if (b.is_zero()) throw division_by_zero_series();
        if (a.is_zero()) return zero(a.precision_ - b.valuation_);
        std::int64_t val = a.valuation_ - b.valuation_;
        std::int64_t prec = std::min(a.precision_ - b.valuation_,
                                     b.precision_ + a.valuation_ - 2 * b.valuation_);
        std::int64_t len = prec - val;  // <= min of both window lengths
        std::vector<rational> q(static_cast<std::size_t>(len), rational(0));
        for (std::int64_t k = 0; k < len; ++k) {
            rational acc = a.coeffs_[static_cast<std::size_t>(k)];
            for (std::int64_t i = 0; i < k; ++i)
                acc -= q[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(k - i)];
            q[static_cast<std::size_t>(k)] = acc / b.coeffs_[0];
        }
        return series(val, prec, std::move(q));
    }

    // Equality of every coefficient both sides are certain about.
    friend bool agree(const series& a, const series& b) {
        std::int64_t hi = std::min(a.precision_, b.precision_);
        std::int64_t lo = std::min({a.valuation_, b.valuation_, hi});
        for (std::int64_t n = lo; n < hi; ++n)
            if (a.at(n) != b.at(n)) return false;
        return true;
    }

    // Human form, ascending exponents: "z^-1 - z - z^5 - 2*z^7 + O(z^9)".
    std::string str(std::string_view var = "z") const {
        std::ostringstream out;
        if (is_zero()) {
            out << "0";
        } else {
            bool first = true;
            for (std::int64_t n = valuation_; n < precision_; ++n) {
                rational c = at(n);
                if (c == 0) continue;
                bool neg = c < 0;
                if (neg) c = -c;
                if (first) {
                    if (neg) out << "-";
                    first = false;
                } else {
                    out << (neg ? " - " : " + ");
                }
                if (n == 0) {
                    out << c.str();
                } else {
                    if (c != 1) out << c.str() << "*";
                    out << var;
                    if (n != 1) out << "^" << n;
                }
            }
        }
        out << " + O(" << var << "^" << precision_ << ")";
        return out.str();
    }

private:
    series(std::int64_t valuation, std::int64_t precision, std::vector<rational> coeffs)
        : valuation_(valuation), precision_(precision), coeffs_(std::move(coeffs)) {
        normalize();
    }

    // Strips leading zero coefficients by raising the valuation.
    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            valuation_ = precision_;
        } else if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            valuation_ += static_cast<std::int64_t>(lead);
        }
    }

    rational at(std::int64_t n) const {
        if (n < valuation_ || n >= valuation_ + static_cast<std::int64_t>(coeffs_.size()))
            return 0;
        return coeffs_[static_cast<std::size_t>(n - valuation_)];
    }

    static std::int64_t ceil_div2(std::int64_t x) { return (x % 2 == 0) ? x / 2 : (x + 1) / 2; }

    std::int64_t valuation_;
    std::int64_t precision_;
    std::vector<rational> coeffs_;
};

inline series pow(const series& s, unsigned e) {
    if (e == 0) return series::one(s.precision() - s.valuation());
    series r = s;
    for (unsigned i = 1; i < e; ++i) r = r * s;
    return r;
}

inline series inverse(const series& s) {
    return series::one(s.precision() - s.valuation()) / s;
}

}  // namespace dyckodd
