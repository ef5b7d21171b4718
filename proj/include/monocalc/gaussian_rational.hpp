#ifndef MONOCALC_GAUSSIAN_RATIONAL_HPP
#define MONOCALC_GAUSSIAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace monocalc {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Exact complex number with rational real and imaginary parts.
/// Carrier for structure constants, symbolic coefficients and
/// exact residual checks.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(std::int64_t r) : re(r) {}
    GaussianRational(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    static GaussianRational from_quad(std::int64_t re_num, std::int64_t re_den,
                                      std::int64_t im_num, std::int64_t im_den) {
        if (re_den == 0 || im_den == 0)
            throw std::invalid_argument("GaussianRational: zero denominator");
        return {Rational(re_num, re_den), Rational(im_num, im_den)};
    }

    bool is_zero() const { return re == 0 && im == 0; }

    Complex to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            if (im == 1) os << "i";
            else if (im == -1) os << "-i";
            else os << im << "i";
        } else {
            os << "(" << re;
            if (im > 0) os << "+";
            if (im == 1) os << "i";
            else if (im == -1) os << "-i";
            else os << im << "i";
            os << ")";
        }
        return os.str();
    }
};

} // namespace monocalc

#endif
