#ifndef MONOCALC_HOLO_HPP
#define MONOCALC_HOLO_HPP

#include "monocalc/gaussian_rational.hpp"

#include <vector>

namespace monocalc {

/// Entire function of one complex variable.
struct HoloFn {
    enum class Kind { Polynomial, Exponential, TaylorTable };
    Kind kind = Kind::Polynomial;
    std::vector<Complex> coeffs; // Polynomial: sum coeffs[j] t^j; TaylorTable: in (t - center)
    Complex lambda{};            // Exponential: t -> exp(lambda t)
    Complex center{};

    static HoloFn polynomial(std::vector<Complex> c) {
        HoloFn h;
        h.coeffs = std::move(c);
        return h;
    }
    static HoloFn constant(Complex c) { return polynomial({c}); }
    static HoloFn zero() { return polynomial({}); }
    static HoloFn exponential(Complex lam) {
        HoloFn h;
        h.kind = Kind::Exponential;
        h.lambda = lam;
        return h;
    }
    static HoloFn taylor(Complex center, std::vector<Complex> c) {
        HoloFn h;
        h.kind = Kind::TaylorTable;
        h.center = center;
        h.coeffs = std::move(c);
        return h;
    }

    bool is_zero() const {
        if (kind == Kind::Exponential) return false;
        for (const auto& c : coeffs)
            if (c != Complex(0.0, 0.0)) return false;
        return true;
    }
};

/// Truncated Taylor coefficients: entry j is H^(j)(t0) / j!.
using Jet = std::vector<Complex>;

Jet jet(const HoloFn& h, Complex t0, int order);

inline Complex holo_eval(const HoloFn& h, Complex t) { return jet(h, t, 1)[0]; }
inline Complex holo_derivative(const HoloFn& h, Complex t) { return jet(h, t, 2)[1]; }

} // namespace monocalc

#endif
