#include "monocalc/holo.hpp"

#include <cmath>
#include <stdexcept>

namespace monocalc {

namespace {

// Taylor shift by repeated synthetic division; after the loop c[j] is the
// coefficient of (t - t0)^j.
Jet poly_jet(std::vector<Complex> c, Complex t0, int order) {
    const int d = static_cast<int>(c.size());
    for (int j = 0; j < std::min(order, d); ++j)
        for (int i = d - 2; i >= j; --i) c[static_cast<std::size_t>(i)] += t0 * c[static_cast<std::size_t>(i + 1)];
    c.resize(static_cast<std::size_t>(order), Complex(0.0, 0.0));
    c.resize(static_cast<std::size_t>(order));
    return c;
}

} // namespace

Jet jet(const HoloFn& h, Complex t0, int order) {
    if (order < 1) throw std::invalid_argument("jet: order must be >= 1");
    switch (h.kind) {
        case HoloFn::Kind::Polynomial:
            return poly_jet(h.coeffs, t0, order);
        case HoloFn::Kind::TaylorTable:
            return poly_jet(h.coeffs, t0 - h.center, order);
        case HoloFn::Kind::Exponential: {
            Jet out(static_cast<std::size_t>(order));
            Complex v = std::exp(h.lambda * t0);
            for (int j = 0; j < order; ++j) {
                out[static_cast<std::size_t>(j)] = v;
                v *= h.lambda / Complex(static_cast<double>(j + 1), 0.0);
            }
            return out;
        }
    }
    throw std::logic_error("jet: unknown kind");
}

} // namespace monocalc
