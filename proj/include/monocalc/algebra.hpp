#ifndef MONOCALC_ALGEBRA_HPP
#define MONOCALC_ALGEBRA_HPP

#include "monocalc/gaussian_rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monocalc {

// Scalar carriers plug into the algebra templates through these hooks.
inline bool scalar_is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
inline bool scalar_is_zero(const GaussianRational& q) { return q.is_zero(); }

template <class S>
struct ScalarFrom;

template <>
struct ScalarFrom<Complex> {
    static Complex from(const GaussianRational& q) { return q.to_complex(); }
};
template <>
struct ScalarFrom<GaussianRational> {
    static GaussianRational from(const GaussianRational& q) { return q; }
};

/// Multiplication table of an algebra A_n^m in Cartan form.
///
/// Basis I_1..I_m are idempotents, I_{m+1}..I_n nilpotents.  Products of
/// nilpotents are stored sparsely for r <= s only; idem_action holds, for
/// each nilpotent s, the unique idempotent u_s with I_{u_s} I_s = I_s.
struct CartanTable {
    int n = 1;
    int m = 1;
    std::map<std::pair<int, int>, std::vector<std::pair<int, GaussianRational>>> nil_products;
    std::map<int, int> idem_action;
    // Display labels (1-based). Presets keep their customary numbering,
    // e.g. the biharmonic algebra shows {1, I3}.
    std::vector<std::string> basis_names;

    const std::vector<std::pair<int, GaussianRational>>* nil_product(int r, int s) const {
        auto it = nil_products.find({std::min(r, s), std::max(r, s)});
        if (it != nil_products.end()) return &it->second;
        it = nil_products.find({std::max(r, s), std::min(r, s)});
        if (it != nil_products.end()) return &it->second;
        return nullptr;
    }

    std::string basis_name(int k) const {
        if (k >= 1 && k <= static_cast<int>(basis_names.size())) return basis_names[k - 1];
        return "I" + std::to_string(k);
    }
};

/// Element coefficients over the basis; coeffs[k-1] is the I_k coordinate.
template <class S>
using Elem = std::vector<S>;

using AlgElem = Elem<Complex>;
using ExactElem = Elem<GaussianRational>;

template <class S>
Elem<S> zero_elem(const CartanTable& t) {
    return Elem<S>(static_cast<std::size_t>(t.n), S{});
}

template <class S>
Elem<S> basis_elem(const CartanTable& t, int k) {
    auto e = zero_elem<S>(t);
    e[static_cast<std::size_t>(k - 1)] = ScalarFrom<S>::from(GaussianRational(1));
    return e;
}

/// The unit 1 = I_1 + ... + I_m.
template <class S>
Elem<S> unit(const CartanTable& t) {
    auto e = zero_elem<S>(t);
    for (int u = 1; u <= t.m; ++u)
        e[static_cast<std::size_t>(u - 1)] = ScalarFrom<S>::from(GaussianRational(1));
    return e;
}

/// Bilinear extension of the Cartan-form basis products.
template <class S>
Elem<S> mul(const Elem<S>& a, const Elem<S>& b, const CartanTable& t) {
    if (static_cast<int>(a.size()) != t.n || static_cast<int>(b.size()) != t.n)
        throw std::invalid_argument("mul: element dimension mismatch");
    auto out = zero_elem<S>(t);
    for (int r = 1; r <= t.n; ++r) {
        const S& ar = a[static_cast<std::size_t>(r - 1)];
        if (scalar_is_zero(ar)) continue;
        for (int s = 1; s <= t.n; ++s) {
            const S& bs = b[static_cast<std::size_t>(s - 1)];
            if (scalar_is_zero(bs)) continue;
            S prod = ar * bs;
            if (r <= t.m && s <= t.m) {
                if (r == s) out[static_cast<std::size_t>(r - 1)] += prod;
            } else if (r <= t.m) { // idempotent x nilpotent
                auto it = t.idem_action.find(s);
                if (it != t.idem_action.end() && it->second == r)
                    out[static_cast<std::size_t>(s - 1)] += prod;
            } else if (s <= t.m) {
                auto it = t.idem_action.find(r);
                if (it != t.idem_action.end() && it->second == s)
                    out[static_cast<std::size_t>(r - 1)] += prod;
            } else {
                if (const auto* entries = t.nil_product(r, s))
                    for (const auto& [k, c] : *entries)
                        if (k >= 1 && k <= t.n)
                            out[static_cast<std::size_t>(k - 1)] += prod * ScalarFrom<S>::from(c);
            }
        }
    }
    return out;
}

template <class S>
Elem<S> add(const Elem<S>& a, const Elem<S>& b) {
    Elem<S> out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

template <class S>
Elem<S> sub(const Elem<S>& a, const Elem<S>& b) {
    Elem<S> out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

template <class S>
Elem<S> scale(const Elem<S>& a, const S& c) {
    Elem<S> out(a);
    for (auto& x : out) x *= c;
    return out;
}

/// f_u: the multiplicative functional reading off the I_u coordinate.
template <class S>
S functional(const Elem<S>& a, int u, const CartanTable& t) {
    if (u < 1 || u > t.m) throw std::out_of_range("functional: u out of [1,m]");
    return a[static_cast<std::size_t>(u - 1)];
}

/// Projection onto the radical: zeroes the idempotent coordinates.
template <class S>
Elem<S> rad_project(const Elem<S>& a, const CartanTable& t) {
    Elem<S> out(a);
    for (int u = 1; u <= t.m; ++u) out[static_cast<std::size_t>(u - 1)] = S{};
    return out;
}

template <class S>
struct InvertResult {
    std::optional<Elem<S>> value;
    int offending_u = 0; // set when not invertible: f_u(a) == 0
    bool ok() const { return value.has_value(); }
};

namespace detail {

inline bool pivot_ok(const Complex& p) { return std::abs(p) > 1e-12; }
inline bool pivot_ok(const GaussianRational& p) { return !p.is_zero(); }
inline double pivot_size(const Complex& p) { return std::abs(p); }
inline double pivot_size(const GaussianRational& p) { return p.is_zero() ? 0.0 : 1.0; }

// Dense Gaussian elimination over the scalar field; n is tiny here.
template <class S>
std::optional<std::vector<S>> solve_linear(std::vector<std::vector<S>> A, std::vector<S> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (pivot_size(A[r][col]) > pivot_size(A[piv][col])) piv = r;
        if (!pivot_ok(A[piv][col])) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || scalar_is_zero(A[r][col])) continue;
            S f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<S> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / A[i][i];
    return x;
}

} // namespace detail

/// Inverse of a, solving the linear system of the multiplication operator.
/// a is invertible iff f_u(a) != 0 for every idempotent u.
template <class S>
InvertResult<S> invert(const Elem<S>& a, const CartanTable& t) {
    InvertResult<S> res;
    for (int u = 1; u <= t.m; ++u) {
        if (!detail::pivot_ok(a[static_cast<std::size_t>(u - 1)])) {
            res.offending_u = u;
            return res;
        }
    }
    const std::size_t n = static_cast<std::size_t>(t.n);
    std::vector<std::vector<S>> M(n, std::vector<S>(n, S{}));
    for (int j = 1; j <= t.n; ++j) {
        auto col = mul(a, basis_elem<S>(t, j), t);
        for (std::size_t i = 0; i < n; ++i) M[i][static_cast<std::size_t>(j - 1)] = col[i];
    }
    auto x = detail::solve_linear(std::move(M), unit<S>(t));
    if (!x) {
        res.offending_u = 0;
        return res;
    }
    res.value = std::move(*x);
    return res;
}

/// Real linear independence of algebra elements: rank of the 2n x k matrix
/// of stacked real/imaginary parts, pivot threshold 1e-12.
bool real_lin_independent(const std::vector<AlgElem>& vectors);

struct Violation {
    std::string message;
};

/// Structural and associativity checks on a Cartan table; an empty report
/// means the table presents a commutative associative algebra.
std::vector<Violation> validate_table(const CartanTable& t);

/// Built-in algebras: A32, B, A53, A4.
CartanTable preset_table(const std::string& name);
std::vector<std::string> preset_names();

std::string format_elem(const AlgElem& a, const CartanTable& t);
std::string format_complex(const Complex& c);

inline double elem_norm(const AlgElem& a) {
    double s = 0;
    for (const auto& c : a) s = std::max(s, std::abs(c));
    return s;
}

inline AlgElem to_complex_elem(const ExactElem& a) {
    AlgElem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].to_complex();
    return out;
}

} // namespace monocalc

#endif
