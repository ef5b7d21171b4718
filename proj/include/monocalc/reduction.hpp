#ifndef MONOCALC_REDUCTION_HPP
#define MONOCALC_REDUCTION_HPP

#include "monocalc/algebra.hpp"
#include "monocalc/charsys.hpp"

#include <map>
#include <vector>

namespace monocalc {

/// Coefficients of e2 = sum a_r I_r and e3 = sum b_r I_r (e1 is the unit).
template <class S>
struct TripleT {
    std::vector<S> a;
    std::vector<S> b;
};

using VarTriple = TripleT<Complex>;
using ExactTriple = TripleT<GaussianRational>;

inline VarTriple to_complex_triple(const ExactTriple& t) {
    return {to_complex_elem(t.a), to_complex_elem(t.b)};
}

struct TripleCheck {
    bool independent = false;           // {1, e2, e3} over R
    std::vector<bool> surjective;       // per u: a_u or b_u has nonzero imaginary part
    bool all_surjective() const {
        for (bool s : surjective)
            if (!s) return false;
        return true;
    }
};

TripleCheck check_triple(const CartanTable& table, const VarTriple& triple);

/// The algebra 1 (+)_s N: one idempotent, the parent's nilpotent products.
struct ReducedAlgebra {
    CartanTable table;
    std::map<int, int> index_map; // parent nilpotent index -> reduced index (>= 2)
};

ReducedAlgebra reduced_algebra(const CartanTable& table);

/// Embeds a reduced-algebra element into the parent algebra
/// (scalar part spread over all idempotents).
template <class S>
Elem<S> embed_reduced(const CartanTable& parent, const ReducedAlgebra& red, const Elem<S>& x) {
    auto out = scale(unit<S>(parent), x[0]);
    for (const auto& [orig, idx] : red.index_map)
        out[static_cast<std::size_t>(orig - 1)] = x[static_cast<std::size_t>(idx - 1)];
    return out;
}

/// Reduced triple e2~(u) = a_u + I_u Rad e2, e3~(u) = b_u + I_u Rad e3,
/// computed in the parent algebra and transported along index_map.
template <class S>
TripleT<S> reduced_triple(const CartanTable& parent, const ReducedAlgebra& red,
                          const TripleT<S>& triple, int u) {
    if (u < 1 || u > parent.m) throw std::out_of_range("reduced_triple: u out of [1,m]");
    auto iu = basis_elem<S>(parent, u);
    auto rad2 = mul(iu, rad_project(triple.a, parent), parent);
    auto rad3 = mul(iu, rad_project(triple.b, parent), parent);
    TripleT<S> out{zero_elem<S>(red.table), zero_elem<S>(red.table)};
    out.a[0] = triple.a[static_cast<std::size_t>(u - 1)];
    out.b[0] = triple.b[static_cast<std::size_t>(u - 1)];
    for (const auto& [orig, idx] : red.index_map) {
        out.a[static_cast<std::size_t>(idx - 1)] = rad2[static_cast<std::size_t>(orig - 1)];
        out.b[static_cast<std::size_t>(idx - 1)] = rad3[static_cast<std::size_t>(orig - 1)];
    }
    return out;
}

/// X(1, e2, e3) evaluated at concrete algebra elements.
template <class S>
Elem<S> char_value(const CartanTable& t, const PdeSpec& pde, const Elem<S>& e2,
                   const Elem<S>& e3) {
    pde.check();
    int max_b = 0, max_g = 0;
    for (const auto& [idx, c] : pde.coeffs) {
        (void)c;
        max_b = std::max(max_b, idx[1]);
        max_g = std::max(max_g, idx[2]);
    }
    std::vector<Elem<S>> pow2{unit<S>(t)}, pow3{unit<S>(t)};
    for (int b = 1; b <= max_b; ++b) pow2.push_back(mul(pow2.back(), e2, t));
    for (int g = 1; g <= max_g; ++g) pow3.push_back(mul(pow3.back(), e3, t));
    auto acc = zero_elem<S>(t);
    for (const auto& [idx, c] : pde.coeffs) {
        if (c.is_zero()) continue;
        auto term = mul(pow2[static_cast<std::size_t>(idx[1])],
                        pow3[static_cast<std::size_t>(idx[2])], t);
        acc = add(acc, scale(term, ScalarFrom<S>::from(c)));
    }
    return acc;
}

template <class S>
struct ReducedTripleReport {
    bool hypothesis_ok = false;
    Elem<S> hypothesis_residual; // X(1,e2,e3) in the parent algebra
    std::vector<Elem<S>> residuals; // per u, X(1, e2~(u), e3~(u)) in the reduced algebra
};

/// Checks that each reduced triple satisfies the characteristic equation
/// in the reduced algebra, exactly (exact carrier) or to tolerance.
template <class S>
ReducedTripleReport<S> verify_reduced_triples(const CartanTable& table, const PdeSpec& pde,
                                  const TripleT<S>& triple, double tol = 1e-10) {
    ReducedTripleReport<S> rep;
    rep.hypothesis_residual = char_value(table, pde, triple.a, triple.b);
    rep.hypothesis_ok = true;
    for (const auto& c : rep.hypothesis_residual) {
        if constexpr (std::is_same_v<S, GaussianRational>) {
            if (!c.is_zero()) rep.hypothesis_ok = false;
        } else {
            if (std::abs(c) > tol) rep.hypothesis_ok = false;
        }
    }
    auto red = reduced_algebra(table);
    for (int u = 1; u <= table.m; ++u) {
        auto rt = reduced_triple(table, red, triple, u);
        rep.residuals.push_back(char_value(red.table, pde, rt.a, rt.b));
    }
    return rep;
}

struct IndependenceResult {
    bool hypothesis_ok = false; // original triple independent over R
    int branch = 0;             // 1: radical vectors independent; 2: the inequality test
    bool independent = false;
};

/// Dichotomy test for real independence of {1, e2~(u), e3~(u)}.
IndependenceResult reduced_independence(const CartanTable& table, const VarTriple& triple, int u);

} // namespace monocalc

#endif
