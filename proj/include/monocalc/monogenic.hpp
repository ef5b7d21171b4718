#ifndef MONOCALC_MONOGENIC_HPP
#define MONOCALC_MONOGENIC_HPP

#include "monocalc/algebra.hpp"
#include "monocalc/holo.hpp"
#include "monocalc/reduction.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace monocalc {

struct Point3 {
    double x = 0, y = 0, z = 0;
};

/// A monogenic function presented by its contour-integral data: one holomorphic F_u per
/// idempotent and an optional G_s per nilpotent (missing entries are zero).
struct MonogenicFn {
    CartanTable table;
    VarTriple triple;
    std::map<int, HoloFn> F; // keyed by u in [1, m]
    std::map<int, HoloFn> G; // keyed by s in [m+1, n]

    const HoloFn& f_at(int u) const;
    HoloFn g_at(int s) const; // zero function when absent
};

/// Spectral points xi_u = x + y a_u + z b_u.
std::vector<Complex> xi(const CartanTable& table, const VarTriple& triple, Point3 p);

struct LineDesc {
    int u = 0;
    bool degenerate = false; // both Im a_u and Im b_u vanish: a plane, not a line
    std::array<double, 3> point{};
    std::array<double, 3> direction{};
};

/// The lines L_u of non-invertible points (all pass through the origin).
std::vector<LineDesc> singular_lines(const CartanTable& table, const VarTriple& triple);

/// Finite pole decomposition of (t - zeta)^{-1}: entry (pole u, order k) is
/// the algebra coefficient of 1/(t - xi_u)^k.  The I_u terms sit at order 1;
/// the I_s term of order k carries the recurrence value Q_{k,s}.
struct ResolventExpansion {
    std::map<std::pair<int, int>, AlgElem> entries;
};

ResolventExpansion resolvent_expansion(const CartanTable& table, const VarTriple& triple,
                                       Point3 p);

/// Sums the expansion at a concrete t; throws when t hits a spectral point.
AlgElem resolvent_eval(Complex t, const CartanTable& table, const VarTriple& triple, Point3 p);

/// Residue evaluation of the contour-integral representation at a point of R^3.
AlgElem eval_monogenic(const MonogenicFn& fn, Point3 p);

/// Same formula without the f_u(E3) = C hypothesis check; the verification
/// harness uses it to report residuals for triples that fail the hypothesis.
AlgElem eval_monogenic_unchecked(const MonogenicFn& fn, Point3 p);

/// Explicit closed-form expressions for the four preset algebras; an oracle
/// independent of the resolvent machinery.
AlgElem eval_closed_form(const std::string& preset, const MonogenicFn& fn, Point3 p);

/// Phi_u = I_u Phi.
AlgElem project_component(const MonogenicFn& fn, int u, Point3 p);

} // namespace monocalc

#endif
