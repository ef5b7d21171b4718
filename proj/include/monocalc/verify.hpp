#ifndef MONOCALC_VERIFY_HPP
#define MONOCALC_VERIFY_HPP

#include "monocalc/monogenic.hpp"

#include <functional>
#include <string>
#include <vector>

namespace monocalc {

struct FdConfig {
    double h = 1e-3;
    double tol = 1e-5;
    int stencil_order = 2; // 2 or 4
};

struct VerificationReport {
    std::string op;
    double h = 0;
    double tol = 0;
    double max_residual = 0;
    bool pass = false;
    int points = 0;
    unsigned seed = 0;
    std::vector<double> residuals; // per point
};

using ElemFn = std::function<AlgElem(Point3)>;

/// Central-difference partial along axis 0/1/2 (x/y/z), componentwise.
AlgElem fd_partial(const ElemFn& f, Point3 p, int axis, const FdConfig& cfg);

/// Mixed partial d^{a+b+g} / dx^a dy^b dz^g by composed central differences.
AlgElem fd_mixed(const ElemFn& f, Point3 p, int ax, int ay, int az, const FdConfig& cfg);

/// Residuals of the monogenicity conditions dPhi/dy = dPhi/dx e2,
/// dPhi/dz = dPhi/dx e3, scaled by max(1, |dPhi/dx|).
VerificationReport check_monogenic(const MonogenicFn& fn, const std::vector<Point3>& points,
                                   const FdConfig& cfg);

/// Applies L_N to every component of Phi by finite differences.
VerificationReport pde_residual(const MonogenicFn& fn, const PdeSpec& pde,
                                const std::vector<Point3>& points, const FdConfig& cfg);

struct DecompositionDetail {
    int u = 0;
    double max_residual = 0; // componentwise, over points, for Phi_u = I_u Phi~_u
    double spectral_residual = 0; // |f(zeta~(u)) - f_u(zeta)|
};

struct DecompositionReport {
    VerificationReport summary; // max over the per-u equalities and the sum identity
    std::vector<DecompositionDetail> per_u;
    double sum_residual = 0; // Phi = sum_u I_u Phi~_u
};

/// Exact-identity check of the cylinder decomposition, evaluated through
/// the residue machinery on both sides (no finite differences).
DecompositionReport verify_decomposition(const MonogenicFn& fn, const std::vector<Point3>& points,
                               double tol = 1e-12);

/// Builds the reduced-algebra bundle used on the right-hand side for a
/// given u: F~ = F_u, G~_s = G_s for the nilpotents acted on by I_u.
MonogenicFn reduced_bundle(const MonogenicFn& fn, const ReducedAlgebra& red, int u);

/// Seeded sample of points in [-2,2]^3, excluding a tube of radius
/// `exclusion` around each singular line.
std::vector<Point3> sample_points(int count, unsigned seed, const CartanTable& table,
                                  const VarTriple& triple, double exclusion = 1e-3);

} // namespace monocalc

#endif
