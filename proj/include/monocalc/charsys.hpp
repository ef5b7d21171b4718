#ifndef MONOCALC_CHARSYS_HPP
#define MONOCALC_CHARSYS_HPP

#include "monocalc/algebra.hpp"
#include "monocalc/poly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace monocalc {

/// Constant-coefficient PDE of order N: sum of C_{abg} d^N/dx^a dy^b dz^g.
struct PdeSpec {
    int N = 0;
    std::map<std::array<int, 3>, GaussianRational> coeffs;

    /// Throws on structurally invalid data (index sums, empty coefficient set).
    void check() const;

    /// The 3D Laplacian.
    static PdeSpec laplace();
};

/// Polynomial system in the unknown coefficients a_r, b_r, each equation
/// read as "= 0", stored scale-normalized and deduplicated.
struct CharSystem {
    int n = 0; // algebra dimension; variables are a_1..a_n, b_1..b_n
    std::vector<SymbolicPoly> equations;

    /// Canonical text, one equation per line.
    std::string text() const;

    bool contains(const SymbolicPoly& normalized_eq) const;
};

inline constexpr int kDefaultOrderBound = 6;

/// The characteristic polynomial sum C_{abg} e2^b e3^g expanded in the
/// algebra with symbolic coefficients; component k is V_k.
Elem<SymbolicPoly> char_expand_element(const CartanTable& table, const PdeSpec& pde,
                                       int order_bound = kDefaultOrderBound);

/// Full characteristic system {V_1 = 0, ..., V_n = 0} (zero V_k dropped).
CharSystem symbolic_char_expand(const CartanTable& table, const PdeSpec& pde,
                                int order_bound = kDefaultOrderBound);

/// System generated by X(I_u, e2 I_u, e3 I_u) = 0: equation V_u plus V_k
/// for every nilpotent k acted on by I_u.
CharSystem projected_char_system(const CartanTable& table, const PdeSpec& pde, int u,
                                 int order_bound = kDefaultOrderBound);

/// True iff every equation of sub occurs in full.
bool is_reduction(const CharSystem& sub, const CharSystem& full);

/// Substitutes assignment[v] for variable v in every equation.
std::vector<Complex> evaluate_system(const CharSystem& system,
                                     const std::vector<Complex>& assignment);

/// Assignment vector (a_1..a_n, b_1..b_n) from triple coefficients.
std::vector<Complex> assignment_from_triple(const std::vector<Complex>& a,
                                            const std::vector<Complex>& b);

} // namespace monocalc

#endif
