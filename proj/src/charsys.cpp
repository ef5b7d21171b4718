#include "monocalc/charsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monocalc {

void PdeSpec::check() const {
    if (N < 1) throw std::invalid_argument("PdeSpec: order N must be positive");
    bool any = false;
    for (const auto& [idx, c] : coeffs) {
        if (idx[0] < 0 || idx[1] < 0 || idx[2] < 0 || idx[0] + idx[1] + idx[2] != N)
            throw std::invalid_argument("PdeSpec: multi-index does not sum to N");
        if (!c.is_zero()) any = true;
    }
    if (!any) throw std::invalid_argument("PdeSpec: all coefficients are zero");
}

PdeSpec PdeSpec::laplace() {
    PdeSpec p;
    p.N = 2;
    p.coeffs[{2, 0, 0}] = GaussianRational(1);
    p.coeffs[{0, 2, 0}] = GaussianRational(1);
    p.coeffs[{0, 0, 2}] = GaussianRational(1);
    return p;
}

Elem<SymbolicPoly> char_expand_element(const CartanTable& table, const PdeSpec& pde,
                                       int order_bound) {
    pde.check();
    if (pde.N > order_bound)
        throw std::invalid_argument("char_expand_element: PDE order " + std::to_string(pde.N) +
                                    " exceeds bound " + std::to_string(order_bound));
    const int n = table.n;
    Elem<SymbolicPoly> e2(static_cast<std::size_t>(n)), e3(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) {
        e2[static_cast<std::size_t>(r - 1)] = SymbolicPoly::var_a(r);
        e3[static_cast<std::size_t>(r - 1)] = SymbolicPoly::var_b(r, n);
    }
    // Powers e2^b, e3^g up to the orders actually used.
    int max_b = 0, max_g = 0;
    for (const auto& [idx, c] : pde.coeffs) {
        (void)c;
        max_b = std::max(max_b, idx[1]);
        max_g = std::max(max_g, idx[2]);
    }
    std::vector<Elem<SymbolicPoly>> pow2{unit<SymbolicPoly>(table)}, pow3{unit<SymbolicPoly>(table)};
    for (int b = 1; b <= max_b; ++b) pow2.push_back(mul(pow2.back(), e2, table));
    for (int g = 1; g <= max_g; ++g) pow3.push_back(mul(pow3.back(), e3, table));

    auto acc = zero_elem<SymbolicPoly>(table);
    for (const auto& [idx, c] : pde.coeffs) {
        if (c.is_zero()) continue;
        auto term = mul(pow2[static_cast<std::size_t>(idx[1])],
                        pow3[static_cast<std::size_t>(idx[2])], table);
        acc = add(acc, scale(term, SymbolicPoly::constant(c)));
    }
    return acc;
}

namespace {

CharSystem system_from_element(const CartanTable& table, const Elem<SymbolicPoly>& elem) {
    CharSystem out;
    out.n = table.n;
    for (const auto& vk : elem) {
        if (vk.is_zero()) continue;
        auto norm = vk.normalized();
        if (!out.contains(norm)) out.equations.push_back(std::move(norm));
    }
    return out;
}

} // namespace

CharSystem symbolic_char_expand(const CartanTable& table, const PdeSpec& pde, int order_bound) {
    return system_from_element(table, char_expand_element(table, pde, order_bound));
}

CharSystem projected_char_system(const CartanTable& table, const PdeSpec& pde, int u,
                                 int order_bound) {
    if (u < 1 || u > table.m)
        throw std::out_of_range("projected_char_system: u out of [1,m]");
    auto full = char_expand_element(table, pde, order_bound);
    auto projected = mul(basis_elem<SymbolicPoly>(table, u), full, table);
    return system_from_element(table, projected);
}

bool CharSystem::contains(const SymbolicPoly& normalized_eq) const {
    return std::any_of(equations.begin(), equations.end(),
                       [&](const SymbolicPoly& e) { return e == normalized_eq; });
}

bool is_reduction(const CharSystem& sub, const CharSystem& full) {
    return std::all_of(sub.equations.begin(), sub.equations.end(),
                       [&](const SymbolicPoly& e) { return full.contains(e); });
}

std::string CharSystem::text() const {
    std::ostringstream os;
    for (const auto& eq : equations) os << eq.str(n) << " = 0\n";
    return os.str();
}

std::vector<Complex> evaluate_system(const CharSystem& system,
                                     const std::vector<Complex>& assignment) {
    std::vector<Complex> out;
    out.reserve(system.equations.size());
    for (const auto& eq : system.equations) {
        for (int v : eq.variables())
            if (v >= static_cast<int>(assignment.size()))
                throw std::out_of_range("evaluate_system: assignment missing variable " +
                                        variable_name(v, system.n));
        out.push_back(eq.evaluate(assignment));
    }
    return out;
}

std::vector<Complex> assignment_from_triple(const std::vector<Complex>& a,
                                            const std::vector<Complex>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("assignment_from_triple: a/b size mismatch");
    std::vector<Complex> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace monocalc
