#include "monocalc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace monocalc {

Complex SymbolicPoly::evaluate(const std::vector<Complex>& assignment) const {
    Complex acc{0.0, 0.0};
    for (const auto& [mono, c] : terms) {
        Complex v = c.to_complex();
        for (const auto& [var, e] : mono.exps) {
            if (var < 0 || var >= static_cast<int>(assignment.size()))
                throw std::out_of_range("SymbolicPoly::evaluate: missing variable");
            for (int i = 0; i < e; ++i) v *= assignment[static_cast<std::size_t>(var)];
        }
        acc += v;
    }
    return acc;
}

std::string variable_name(int v, int n_vars) {
    if (v < n_vars) return "a" + std::to_string(v + 1);
    return "b" + std::to_string(v - n_vars + 1);
}

std::string SymbolicPoly::str(int n_vars) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        GaussianRational coeff = c;
        if (!first) {
            // Pull a real negative sign out for readability.
            if (coeff.im == 0 && coeff.re < 0) {
                os << " - ";
                coeff = -coeff;
            } else {
                os << " + ";
            }
        }
        first = false;
        const bool is_const = mono.exps.empty();
        const bool unit_coeff = (coeff == GaussianRational(1));
        const bool minus_unit = (coeff == GaussianRational(-1));
        if (is_const || (!unit_coeff && !minus_unit)) {
            os << coeff.str();
            if (!is_const) os << "*";
        } else if (minus_unit) {
            os << "-";
        }
        bool first_var = true;
        for (const auto& [v, e] : mono.exps) {
            if (!first_var) os << "*";
            first_var = false;
            os << variable_name(v, n_vars);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace monocalc
