#include "monocalc/monogenic.hpp"

#include <cmath>
#include <stdexcept>

namespace monocalc {

const HoloFn& MonogenicFn::f_at(int u) const {
    auto it = F.find(u);
    if (it == F.end()) throw std::out_of_range("MonogenicFn: missing F_" + std::to_string(u));
    return it->second;
}

HoloFn MonogenicFn::g_at(int s) const {
    auto it = G.find(s);
    return it == G.end() ? HoloFn::zero() : it->second;
}

std::vector<Complex> xi(const CartanTable& table, const VarTriple& triple, Point3 p) {
    std::vector<Complex> out(static_cast<std::size_t>(table.m));
    for (int u = 1; u <= table.m; ++u)
        out[static_cast<std::size_t>(u - 1)] = Complex(p.x, 0.0) +
                                               triple.a[static_cast<std::size_t>(u - 1)] * p.y +
                                               triple.b[static_cast<std::size_t>(u - 1)] * p.z;
    return out;
}

std::vector<LineDesc> singular_lines(const CartanTable& table, const VarTriple& triple) {
    std::vector<LineDesc> out;
    for (int u = 1; u <= table.m; ++u) {
        const Complex au = triple.a[static_cast<std::size_t>(u - 1)];
        const Complex bu = triple.b[static_cast<std::size_t>(u - 1)];
        LineDesc line;
        line.u = u;
        line.point = {0.0, 0.0, 0.0};
        if (au.imag() == 0.0 && bu.imag() == 0.0) {
            line.degenerate = true; // the second equation vanishes: a plane
            out.push_back(line);
            continue;
        }
        // y Im a_u + z Im b_u = 0  =>  (y, z) along (Im b_u, -Im a_u).
        double dy = bu.imag(), dz = -au.imag();
        double dx = -(dy * au.real() + dz * bu.real());
        double norm = std::sqrt(dx * dx + dy * dy + dz * dz);
        line.direction = {dx / norm, dy / norm, dz / norm};
        out.push_back(line);
    }
    return out;
}

ResolventExpansion resolvent_expansion(const CartanTable& table, const VarTriple& triple,
                                       Point3 p) {
    const int n = table.n, m = table.m;
    ResolventExpansion exp;
    for (int u = 1; u <= m; ++u)
        exp.entries[{u, 1}] = basis_elem<Complex>(table, u);
    if (n == m) return exp;

    // T_s = y a_s + z b_s.
    std::vector<Complex> T(static_cast<std::size_t>(n + 1), Complex(0.0, 0.0));
    for (int s = m + 1; s <= n; ++s)
        T[static_cast<std::size_t>(s)] = triple.a[static_cast<std::size_t>(s - 1)] * p.y +
                                         triple.b[static_cast<std::size_t>(s - 1)] * p.z;

    // Upsilon_{r,s}^k: the I_s coordinate of I_r I_k.
    auto upsilon = [&](int r, int s, int k) -> Complex {
        if (const auto* entries = table.nil_product(r, k))
            for (const auto& [target, c] : *entries)
                if (target == s) return c.to_complex();
        return {0.0, 0.0};
    };

    // B_{r,s} = sum_{k=m+1}^{s-1} T_k Upsilon_{r,s}^k.
    auto B = [&](int r, int s) {
        Complex acc{0.0, 0.0};
        for (int k = m + 1; k <= s - 1; ++k) acc += T[static_cast<std::size_t>(k)] * upsilon(r, s, k);
        return acc;
    };

    // Q_{2,s} = T_s; Q_{k,s} = sum_{r=k+m-2}^{s-1} Q_{k-1,r} B_{r,s}.
    std::map<std::pair<int, int>, Complex> Q;
    for (int s = m + 1; s <= n; ++s) Q[{2, s}] = T[static_cast<std::size_t>(s)];
    for (int s = m + 1; s <= n; ++s)
        for (int k = 3; k <= s - m + 1; ++k) {
            Complex acc{0.0, 0.0};
            for (int r = k + m - 2; r <= s - 1; ++r) acc += Q.at({k - 1, r}) * B(r, s);
            Q[{k, s}] = acc;
        }

    for (int s = m + 1; s <= n; ++s) {
        const int pole = table.idem_action.at(s);
        for (int k = 2; k <= s - m + 1; ++k) {
            Complex q = Q.at({k, s});
            if (q == Complex(0.0, 0.0)) continue;
            auto key = std::make_pair(pole, k);
            auto it = exp.entries.find(key);
            if (it == exp.entries.end())
                it = exp.entries.emplace(key, zero_elem<Complex>(table)).first;
            it->second[static_cast<std::size_t>(s - 1)] += q;
        }
    }
    return exp;
}

AlgElem resolvent_eval(Complex t, const CartanTable& table, const VarTriple& triple, Point3 p) {
    auto spectral = xi(table, triple, p);
    for (int u = 1; u <= table.m; ++u)
        if (std::abs(t - spectral[static_cast<std::size_t>(u - 1)]) < 1e-14)
            throw std::domain_error("resolvent_eval: t hits the spectral point xi_" +
                                    std::to_string(u));
    auto exp = resolvent_expansion(table, triple, p);
    auto acc = zero_elem<Complex>(table);
    for (const auto& [key, coeff] : exp.entries) {
        auto [pole, order] = key;
        Complex factor = Complex(1.0, 0.0);
        Complex dt = t - spectral[static_cast<std::size_t>(pole - 1)];
        for (int k = 0; k < order; ++k) factor /= dt;
        acc = add(acc, scale(coeff, factor));
    }
    return acc;
}

AlgElem eval_monogenic(const MonogenicFn& fn, Point3 p) {
    auto chk = check_triple(fn.table, fn.triple);
    for (int u = 1; u <= fn.table.m; ++u)
        if (!chk.surjective[static_cast<std::size_t>(u - 1)])
            throw std::invalid_argument("eval_monogenic: f_" + std::to_string(u) +
                                        "(E3) = C fails (a_u and b_u both real)");
    return eval_monogenic_unchecked(fn, p);
}

AlgElem eval_monogenic_unchecked(const MonogenicFn& fn, Point3 p) {
    const auto& t = fn.table;
    auto spectral = xi(t, fn.triple, p);
    auto exp = resolvent_expansion(t, fn.triple, p);

    // Residues of H(t)(t - zeta)^{-1} around the contour enclosing only
    // xi_q: entry (q, k) contributes H^{(k-1)}(xi_q)/(k-1)! times its
    // algebra coefficient.
    auto cauchy = [&](const HoloFn& h, int q) {
        int max_order = 0;
        for (const auto& [key, coeff] : exp.entries) {
            (void)coeff;
            if (key.first == q) max_order = std::max(max_order, key.second);
        }
        auto acc = zero_elem<Complex>(t);
        if (max_order == 0) return acc;
        Jet j = jet(h, spectral[static_cast<std::size_t>(q - 1)], max_order);
        for (const auto& [key, coeff] : exp.entries) {
            if (key.first != q) continue;
            acc = add(acc, scale(coeff, j[static_cast<std::size_t>(key.second - 1)]));
        }
        return acc;
    };

    auto acc = zero_elem<Complex>(t);
    for (int u = 1; u <= t.m; ++u)
        acc = add(acc, mul(basis_elem<Complex>(t, u), cauchy(fn.f_at(u), u), t));
    for (int s = t.m + 1; s <= t.n; ++s) {
        auto g = fn.g_at(s);
        if (g.is_zero()) continue;
        acc = add(acc, mul(basis_elem<Complex>(t, s), cauchy(g, t.idem_action.at(s)), t));
    }
    return acc;
}

namespace {

Complex tcoef(const VarTriple& tr, int s, Point3 p) {
    return tr.a[static_cast<std::size_t>(s - 1)] * p.y + tr.b[static_cast<std::size_t>(s - 1)] * p.z;
}

} // namespace

AlgElem eval_closed_form(const std::string& preset, const MonogenicFn& fn, Point3 p) {
    const auto& t = fn.table;
    auto want = preset_table(preset);
    if (want.n != t.n || want.m != t.m || want.idem_action != t.idem_action ||
        want.nil_products != t.nil_products)
        throw std::invalid_argument("eval_closed_form: bundle algebra does not match preset " +
                                    preset);
    auto s = xi(t, fn.triple, p);
    auto out = zero_elem<Complex>(t);
    if (preset == "A32") {
        out[0] = holo_eval(fn.f_at(1), s[0]);
        out[1] = holo_eval(fn.f_at(2), s[1]);
        out[2] = tcoef(fn.triple, 3, p) * holo_derivative(fn.f_at(2), s[1]) +
                 holo_eval(fn.g_at(3), s[1]);
    } else if (preset == "B") {
        out[0] = holo_eval(fn.f_at(1), s[0]);
        out[1] = tcoef(fn.triple, 2, p) * holo_derivative(fn.f_at(1), s[0]) +
                 holo_eval(fn.g_at(2), s[0]);
    } else if (preset == "A53") {
        for (int u = 1; u <= 3; ++u)
            out[static_cast<std::size_t>(u - 1)] =
                holo_eval(fn.f_at(u), s[static_cast<std::size_t>(u - 1)]);
        out[3] = tcoef(fn.triple, 4, p) * holo_derivative(fn.f_at(3), s[2]) +
                 holo_eval(fn.g_at(4), s[2]);
        out[4] = tcoef(fn.triple, 5, p) * holo_derivative(fn.f_at(1), s[0]) +
                 holo_eval(fn.g_at(5), s[0]);
    } else if (preset == "A4") {
        out[0] = holo_eval(fn.f_at(1), s[0]);
        for (int k = 2; k <= 3; ++k)
            out[static_cast<std::size_t>(k - 1)] =
                tcoef(fn.triple, k, p) * holo_derivative(fn.f_at(1), s[0]) +
                holo_eval(fn.g_at(k), s[0]);
    } else {
        throw std::invalid_argument("eval_closed_form: no closed form for preset " + preset);
    }
    return out;
}

AlgElem project_component(const MonogenicFn& fn, int u, Point3 p) {
    if (u < 1 || u > fn.table.m) throw std::out_of_range("project_component: u out of [1,m]");
    return mul(basis_elem<Complex>(fn.table, u), eval_monogenic(fn, p), fn.table);
}

} // namespace monocalc
