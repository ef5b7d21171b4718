#include "monocalc/reduction.hpp"

namespace monocalc {

TripleCheck check_triple(const CartanTable& table, const VarTriple& triple) {
    if (static_cast<int>(triple.a.size()) != table.n ||
        static_cast<int>(triple.b.size()) != table.n)
        throw std::invalid_argument("check_triple: coefficient vector size mismatch");
    TripleCheck out;
    AlgElem one = unit<Complex>(table);
    out.independent = real_lin_independent({one, triple.a, triple.b});
    out.surjective.resize(static_cast<std::size_t>(table.m));
    for (int u = 1; u <= table.m; ++u) {
        const auto& au = triple.a[static_cast<std::size_t>(u - 1)];
        const auto& bu = triple.b[static_cast<std::size_t>(u - 1)];
        out.surjective[static_cast<std::size_t>(u - 1)] =
            (au.imag() != 0.0) || (bu.imag() != 0.0);
    }
    return out;
}

ReducedAlgebra reduced_algebra(const CartanTable& table) {
    ReducedAlgebra red;
    red.table.n = table.n - table.m + 1;
    red.table.m = 1;
    red.table.basis_names.push_back("1");
    for (int s = table.m + 1; s <= table.n; ++s) {
        int idx = s - table.m + 1;
        red.index_map[s] = idx;
        red.table.idem_action[idx] = 1;
        red.table.basis_names.push_back(table.basis_name(s));
    }
    for (const auto& [key, entries] : table.nil_products) {
        auto [r, s] = key;
        std::vector<std::pair<int, GaussianRational>> mapped;
        for (const auto& [k, c] : entries) mapped.push_back({red.index_map.at(k), c});
        red.table.nil_products[{red.index_map.at(r), red.index_map.at(s)}] = std::move(mapped);
    }
    return red;
}

IndependenceResult reduced_independence(const CartanTable& table, const VarTriple& triple, int u) {
    if (u < 1 || u > table.m) throw std::out_of_range("reduced_independence: u out of [1,m]");
    IndependenceResult res;
    res.hypothesis_ok = check_triple(table, triple).independent;

    auto iu = basis_elem<Complex>(table, u);
    auto rad2 = mul(iu, rad_project(triple.a, table), table);
    auto rad3 = mul(iu, rad_project(triple.b, table), table);
    if (real_lin_independent({rad2, rad3})) {
        res.branch = 1;
        res.independent = true;
        return res;
    }
    res.branch = 2;
    const double im_au = triple.a[static_cast<std::size_t>(u - 1)].imag();
    const double im_bu = triple.b[static_cast<std::size_t>(u - 1)].imag();
    constexpr double kTol = 1e-12;
    for (int r = table.m + 1; r <= table.n; ++r) {
        auto it = table.idem_action.find(r);
        if (it == table.idem_action.end() || it->second != u) continue;
        const auto& ar = triple.a[static_cast<std::size_t>(r - 1)];
        const auto& br = triple.b[static_cast<std::size_t>(r - 1)];
        if (std::abs(im_au * br.real() - im_bu * ar.real()) > kTol ||
            std::abs(im_au * br.imag() - im_bu * ar.imag()) > kTol) {
            res.independent = true;
            return res;
        }
    }
    res.independent = false;
    return res;
}

} // namespace monocalc
