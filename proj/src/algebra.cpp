#include "monocalc/algebra.hpp"

#include <sstream>

namespace monocalc {

bool real_lin_independent(const std::vector<AlgElem>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("real_lin_independent: empty list");
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("real_lin_independent: dimension mismatch");
    const std::size_t rows = 2 * n, cols = vectors.size();
    std::vector<std::vector<double>> M(rows, std::vector<double>(cols, 0.0));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            M[2 * i][j] = vectors[j][i].real();
            M[2 * i + 1][j] = vectors[j][i].imag();
        }
    constexpr double kPivotTol = 1e-12;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank + 1; r < rows; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) <= kPivotTol) continue;
        std::swap(M[piv], M[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            double f = M[r][col] / M[rank][col];
            for (std::size_t c = col; c < cols; ++c) M[r][c] -= f * M[rank][c];
        }
        ++rank;
    }
    return rank == cols;
}

namespace {

std::string triple_name(const CartanTable& t, int r, int s, int p) {
    std::ostringstream os;
    os << "(" << t.basis_name(r) << "," << t.basis_name(s) << "," << t.basis_name(p) << ")";
    return os.str();
}

std::string exact_elem_str(const ExactElem& e, const CartanTable& t) {
    std::ostringstream os;
    bool any = false;
    for (int k = 1; k <= t.n; ++k) {
        const auto& c = e[static_cast<std::size_t>(k - 1)];
        if (c.is_zero()) continue;
        if (any) os << " + ";
        os << c.str() << "*" << t.basis_name(k);
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

} // namespace

std::vector<Violation> validate_table(const CartanTable& t) {
    std::vector<Violation> out;
    auto fail = [&out](std::string msg) { out.push_back({std::move(msg)}); };

    if (t.n < 1) {
        fail("n must be >= 1");
        return out;
    }
    if (t.m < 1 || t.m > t.n) {
        fail("m must satisfy 1 <= m <= n");
        return out;
    }

    // Structural checks on the sparse map.
    for (const auto& [key, entries] : t.nil_products) {
        auto [r, s] = key;
        if (r < t.m + 1 || s < t.m + 1 || r > t.n || s > t.n) {
            fail("nil_products key (" + std::to_string(r) + "," + std::to_string(s) +
                 ") has an index outside the nilpotent range [" + std::to_string(t.m + 1) + "," +
                 std::to_string(t.n) + "]");
            continue;
        }
        if (r > s) {
            // Symmetry of the stored map: products are kept for r <= s only.
            fail("nil_products key (" + std::to_string(r) + "," + std::to_string(s) +
                 ") stored with r > s");
            if (t.nil_products.count({s, r}))
                fail("nil_products holds both orientations of (" + std::to_string(s) + "," +
                     std::to_string(r) + ")");
        }
        for (const auto& [k, c] : entries) {
            (void)c;
            if (k > t.n)
                fail("I" + std::to_string(r) + "*I" + std::to_string(s) + " targets I" +
                     std::to_string(k) + " beyond dimension n=" + std::to_string(t.n));
            if (k < std::max(r, s) + 1)
                fail("I" + std::to_string(r) + "*I" + std::to_string(s) + " targets I" +
                     std::to_string(k) + ", violating the bound k >= max(r,s)+1");
        }
    }

    // Rule 3: every nilpotent has exactly one acting idempotent in [1,m].
    for (int s = t.m + 1; s <= t.n; ++s) {
        auto it = t.idem_action.find(s);
        if (it == t.idem_action.end())
            fail("idem_action missing entry for nilpotent I" + std::to_string(s));
        else if (it->second < 1 || it->second > t.m)
            fail("idem_action[" + std::to_string(s) + "] = " + std::to_string(it->second) +
                 " is outside [1," + std::to_string(t.m) + "]");
    }
    for (const auto& [s, u] : t.idem_action) {
        (void)u;
        if (s < t.m + 1 || s > t.n)
            fail("idem_action has an entry for I" + std::to_string(s) +
                 ", which is not a nilpotent index");
    }
    if (!out.empty()) return out; // associativity checks need a well-formed map

    auto assoc_check = [&](int r, int s, int p, const char* rule) {
        auto lhs = mul(mul(basis_elem<GaussianRational>(t, r), basis_elem<GaussianRational>(t, s), t),
                       basis_elem<GaussianRational>(t, p), t);
        auto rhs = mul(basis_elem<GaussianRational>(t, r),
                       mul(basis_elem<GaussianRational>(t, s), basis_elem<GaussianRational>(t, p), t), t);
        if (lhs != rhs)
            fail(std::string(rule) + " fails on " + triple_name(t, r, s, p) + ": (xy)z = " +
                 exact_elem_str(lhs, t) + " but x(yz) = " + exact_elem_str(rhs, t));
    };

    // (A1): nilpotent triples.
    for (int r = t.m + 1; r <= t.n; ++r)
        for (int s = t.m + 1; s <= t.n; ++s)
            for (int p = t.m + 1; p <= t.n; ++p) assoc_check(r, s, p, "(A1)");
    // (A2): idempotent x nilpotent x nilpotent.
    for (int u = 1; u <= t.m; ++u)
        for (int s = t.m + 1; s <= t.n; ++s)
            for (int p = t.m + 1; p <= t.n; ++p) assoc_check(u, s, p, "(A2)");

    return out;
}

namespace {

CartanTable make_A32() {
    CartanTable t;
    t.n = 3;
    t.m = 2;
    t.idem_action = {{3, 2}}; // I2 I3 = I3
    // I3^2 = 0: no sparse entries.
    return t;
}

CartanTable make_B() {
    CartanTable t;
    t.n = 2;
    t.m = 1;
    t.idem_action = {{2, 1}};
    t.basis_names = {"1", "I3"};
    return t;
}

CartanTable make_A53() {
    CartanTable t;
    t.n = 5;
    t.m = 3;
    t.idem_action = {{4, 3}, {5, 1}}; // I3 I4 = I4, I1 I5 = I5
    // All products of I4, I5 vanish.
    return t;
}

CartanTable make_A4() {
    CartanTable t;
    t.n = 3;
    t.m = 1;
    t.idem_action = {{2, 1}, {3, 1}};
    t.basis_names = {"1", "I4", "I5"};
    return t;
}

} // namespace

CartanTable preset_table(const std::string& name) {
    if (name == "A32") return make_A32();
    if (name == "B") return make_B();
    if (name == "A53") return make_A53();
    if (name == "A4") return make_A4();
    throw std::invalid_argument("unknown preset algebra: " + name);
}

std::vector<std::string> preset_names() { return {"A32", "B", "A53", "A4"}; }

std::string format_complex(const Complex& c) {
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    const double re = c.real(), im = c.imag();
    if (im == 0.0) return fmt(re);
    std::string imag = (im == 1.0) ? "i" : (im == -1.0 ? "-i" : fmt(im) + "i");
    if (re == 0.0) return imag;
    std::ostringstream os;
    os << "(" << fmt(re) << (im > 0 ? "+" : "") << imag << ")";
    return os.str();
}

std::string format_elem(const AlgElem& a, const CartanTable& t) {
    std::ostringstream os;
    bool any = false;
    for (int k = 1; k <= t.n; ++k) {
        const Complex& c = a[static_cast<std::size_t>(k - 1)];
        if (c == Complex(0.0, 0.0)) continue;
        if (any) os << " + ";
        os << format_complex(c);
        if (t.basis_name(k) != "1") os << "·" << t.basis_name(k);
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

} // namespace monocalc
