#ifndef MONOCALC_POLY_HPP
#define MONOCALC_POLY_HPP

#include "monocalc/algebra.hpp"
#include "monocalc/gaussian_rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace monocalc {

/// Monomial over the 2n symbolic coefficients a_1..a_n, b_1..b_n.
/// Variable index j in [0, n) is a_{j+1}; j in [n, 2n) is b_{j-n+1}.
/// Ordered graded-lex with a_1 < ... < a_n < b_1 < ... < b_n.
struct Monomial {
    // (variable, exponent), sorted by variable, exponents > 0.
    std::vector<std::pair<int, int>> exps;

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps) d += e;
        return d;
    }
    int exponent(int var) const {
        for (const auto& [v, e] : exps)
            if (v == var) return e;
        return 0;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        // Equal degree: scan from the largest variable down; the monomial
        // with the smaller exponent at the first difference is smaller.
        auto ia = exps.rbegin(), ib = o.exps.rbegin();
        while (ia != exps.rend() || ib != o.exps.rend()) {
            int va = (ia != exps.rend()) ? ia->first : -1;
            int vb = (ib != o.exps.rend()) ? ib->first : -1;
            if (va > vb) return false; // we have a high variable they lack
            if (vb > va) return true;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return false;
    }

    static Monomial one() { return {}; }
    static Monomial var(int v) { return Monomial{{{v, 1}}}; }

    Monomial times(const Monomial& o) const {
        Monomial out;
        auto ia = exps.begin(), ib = o.exps.begin();
        while (ia != exps.end() || ib != o.exps.end()) {
            if (ib == o.exps.end() || (ia != exps.end() && ia->first < ib->first))
                out.exps.push_back(*ia++);
            else if (ia == exps.end() || ib->first < ia->first)
                out.exps.push_back(*ib++);
            else {
                out.exps.push_back({ia->first, ia->second + ib->second});
                ++ia;
                ++ib;
            }
        }
        return out;
    }
};

/// Sparse exact polynomial over Gaussian rationals, canonical form
/// (no explicit zeros, terms keyed by ordered monomials).
struct SymbolicPoly {
    std::map<Monomial, GaussianRational> terms;

    bool is_zero() const { return terms.empty(); }

    static SymbolicPoly constant(const GaussianRational& c) {
        SymbolicPoly p;
        if (!c.is_zero()) p.terms[Monomial::one()] = c;
        return p;
    }
    static SymbolicPoly variable(int v) {
        SymbolicPoly p;
        p.terms[Monomial::var(v)] = GaussianRational(1);
        return p;
    }
    /// a_r, 1-based.
    static SymbolicPoly var_a(int r) { return variable(r - 1); }
    /// b_r, 1-based; n is the coefficient count of the triple.
    static SymbolicPoly var_b(int r, int n) { return variable(n + r - 1); }

    void add_term(const Monomial& mono, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend SymbolicPoly operator+(const SymbolicPoly& p, const SymbolicPoly& q) {
        SymbolicPoly out = p;
        for (const auto& [mono, c] : q.terms) out.add_term(mono, c);
        return out;
    }
    friend SymbolicPoly operator-(const SymbolicPoly& p, const SymbolicPoly& q) {
        SymbolicPoly out = p;
        for (const auto& [mono, c] : q.terms) out.add_term(mono, -c);
        return out;
    }
    friend SymbolicPoly operator*(const SymbolicPoly& p, const SymbolicPoly& q) {
        SymbolicPoly out;
        for (const auto& [ma, ca] : p.terms)
            for (const auto& [mb, cb] : q.terms) out.add_term(ma.times(mb), ca * cb);
        return out;
    }
    SymbolicPoly& operator+=(const SymbolicPoly& q) { return *this = *this + q; }
    SymbolicPoly& operator-=(const SymbolicPoly& q) { return *this = *this - q; }
    SymbolicPoly& operator*=(const SymbolicPoly& q) { return *this = *this * q; }

    SymbolicPoly scaled(const GaussianRational& c) const {
        SymbolicPoly out;
        if (c.is_zero()) return out;
        for (const auto& [mono, v] : terms) out.terms[mono] = v * c;
        return out;
    }

    SymbolicPoly pow(int k) const {
        SymbolicPoly out = constant(GaussianRational(1));
        for (int i = 0; i < k; ++i) out *= *this;
        return out;
    }

    bool operator==(const SymbolicPoly& o) const { return terms == o.terms; }
    bool operator!=(const SymbolicPoly& o) const { return !(*this == o); }
    bool operator<(const SymbolicPoly& o) const {
        return std::lexicographical_compare(
            terms.begin(), terms.end(), o.terms.begin(), o.terms.end(),
            [](const auto& a, const auto& b) {
                if (a.first < b.first) return true;
                if (b.first < a.first) return false;
                return a.second < b.second;
            });
    }

    /// Scale-normalize: divide by the coefficient of the smallest monomial.
    SymbolicPoly normalized() const {
        if (terms.empty()) return {};
        return scaled(GaussianRational(1) / terms.begin()->second);
    }

    std::set<int> variables() const {
        std::set<int> out;
        for (const auto& [mono, c] : terms) {
            (void)c;
            for (const auto& [v, e] : mono.exps) {
                (void)e;
                out.insert(v);
            }
        }
        return out;
    }

    /// Substitute complex values; assignment[v] is the value of variable v.
    Complex evaluate(const std::vector<Complex>& assignment) const;

    /// Monomials in increasing graded-lex order, e.g. "1 + a2^2 + b2^2".
    std::string str(int n_vars) const;
};

inline bool scalar_is_zero(const SymbolicPoly& p) { return p.is_zero(); }
template <>
struct ScalarFrom<SymbolicPoly> {
    static SymbolicPoly from(const GaussianRational& q) { return SymbolicPoly::constant(q); }
};

std::string variable_name(int v, int n_vars);

} // namespace monocalc

#endif
