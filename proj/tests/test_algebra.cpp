#include "monocalc/algebra.hpp"

#include <doctest.h>

#include <random>

using namespace monocalc;

namespace {

GaussianRational gr(long re_n, long re_d, long im_n, long im_d) {
    return GaussianRational::from_quad(re_n, re_d, im_n, im_d);
}

ExactElem random_exact(const CartanTable& t, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    ExactElem e = zero_elem<GaussianRational>(t);
    for (auto& c : e) c = gr(num(rng), den(rng), num(rng), den(rng));
    return e;
}

bool exact_equal(const ExactElem& x, const ExactElem& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] - y[i]).is_zero()) return false;
    return true;
}

// Dense product oracle built straight from the published multiplication
// tables, bypassing the sparse rule-2 lookup.
ExactElem table_oracle_mul(const std::string& preset, int r, int s) {
    auto t = preset_table(preset);
    auto zero = zero_elem<GaussianRational>(t);
    auto one = [&](int k) { return basis_elem<GaussianRational>(t, k); };
    if (preset == "A32") {
        // I1 I1 = I1, I2 I2 = I2, I2 I3 = I3, all else zero.
        if (r == 1 && s == 1) return one(1);
        if (r == 2 && s == 2) return one(2);
        if ((r == 2 && s == 3) || (r == 3 && s == 2)) return one(3);
        return zero;
    }
    if (preset == "B") {
        // 1*1 = 1, 1*I3 = I3, I3*I3 = 0.
        if (r == 1 && s == 1) return one(1);
        if (r == 1 || s == 1) return one(2);
        return zero;
    }
    if (preset == "A53") {
        if (r > s) std::swap(r, s);
        if (r == s && r <= 3) return one(r);
        if (r == 1 && s == 5) return one(5);
        if (r == 3 && s == 4) return one(4);
        return zero;
    }
    if (preset == "A4") {
        if (r > s) std::swap(r, s);
        if (r == 1) return one(s);
        return zero;
    }
    throw std::invalid_argument("no oracle for " + preset);
}

} // namespace

TEST_CASE("preset basis products match the published tables") {
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        for (int r = 1; r <= t.n; ++r)
            for (int s = 1; s <= t.n; ++s) {
                auto got = mul(basis_elem<GaussianRational>(t, r),
                               basis_elem<GaussianRational>(t, s), t);
                CHECK_MESSAGE(exact_equal(got, table_oracle_mul(name, r, s)),
                              name, ": I", r, " I", s);
            }
    }
}

TEST_CASE("presets validate with zero violations") {
    for (const auto& name : preset_names()) {
        auto v = validate_table(preset_table(name));
        CHECK_MESSAGE(v.empty(), name);
    }
}

TEST_CASE("ring laws hold over the exact carrier") {
    std::mt19937 rng(7);
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_exact(t, rng), b = random_exact(t, rng), c = random_exact(t, rng);
            CHECK(exact_equal(mul(a, b, t), mul(b, a, t)));
            CHECK(exact_equal(mul(mul(a, b, t), c, t), mul(a, mul(b, c, t), t)));
            CHECK(exact_equal(mul(add(a, b), c, t), add(mul(a, c, t), mul(b, c, t))));
            CHECK(exact_equal(mul(a, unit<GaussianRational>(t), t), a));
        }
    }
}

TEST_CASE("coordinate functionals are multiplicative") {
    std::mt19937 rng(11);
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_exact(t, rng), b = random_exact(t, rng);
            auto ab = mul(a, b, t);
            for (int u = 1; u <= t.m; ++u) {
                auto lhs = functional(ab, u, t);
                auto rhs = functional(a, u, t) * functional(b, u, t);
                CHECK((lhs - rhs).is_zero());
            }
        }
    }
}

TEST_CASE("radical elements are nilpotent of index at most n-m+1") {
    std::mt19937 rng(13);
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        for (int trial = 0; trial < 10; ++trial) {
            auto r = rad_project(random_exact(t, rng), t);
            auto p = unit<GaussianRational>(t);
            for (int k = 0; k < t.n - t.m + 1; ++k) p = mul(p, r, t);
            CHECK(exact_equal(p, zero_elem<GaussianRational>(t)));
        }
    }
}

TEST_CASE("inversion round-trips and reports the vanishing functional") {
    std::mt19937 rng(17);
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_exact(t, rng);
            bool invertible = true;
            for (int u = 1; u <= t.m; ++u)
                if (functional(a, u, t).is_zero()) invertible = false;
            auto res = invert(a, t);
            CHECK(res.value.has_value() == invertible);
            if (res.value)
                CHECK(exact_equal(mul(a, *res.value, t), unit<GaussianRational>(t)));
        }
        // Kill one functional; the report must name it.
        auto a = random_exact(t, rng);
        a[static_cast<std::size_t>(t.m - 1)] = GaussianRational{};
        auto res = invert(a, t);
        REQUIRE(!res.value.has_value());
        CHECK(res.offending_u == t.m);
    }
}

TEST_CASE("structural corruptions are rejected") {
    auto t = preset_table("A53");

    SUBCASE("rule-2 lower bound: product may only hit strictly later nilpotents") {
        auto bad = t;
        bad.nil_products[{4, 4}] = {{4, gr(1, 1, 0, 1)}};
        CHECK(!validate_table(bad).empty());
    }
    SUBCASE("target index out of range") {
        auto bad = t;
        bad.nil_products[{4, 4}] = {{6, gr(1, 1, 0, 1)}};
        CHECK(!validate_table(bad).empty());
    }
    SUBCASE("idem_action must cover every nilpotent") {
        auto bad = t;
        bad.idem_action.erase(5);
        CHECK(!validate_table(bad).empty());
    }
    SUBCASE("idem_action must point at an idempotent") {
        auto bad = t;
        bad.idem_action[5] = 4;
        CHECK(!validate_table(bad).empty());
    }
    SUBCASE("associativity: I4 I4 = I5 breaks (I1 I4) I4 = I1 (I4 I4)") {
        auto bad = t;
        bad.nil_products[{4, 4}] = {{5, gr(1, 1, 0, 1)}};
        CHECK(!validate_table(bad).empty());
    }
}

TEST_CASE("real linear independence detector") {
    // {1, i} independent over R, {1, 2} not.
    std::vector<std::vector<Complex>> cols1{{Complex(1, 0)}, {Complex(0, 1)}};
    CHECK(real_lin_independent(cols1));
    std::vector<std::vector<Complex>> cols2{{Complex(1, 0)}, {Complex(2, 0)}};
    CHECK(!real_lin_independent(cols2));
}

TEST_CASE("element formatting") {
    auto t = preset_table("B");
    AlgElem e{Complex(0, 2), Complex(2, 2)};
    CHECK(format_elem(e, t) == "2i + (2+2i)·I3");
}
