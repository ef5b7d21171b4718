#include "monocalc/io.hpp"
#include "monocalc/monogenic.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace monocalc;

namespace {

Complex rc(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    return {d(rng), d(rng)};
}

HoloFn random_poly(std::mt19937& rng, int max_deg = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Complex> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = rc(rng);
    return HoloFn::polynomial(std::move(c));
}

MonogenicFn random_bundle(const std::string& name, std::mt19937& rng, bool exponential) {
    MonogenicFn fn;
    fn.table = preset_table(name);
    fn.triple = preset_triple(name);
    for (int u = 1; u <= fn.table.m; ++u)
        fn.F[u] = exponential ? HoloFn::exponential(rc(rng)) : random_poly(rng);
    for (int s = fn.table.m + 1; s <= fn.table.n; ++s)
        fn.G[s] = exponential ? HoloFn::exponential(rc(rng)) : random_poly(rng);
    return fn;
}

} // namespace

TEST_CASE("jet of a polynomial at a shifted center") {
    // h(t) = t^2 at t0 = 1+i: value 2i, slope 2+2i, curvature/2 = 1.
    auto h = HoloFn::polynomial({0.0, 0.0, 1.0});
    auto j = jet(h, Complex(1, 1), 3);
    CHECK(std::abs(j[0] - Complex(0, 2)) < 1e-15);
    CHECK(std::abs(j[1] - Complex(2, 2)) < 1e-15);
    CHECK(std::abs(j[2] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("jet of a constant and of the exponential") {
    auto j = jet(HoloFn::constant(Complex(3, -1)), Complex(0.5, 0.25), 4);
    CHECK(j[0] == Complex(3, -1));
    for (int k = 1; k < 4; ++k) CHECK(j[static_cast<std::size_t>(k)] == Complex(0, 0));

    Complex lam(0.3, -0.7), t0(0.2, 0.1);
    auto je = jet(HoloFn::exponential(lam), t0, 3);
    Complex e = std::exp(lam * t0);
    CHECK(std::abs(je[0] - e) < 1e-14);
    CHECK(std::abs(je[1] - lam * e) < 1e-14);
    CHECK(std::abs(je[2] - lam * lam * e / 2.0) < 1e-14);
}

TEST_CASE("taylor tables recentre like polynomials") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        auto p = random_poly(rng, 4);
        Complex c0 = rc(rng), t0 = rc(rng);
        // Same function expressed as a table around c0.
        auto around = jet(p, c0, static_cast<int>(p.coeffs.size()));
        auto table = HoloFn::taylor(c0, around);
        auto jp = jet(p, t0, 4);
        auto jt = jet(table, t0, 4);
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(jp[static_cast<std::size_t>(k)] - jt[static_cast<std::size_t>(k)]) <
                  1e-12);
    }
}

TEST_CASE("jets match finite differences of the evaluation") {
    std::mt19937 rng(43);
    auto p = random_poly(rng, 5);
    Complex t0 = rc(rng);
    double h = 1e-5;
    Complex fd = (holo_eval(p, t0 + h) - holo_eval(p, t0 - h)) / (2.0 * h);
    CHECK(std::abs(jet(p, t0, 2)[1] - fd) < 1e-8);
}

TEST_CASE("resolvent expansion of the biharmonic algebra") {
    auto t = preset_table("B");
    auto tr = preset_triple("B"); // e2 = I3, e3 = i
    Point3 p{1.0, 1.0, 1.0};
    auto exp = resolvent_expansion(t, tr, p);
    REQUIRE(exp.entries.size() == 2);
    // order 1: the unit; order 2: eta I3 with eta = y a3 + z b3 = 1.
    auto e1 = exp.entries.at({1, 1});
    CHECK(std::abs(e1[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(e1[1]) < 1e-15);
    auto e2 = exp.entries.at({1, 2});
    CHECK(std::abs(e2[0]) < 1e-15);
    CHECK(std::abs(e2[1] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("no expansion order exceeds s - m + 1") {
    std::mt19937 rng(47);
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        VarTriple tr{AlgElem(static_cast<std::size_t>(t.n)),
                     AlgElem(static_cast<std::size_t>(t.n))};
        for (auto& c : tr.a) c = Complex(d(rng), d(rng));
        for (auto& c : tr.b) c = Complex(d(rng), d(rng));
        auto exp = resolvent_expansion(t, tr, Point3{d(rng), d(rng), d(rng)});
        for (const auto& [key, coeff] : exp.entries) {
            (void)coeff;
            CHECK(key.second <= t.n - t.m + 1);
        }
    }
}

TEST_CASE("resolvent identity and agreement with generic inversion") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (const auto& name : preset_names()) {
        auto t = preset_table(name);
        auto tr = preset_triple(name);
        for (int trial = 0; trial < 25; ++trial) {
            Point3 p{d(rng), d(rng), d(rng)};
            Complex tt(d(rng) + 4.0, d(rng)); // well away from the spectral points
            auto zeta = add(scale(tr.a, Complex(p.y, 0)), scale(tr.b, Complex(p.z, 0)));
            zeta = add(zeta, scale(unit<Complex>(t), Complex(p.x, 0)));
            auto lhs = sub(scale(unit<Complex>(t), tt), zeta);

            auto r = resolvent_eval(tt, t, tr, p);
            CHECK(elem_norm(sub(mul(lhs, r, t), unit<Complex>(t))) < 1e-12);

            auto inv = invert(lhs, t);
            REQUIRE(inv.value.has_value());
            CHECK(elem_norm(sub(r, *inv.value)) < 1e-12);
        }
    }
}

TEST_CASE("pole hits are rejected") {
    auto t = preset_table("B");
    auto tr = preset_triple("B");
    Point3 p{1.0, 1.0, 1.0};
    Complex pole = xi(t, tr, p)[0];
    CHECK_THROWS_AS(resolvent_eval(pole, t, tr, p), std::domain_error);
}

TEST_CASE("worked value in the biharmonic algebra") {
    // F(t) = t^2, G = 0, triple from the harmonic fixture: at (1,1,1)
    // xi = 1+i and Phi = 2i + (2+2i) I3.
    MonogenicFn fn;
    fn.table = preset_table("B");
    fn.triple = preset_triple("B");
    fn.F[1] = HoloFn::polynomial({0.0, 0.0, 1.0});
    auto v = eval_monogenic(fn, Point3{1, 1, 1});
    CHECK(std::abs(v[0] - Complex(0, 2)) < 1e-14);
    CHECK(std::abs(v[1] - Complex(2, 2)) < 1e-14);
}

TEST_CASE("residue evaluation matches the closed forms") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (const auto& name : preset_names()) {
        for (bool exponential : {false, true}) {
            auto fn = random_bundle(name, rng, exponential);
            for (int trial = 0; trial < 25; ++trial) {
                Point3 p{d(rng), d(rng), d(rng)};
                auto got = eval_monogenic(fn, p);
                auto want = eval_closed_form(name, fn, p);
                double scale = std::max(1.0, elem_norm(want));
                CHECK(elem_norm(sub(got, want)) / scale < 1e-12);
            }
        }
    }
}

TEST_CASE("hypothesis violations are reported") {
    MonogenicFn fn;
    fn.table = preset_table("A32");
    fn.triple = preset_triple("A32");
    fn.triple.a = {1.0, 0.0, 0.0};
    fn.triple.b = {0.0, 1.0, 0.0};
    fn.F[1] = HoloFn::polynomial({0.0, 0.0, 1.0});
    fn.F[2] = HoloFn::zero();
    CHECK_THROWS_AS(eval_monogenic(fn, Point3{1, 1, 1}), std::invalid_argument);
    CHECK_NOTHROW(eval_monogenic_unchecked(fn, Point3{1, 1, 1}));
}

TEST_CASE("singular lines") {
    auto t = preset_table("B");
    VarTriple tr{{Complex(0, 1), 0.0}, {0.0, 0.0}}; // a1 = i, b1 = 0
    auto lines = singular_lines(t, tr);
    REQUIRE(lines.size() == 1);
    CHECK(!lines[0].degenerate);
    // x = 0 and y = 0: the z axis.
    CHECK(std::abs(lines[0].direction[0]) < 1e-15);
    CHECK(std::abs(lines[0].direction[1]) < 1e-15);
    CHECK(std::abs(std::abs(lines[0].direction[2]) - 1.0) < 1e-15);

    VarTriple real_tr{{1.0, 0.0}, {2.0, 0.0}};
    auto degen = singular_lines(t, real_tr);
    REQUIRE(degen.size() == 1);
    CHECK(degen[0].degenerate);
}

TEST_CASE("component projections sum to the full value") {
    std::mt19937 rng(61);
    auto fn = random_bundle("A53", rng, false);
    Point3 p{0.3, -0.8, 1.1};
    auto full = eval_monogenic(fn, p);
    auto acc = zero_elem<Complex>(fn.table);
    for (int u = 1; u <= fn.table.m; ++u) acc = add(acc, project_component(fn, u, p));
    CHECK(elem_norm(sub(acc, full)) < 1e-13);
}
