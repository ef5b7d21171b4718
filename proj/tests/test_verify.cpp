#include "monocalc/io.hpp"
#include "monocalc/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace monocalc;

namespace {

MonogenicFn fixture_bundle(const std::string& name) {
    MonogenicFn fn;
    fn.table = preset_table(name);
    fn.triple = preset_triple(name);
    for (int u = 1; u <= fn.table.m; ++u)
        fn.F[u] = HoloFn::polynomial({Complex(1, 0), Complex(u, 0), Complex(0.5, u)});
    for (int s = fn.table.m + 1; s <= fn.table.n; ++s)
        fn.G[s] = HoloFn::polynomial({Complex(s, 0), Complex(0, 1)});
    return fn;
}

} // namespace

TEST_CASE("central differences recover analytic partials") {
    // f(x,y,z) = (sin x cos y e^z, x^2 y z) per component.
    ElemFn f = [](Point3 p) {
        return AlgElem{Complex(std::sin(p.x) * std::cos(p.y) * std::exp(p.z), 0),
                       Complex(p.x * p.x * p.y * p.z, 0)};
    };
    Point3 p{0.4, -0.3, 0.2};
    FdConfig cfg;
    cfg.h = 1e-4;
    auto dx = fd_partial(f, p, 0, cfg);
    CHECK(std::abs(dx[0].real() - std::cos(p.x) * std::cos(p.y) * std::exp(p.z)) < 1e-8);
    CHECK(std::abs(dx[1].real() - 2 * p.x * p.y * p.z) < 1e-8);

    cfg.stencil_order = 4;
    auto dy = fd_partial(f, p, 1, cfg);
    CHECK(std::abs(dy[0].real() + std::sin(p.x) * std::sin(p.y) * std::exp(p.z)) < 1e-11);

    cfg.stencil_order = 2;
    auto dxy = fd_mixed(f, p, 1, 1, 0, cfg);
    CHECK(std::abs(dxy[0].real() + std::cos(p.x) * std::sin(p.y) * std::exp(p.z)) < 1e-6);
    auto dzz = fd_mixed(f, p, 0, 0, 2, cfg);
    CHECK(std::abs(dzz[0].real() - std::sin(p.x) * std::cos(p.y) * std::exp(p.z)) < 1e-6);
}

TEST_CASE("point sampling is deterministic and avoids the singular set") {
    auto t = preset_table("A32");
    auto tr = preset_triple("A32");
    auto p1 = sample_points(50, 99, t, tr);
    auto p2 = sample_points(50, 99, t, tr);
    REQUIRE(p1.size() == 50);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        CHECK(p1[i].x == p2[i].x);
        CHECK(p1[i].y == p2[i].y);
        CHECK(p1[i].z == p2[i].z);
        CHECK(std::abs(p1[i].x) <= 2.0);
    }
    auto lines = singular_lines(t, tr);
    for (const auto& p : p1)
        for (const auto& line : lines) {
            if (line.degenerate) continue;
            const auto& d = line.direction;
            double dot = p.x * d[0] + p.y * d[1] + p.z * d[2];
            double rx = p.x - dot * d[0], ry = p.y - dot * d[1], rz = p.z - dot * d[2];
            CHECK(std::sqrt(rx * rx + ry * ry + rz * rz) >= 1e-3);
        }
}

TEST_CASE("monogenicity residuals of genuine bundles are small") {
    for (const auto& name : preset_names()) {
        auto fn = fixture_bundle(name);
        FdConfig cfg;
        auto points = sample_points(40, 12345, fn.table, fn.triple);
        auto rep = check_monogenic(fn, points, cfg);
        CHECK_MESSAGE(rep.pass, name, " max residual ", rep.max_residual);
    }
}

TEST_CASE("swapping the basis vectors breaks monogenicity detectably") {
    auto fn = fixture_bundle("A32");
    auto broken = fn;
    std::swap(broken.triple.a, broken.triple.b); // evaluator/model mismatch
    FdConfig cfg;
    auto points = sample_points(20, 5, fn.table, fn.triple);
    // Evaluate with the original function but check against the swapped triple.
    VerificationReport rep;
    ElemFn f = [&fn](Point3 q) { return eval_monogenic(fn, q); };
    double worst = 0;
    for (const auto& p : points) {
        auto dx = fd_partial(f, p, 0, cfg);
        auto dy = fd_partial(f, p, 1, cfg);
        auto ry = sub(dy, mul(dx, broken.triple.a, fn.table));
        worst = std::max(worst, elem_norm(ry));
    }
    CHECK(worst > 1e-2);
}

TEST_CASE("finite-difference error shrinks at second order") {
    // Degree-5 data so the truncation term of the stencil is nonzero.
    MonogenicFn fn;
    fn.table = preset_table("A53");
    fn.triple = preset_triple("A53");
    for (int u = 1; u <= fn.table.m; ++u)
        fn.F[u] = HoloFn::polynomial(
            {Complex(1, 0), Complex(0, u), Complex(0.5, 0), Complex(0.25, -0.5), Complex(0, 0.125),
             Complex(0.0625, 0)});
    auto points = sample_points(10, 777, fn.table, fn.triple);
    FdConfig coarse, fine;
    coarse.h = 1e-2;
    fine.h = 1e-3;
    auto lap = PdeSpec::laplace();
    auto rc = pde_residual(fn, lap, points, coarse);
    auto rf = pde_residual(fn, lap, points, fine);
    double ratio = rc.max_residual / rf.max_residual;
    CHECK(ratio > 50.0);
    CHECK(ratio < 200.0);
}

TEST_CASE("laplace residual vanishes for harmonic data and not otherwise") {
    FdConfig cfg;
    cfg.tol = 10.0 * cfg.h * cfg.h;
    auto lap = PdeSpec::laplace();
    for (const auto& name : preset_names()) {
        auto fn = fixture_bundle(name);
        auto points = sample_points(25, 31337, fn.table, fn.triple);
        auto rep = pde_residual(fn, lap, points, cfg);
        CHECK_MESSAGE(rep.pass, name, " residual ", rep.max_residual);
    }

    // Real non-harmonic triple with F(t) = t^2: the first component is
    // (x + y)^2, whose laplacian is 4.
    MonogenicFn bad;
    bad.table = preset_table("A32");
    bad.triple = VarTriple{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    bad.F[1] = HoloFn::polynomial({0.0, 0.0, 1.0});
    bad.F[2] = HoloFn::polynomial({0.0, 0.0, 1.0});
    std::vector<Point3> pts{{0.5, 0.25, -0.75}, {1.0, 1.0, 1.0}};
    auto rep = pde_residual(bad, lap, pts, cfg);
    CHECK(rep.max_residual >= 1.0);
    CHECK(std::abs(rep.max_residual - 4.0) < 1e-3);
}

TEST_CASE("cylinder decomposition holds exactly through the residue machinery") {
    for (const auto& name : std::vector<std::string>{"A32", "A53"}) {
        auto fn = fixture_bundle(name);
        auto points = sample_points(30, 2024, fn.table, fn.triple);
        auto rep = verify_decomposition(fn, points);
        CHECK_MESSAGE(rep.summary.pass, name, " residual ", rep.summary.max_residual);
        CHECK(rep.per_u.size() == static_cast<std::size_t>(fn.table.m));
        for (const auto& d : rep.per_u) {
            CHECK(d.max_residual <= 1e-12);
            CHECK(d.spectral_residual <= 1e-12);
        }
        CHECK(rep.sum_residual <= 1e-12);
    }
}

TEST_CASE("reduced bundles carry only the radical data acted on by I_u") {
    auto fn = fixture_bundle("A53");
    auto red = reduced_algebra(fn.table);
    auto b1 = reduced_bundle(fn, red, 1); // I1 acts on I5 -> reduced index 3
    CHECK(b1.G.count(3) == 1);
    CHECK(b1.G.count(2) == 0);
    auto b2 = reduced_bundle(fn, red, 2); // I2 acts on nothing
    CHECK(b2.G.empty());
    auto b3 = reduced_bundle(fn, red, 3); // I3 acts on I4 -> reduced index 2
    CHECK(b3.G.count(2) == 1);
    CHECK(b3.G.count(3) == 0);
}
