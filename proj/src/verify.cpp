#include "monocalc/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace monocalc {

namespace {

Point3 shifted(Point3 p, int axis, double d) {
    switch (axis) {
        case 0: p.x += d; break;
        case 1: p.y += d; break;
        case 2: p.z += d; break;
        default: throw std::out_of_range("axis must be 0, 1 or 2");
    }
    return p;
}

} // namespace

AlgElem fd_partial(const ElemFn& f, Point3 p, int axis, const FdConfig& cfg) {
    if (cfg.h <= 0) throw std::invalid_argument("fd_partial: h must be positive");
    const double h = cfg.h;
    if (cfg.stencil_order == 4) {
        auto fm2 = f(shifted(p, axis, -2 * h)), fm1 = f(shifted(p, axis, -h));
        auto fp1 = f(shifted(p, axis, h)), fp2 = f(shifted(p, axis, 2 * h));
        AlgElem out(fp1.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = (fm2[i] - 8.0 * fm1[i] + 8.0 * fp1[i] - fp2[i]) / (12.0 * h);
        return out;
    }
    auto fm = f(shifted(p, axis, -h)), fp = f(shifted(p, axis, h));
    AlgElem out(fp.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (fp[i] - fm[i]) / (2.0 * h);
    return out;
}

AlgElem fd_mixed(const ElemFn& f, Point3 p, int ax, int ay, int az, const FdConfig& cfg) {
    if (ax > 0)
        return fd_partial([&](Point3 q) { return fd_mixed(f, q, ax - 1, ay, az, cfg); }, p, 0, cfg);
    if (ay > 0)
        return fd_partial([&](Point3 q) { return fd_mixed(f, q, 0, ay - 1, az, cfg); }, p, 1, cfg);
    if (az > 0)
        return fd_partial([&](Point3 q) { return fd_mixed(f, q, 0, 0, az - 1, cfg); }, p, 2, cfg);
    return f(p);
}

VerificationReport check_monogenic(const MonogenicFn& fn, const std::vector<Point3>& points,
                                   const FdConfig& cfg) {
    VerificationReport rep;
    rep.op = "check_monogenic";
    rep.h = cfg.h;
    rep.tol = cfg.tol;
    rep.points = static_cast<int>(points.size());
    ElemFn f = [&fn](Point3 q) { return eval_monogenic(fn, q); };
    for (const auto& p : points) {
        auto dx = fd_partial(f, p, 0, cfg);
        auto dy = fd_partial(f, p, 1, cfg);
        auto dz = fd_partial(f, p, 2, cfg);
        auto ry = sub(dy, mul(dx, fn.triple.a, fn.table));
        auto rz = sub(dz, mul(dx, fn.triple.b, fn.table));
        double scale = std::max(1.0, elem_norm(dx));
        rep.residuals.push_back(std::max(elem_norm(ry), elem_norm(rz)) / scale);
    }
    for (double r : rep.residuals) rep.max_residual = std::max(rep.max_residual, r);
    rep.pass = rep.max_residual <= rep.tol;
    return rep;
}

VerificationReport pde_residual(const MonogenicFn& fn, const PdeSpec& pde,
                                const std::vector<Point3>& points, const FdConfig& cfg) {
    pde.check();
    if (pde.N > 4)
        throw std::invalid_argument("pde_residual: finite differences limited to order N <= 4");
    VerificationReport rep;
    rep.op = "pde_residual";
    rep.h = cfg.h;
    rep.tol = cfg.tol;
    rep.points = static_cast<int>(points.size());
    ElemFn f = [&fn](Point3 q) { return eval_monogenic_unchecked(fn, q); };
    for (const auto& p : points) {
        auto acc = zero_elem<Complex>(fn.table);
        for (const auto& [idx, c] : pde.coeffs) {
            if (c.is_zero()) continue;
            auto d = fd_mixed(f, p, idx[0], idx[1], idx[2], cfg);
            acc = add(acc, scale(d, c.to_complex()));
        }
        rep.residuals.push_back(elem_norm(acc));
    }
    for (double r : rep.residuals) rep.max_residual = std::max(rep.max_residual, r);
    rep.pass = rep.max_residual <= rep.tol;
    return rep;
}

MonogenicFn reduced_bundle(const MonogenicFn& fn, const ReducedAlgebra& red, int u) {
    MonogenicFn out;
    out.table = red.table;
    out.triple = reduced_triple(fn.table, red, fn.triple, u);
    out.F[1] = fn.f_at(u);
    for (int s = fn.table.m + 1; s <= fn.table.n; ++s)
        if (fn.table.idem_action.at(s) == u) out.G[red.index_map.at(s)] = fn.g_at(s);
    return out;
}

DecompositionReport verify_decomposition(const MonogenicFn& fn, const std::vector<Point3>& points,
                               double tol) {
    const auto& t = fn.table;
    auto chk = check_triple(t, fn.triple);
    if (!chk.all_surjective())
        throw std::invalid_argument("verify_decomposition: f_u(E3) = C fails for some u");

    DecompositionReport rep;
    rep.summary.op = "verify_decomposition";
    rep.summary.tol = tol;
    rep.summary.points = static_cast<int>(points.size());
    auto red = reduced_algebra(t);
    std::vector<MonogenicFn> bundles;
    for (int u = 1; u <= t.m; ++u) {
        bundles.push_back(reduced_bundle(fn, red, u));
        rep.per_u.push_back({u, 0.0, 0.0});
    }

    for (const auto& p : points) {
        auto phi = eval_monogenic(fn, p);
        auto spectral = xi(t, fn.triple, p);
        double denom = std::max(1.0, elem_norm(phi));
        auto sum = zero_elem<Complex>(t);
        for (int u = 1; u <= t.m; ++u) {
            auto& detail = rep.per_u[static_cast<std::size_t>(u - 1)];
            const auto& bundle = bundles[static_cast<std::size_t>(u - 1)];
            auto phi_u = mul(basis_elem<Complex>(t, u), phi, t);
            auto tilde = eval_monogenic(bundle, p);
            auto rhs = mul(basis_elem<Complex>(t, u), embed_reduced(t, red, tilde), t);
            detail.max_residual =
                std::max(detail.max_residual, elem_norm(sub(phi_u, rhs)) / denom);
            // f(zeta~(u)) = f_u(zeta): both sides are x + a_u y + b_u z.
            Complex f_tilde = xi(red.table, bundle.triple, p)[0];
            detail.spectral_residual = std::max(
                detail.spectral_residual,
                std::abs(f_tilde - spectral[static_cast<std::size_t>(u - 1)]));
            sum = add(sum, rhs);
        }
        rep.sum_residual = std::max(rep.sum_residual, elem_norm(sub(sum, phi)) / denom);
    }
    rep.summary.max_residual = rep.sum_residual;
    for (const auto& d : rep.per_u)
        rep.summary.max_residual =
            std::max({rep.summary.max_residual, d.max_residual, d.spectral_residual});
    rep.summary.pass = rep.summary.max_residual <= tol;
    return rep;
}

std::vector<Point3> sample_points(int count, unsigned seed, const CartanTable& table,
                                  const VarTriple& triple, double exclusion) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    auto lines = singular_lines(table, triple);
    auto too_close = [&](const Point3& p) {
        for (const auto& line : lines) {
            if (line.degenerate) {
                // Plane x + y Re a_u + z Re b_u = 0.
                const Complex au = triple.a[static_cast<std::size_t>(line.u - 1)];
                const Complex bu = triple.b[static_cast<std::size_t>(line.u - 1)];
                double num = std::abs(p.x + p.y * au.real() + p.z * bu.real());
                double den = std::sqrt(1.0 + au.real() * au.real() + bu.real() * bu.real());
                if (num / den < exclusion) return true;
                continue;
            }
            const auto& d = line.direction;
            double dot = p.x * d[0] + p.y * d[1] + p.z * d[2];
            double dx = p.x - dot * d[0], dy = p.y - dot * d[1], dz = p.z - dot * d[2];
            if (std::sqrt(dx * dx + dy * dy + dz * dz) < exclusion) return true;
        }
        return false;
    };
    std::vector<Point3> out;
    while (static_cast<int>(out.size()) < count) {
        Point3 p{dist(rng), dist(rng), dist(rng)};
        if (!too_close(p)) out.push_back(p);
    }
    return out;
}

} // namespace monocalc
