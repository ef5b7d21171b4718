#include "monocalc/io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace monocalc {

namespace {

std::vector<int> split_key(const std::string& key, std::size_t expected) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    if (out.size() != expected)
        throw std::invalid_argument("bad integer key '" + key + "'");
    return out;
}

GaussianRational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("rational must be [re_num, re_den, im_num, im_den]");
    return GaussianRational::from_quad(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
                                       j[2].get<std::int64_t>(), j[3].get<std::int64_t>());
}

Json rational_to_json(const GaussianRational& q) {
    return Json::array({static_cast<std::int64_t>(boost::multiprecision::numerator(q.re)),
                        static_cast<std::int64_t>(boost::multiprecision::denominator(q.re)),
                        static_cast<std::int64_t>(boost::multiprecision::numerator(q.im)),
                        static_cast<std::int64_t>(boost::multiprecision::denominator(q.im))});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

} // namespace

CartanTable table_from_json(const Json& j) {
    CartanTable t;
    t.n = j.at("n").get<int>();
    t.m = j.at("m").get<int>();
    if (j.contains("nil_products"))
        for (const auto& [key, entries] : j.at("nil_products").items()) {
            auto rs = split_key(key, 2);
            std::vector<std::pair<int, GaussianRational>> list;
            for (const auto& entry : entries) {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::invalid_argument("nil_products entry must be [k, rational]");
                list.push_back({entry[0].get<int>(), rational_from_json(entry[1])});
            }
            t.nil_products[{rs[0], rs[1]}] = std::move(list);
        }
    if (j.contains("idem_action"))
        for (const auto& [key, u] : j.at("idem_action").items())
            t.idem_action[std::stoi(key)] = u.get<int>();
    return t;
}

Json table_to_json(const CartanTable& t) {
    Json j;
    j["n"] = t.n;
    j["m"] = t.m;
    Json np = Json::object();
    for (const auto& [key, entries] : t.nil_products) {
        Json list = Json::array();
        for (const auto& [k, c] : entries) list.push_back(Json::array({k, rational_to_json(c)}));
        np[std::to_string(key.first) + "," + std::to_string(key.second)] = std::move(list);
    }
    j["nil_products"] = std::move(np);
    Json ia = Json::object();
    for (const auto& [s, u] : t.idem_action) ia[std::to_string(s)] = u;
    j["idem_action"] = std::move(ia);
    return j;
}

PdeSpec pde_from_json(const Json& j) {
    PdeSpec p;
    p.N = j.at("N").get<int>();
    for (const auto& [key, c] : j.at("coeffs").items()) {
        auto abg = split_key(key, 3);
        p.coeffs[{abg[0], abg[1], abg[2]}] = rational_from_json(c);
    }
    p.check();
    return p;
}

Json pde_to_json(const PdeSpec& p) {
    Json j;
    j["N"] = p.N;
    Json coeffs = Json::object();
    for (const auto& [idx, c] : p.coeffs)
        coeffs[std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
               std::to_string(idx[2])] = rational_to_json(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

ParsedTriple triple_from_json(const Json& j) {
    ParsedTriple out;
    const Json& a = j.at("a");
    const Json& b = j.at("b");
    if (a.size() != b.size()) throw std::invalid_argument("triple: a/b length mismatch");
    bool rational = !a.empty() && a[0].is_array() && a[0].size() == 4;
    if (rational) {
        ExactTriple et;
        for (const auto& e : a) et.a.push_back(rational_from_json(e));
        for (const auto& e : b) et.b.push_back(rational_from_json(e));
        out.value = to_complex_triple(et);
        out.exact = std::move(et);
    } else {
        for (const auto& e : a) out.value.a.push_back(complex_from_json(e));
        for (const auto& e : b) out.value.b.push_back(complex_from_json(e));
    }
    return out;
}

Json triple_to_json(const VarTriple& t) {
    Json j;
    Json a = Json::array(), b = Json::array();
    for (const auto& c : t.a) a.push_back(complex_to_json(c));
    for (const auto& c : t.b) b.push_back(complex_to_json(c));
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    return j;
}

HoloFn holo_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "poly") {
        std::vector<Complex> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
        return HoloFn::polynomial(std::move(coeffs));
    }
    if (kind == "exp") return HoloFn::exponential(complex_from_json(j.at("lambda")));
    if (kind == "taylor") {
        std::vector<Complex> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
        return HoloFn::taylor(complex_from_json(j.at("center")), std::move(coeffs));
    }
    throw std::invalid_argument("unknown function kind '" + kind + "'");
}

Json holo_to_json(const HoloFn& h) {
    Json j;
    switch (h.kind) {
        case HoloFn::Kind::Polynomial: {
            j["kind"] = "poly";
            Json coeffs = Json::array();
            for (const auto& c : h.coeffs) coeffs.push_back(complex_to_json(c));
            j["coeffs"] = std::move(coeffs);
            break;
        }
        case HoloFn::Kind::Exponential:
            j["kind"] = "exp";
            j["lambda"] = complex_to_json(h.lambda);
            break;
        case HoloFn::Kind::TaylorTable: {
            j["kind"] = "taylor";
            j["center"] = complex_to_json(h.center);
            Json coeffs = Json::array();
            for (const auto& c : h.coeffs) coeffs.push_back(complex_to_json(c));
            j["coeffs"] = std::move(coeffs);
            break;
        }
    }
    return j;
}

MonogenicFn bundle_from_json(const Json& j, const CartanTable& table, const VarTriple& triple) {
    MonogenicFn fn;
    fn.table = table;
    fn.triple = triple;
    if (j.contains("F"))
        for (const auto& [key, f] : j.at("F").items()) fn.F[std::stoi(key)] = holo_from_json(f);
    if (j.contains("G"))
        for (const auto& [key, g] : j.at("G").items()) fn.G[std::stoi(key)] = holo_from_json(g);
    for (int u = 1; u <= table.m; ++u)
        if (!fn.F.count(u)) fn.F[u] = HoloFn::zero();
    for (const auto& [u, f] : fn.F) {
        (void)f;
        if (u < 1 || u > table.m)
            throw std::invalid_argument("bundle: F index " + std::to_string(u) + " out of [1,m]");
    }
    for (const auto& [s, g] : fn.G) {
        (void)g;
        if (s < table.m + 1 || s > table.n)
            throw std::invalid_argument("bundle: G index " + std::to_string(s) +
                                        " is not a nilpotent index");
    }
    return fn;
}

Json bundle_to_json(const MonogenicFn& fn) {
    Json j;
    Json F = Json::object(), G = Json::object();
    for (const auto& [u, f] : fn.F) F[std::to_string(u)] = holo_to_json(f);
    for (const auto& [s, g] : fn.G) G[std::to_string(s)] = holo_to_json(g);
    j["F"] = std::move(F);
    j["G"] = std::move(G);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    return Json{{"op", r.op},       {"h", r.h},
                {"tol", r.tol},     {"max_residual", r.max_residual},
                {"pass", r.pass},   {"points", r.points},
                {"seed", r.seed}};
}

ExactTriple preset_triple_exact(const std::string& name) {
    auto i = [](std::int64_t re, std::int64_t im) { return GaussianRational(re, im); };
    if (name == "A32") // harmonic: e2 = i I1 + I3, e3 = i I2
        return {{i(0, 1), i(0, 0), i(1, 0)}, {i(0, 0), i(0, 1), i(0, 0)}};
    if (name == "A53") // harmonic: satisfies (1 + a_u^2 + b_u^2 = 0, cross terms 0)
        return {{i(0, 1), i(0, 1), i(0, 1), i(0, 0), i(0, 0)},
                {i(0, 0), i(0, 0), i(0, 0), i(1, 0), i(1, 0)}};
    if (name == "B") // the u=2 reduced triple of the A32 fixture
        return {{i(0, 0), i(1, 0)}, {i(0, 1), i(0, 0)}};
    if (name == "A4") // the u=1 reduced triple of the A53 fixture, plus I4 data
        return {{i(0, 1), i(0, 0), i(0, 0)}, {i(0, 0), i(1, 0), i(1, 0)}};
    throw std::invalid_argument("no triple fixture for preset " + name);
}

VarTriple preset_triple(const std::string& name) {
    return to_complex_triple(preset_triple_exact(name));
}

MonogenicFn preset_bundle(const std::string& name) {
    MonogenicFn fn;
    fn.table = preset_table(name);
    fn.triple = preset_triple(name);
    // Small polynomial data, distinct per slot.
    auto poly = [](std::initializer_list<double> c) {
        std::vector<Complex> coeffs;
        for (double v : c) coeffs.emplace_back(v, 0.0);
        return HoloFn::polynomial(std::move(coeffs));
    };
    for (int u = 1; u <= fn.table.m; ++u)
        fn.F[u] = poly({0.0, 1.0 + u, static_cast<double>(u)}); // (1+u) t + u t^2
    for (int s = fn.table.m + 1; s <= fn.table.n; ++s)
        fn.G[s] = poly({static_cast<double>(s), 1.0}); // s + t
    return fn;
}

} // namespace monocalc
