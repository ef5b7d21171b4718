#ifndef MONOCALC_IO_HPP
#define MONOCALC_IO_HPP

#include "monocalc/charsys.hpp"
#include "monocalc/monogenic.hpp"
#include "monocalc/reduction.hpp"
#include "monocalc/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace monocalc {

using Json = nlohmann::json;

// Algebra schema:
//   {"n": int, "m": int,
//    "nil_products": {"r,s": [[k, [re_num, re_den, im_num, im_den]], ...]},
//    "idem_action": {"s": u}}
CartanTable table_from_json(const Json& j);
Json table_to_json(const CartanTable& t);

// PDE schema: {"N": int, "coeffs": {"a,b,g": [num, den, num, den]}}
PdeSpec pde_from_json(const Json& j);
Json pde_to_json(const PdeSpec& p);

// Triple schema: {"a": [[re, im], ...], "b": [[re, im], ...]} with float
// pairs, or four-integer rational entries for exact triples.
struct ParsedTriple {
    VarTriple value;
    std::optional<ExactTriple> exact; // set when the input was rational
};
ParsedTriple triple_from_json(const Json& j);
Json triple_to_json(const VarTriple& t);

// Function schema: {"kind":"poly","coeffs":[[re,im],...]} |
// {"kind":"exp","lambda":[re,im]} | {"kind":"taylor","center":[re,im],"coeffs":[...]}
HoloFn holo_from_json(const Json& j);
Json holo_to_json(const HoloFn& h);

// Bundle schema: {"F": {"1": fn, ...}, "G": {"3": fn, ...}}, decimal-string keys.
// Table and triple are attached by the caller.
MonogenicFn bundle_from_json(const Json& j, const CartanTable& table, const VarTriple& triple);
Json bundle_to_json(const MonogenicFn& fn);

Json report_to_json(const VerificationReport& r);

// Built-in triple fixtures (harmonic for A32/A53; demo triples for B/A4).
ExactTriple preset_triple_exact(const std::string& name);
VarTriple preset_triple(const std::string& name);

// Built-in bundles for the worked examples: polynomial data.
MonogenicFn preset_bundle(const std::string& name);

} // namespace monocalc

#endif
