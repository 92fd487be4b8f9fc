#pragma once

// JSON encodings for the core types.  All encoders emit objects whose keys
// are in sorted order (the nlohmann default), so dump() output is
// deterministic and round-trips byte-for-byte through parse().
//
//   LaurentPoly      [[e1,...,ek], ...]        one exponent row per monomial
//   AlgebraElement   [{"coeff": poly, "word": ["b1",...]}, ...]
//   Augmentation     {"images": {"b1": poly, ...}, "n": ..,
//                     "sigma": [..], "vars": ["s1",...]}
//   Dga              {"chords": [{"grading": g, "label": ..}, ...],
//                     "differentials": {"a1": algebra, ...}, "vars": [...]}
//   ClassReport      {"catalan": .., "classes": [{"C": [..], "aug": ..,
//                     "rep": [..], "size": ..}, ...], "n": ..}

#include <json.hpp>

#include "legfill/classifier.hpp"
#include "legfill/disk_engine.hpp"
#include "legfill/filling_maps.hpp"
#include "legfill/free_algebra.hpp"
#include "legfill/gf2_laurent.hpp"

namespace legfill {

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const AlgebraElement& x);
nlohmann::json to_json(const Augmentation& aug);
nlohmann::json to_json(const Dga& dga);
nlohmann::json to_json(const ClassInfo& cls);
nlohmann::json to_json(const ClassReport& report);

// Inverses for the value types the CLI can consume again.  Both throw
// std::invalid_argument on malformed input.
LaurentPoly poly_from_json(const nlohmann::json& j, const Ctx& ctx);
Augmentation augmentation_from_json(const nlohmann::json& j);

}  // namespace legfill
