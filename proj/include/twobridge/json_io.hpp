#pragma once

// JSON records shared by the CLI and the tabulation writer.
//
// Continued fractions serialize as plain arrays: a negative expansion as
// [6,2,2], Murasugi blocks as [[1,2],[1]]. Integers that do not fit in
// 64 bits are written as decimal strings.

#include <optional>

#include <json.hpp>

#include "twobridge/braidstats.hpp"
#include "twobridge/classify.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/diagram.hpp"

namespace twobridge {

nlohmann::json to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NegCF& cf);
nlohmann::json to_json(const RegCF& cf);
nlohmann::json to_json(const MurasugiBlocks& mb);

NegCF neg_cf_from_json(const nlohmann::json& j);
RegCF reg_cf_from_json(const nlohmann::json& j);
MurasugiBlocks blocks_from_json(const nlohmann::json& j);

/// {"p","q","components","neg_cf","status","reasons","lisca_O"}
nlohmann::json classification_record(const TwoBridge& tb, const Classification& c,
                                      const std::optional<LiscaOMembership>& o);

/// {"p","q","t","b","e","s","w","d_plus","d_minus","r_plus","r_minus","ineq_ok"}
nlohmann::json stats_record(const Rational& r, const TypedStats& ts);

/// Crossing list with signs, twist regions and PD ports, plus components.
nlohmann::json diagram_record(const LinkDiagram& d);
nlohmann::json to_json(const DiagramStats& st);

}  // namespace twobridge
