#include "twobridge/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace twobridge {

using nlohmann::json;

json to_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

namespace {

json array_of(const std::vector<Integer>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

std::vector<Integer> integers_from(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

}  // namespace

json to_json(const NegCF& cf) { return array_of(cf.coeffs()); }
json to_json(const RegCF& cf) { return array_of(cf.coeffs()); }

json to_json(const MurasugiBlocks& mb)
{
    json a = json::array();
    for (const auto& block : mb.blocks()) a.push_back(array_of(block));
    return a;
}

NegCF neg_cf_from_json(const json& j) { return NegCF(integers_from(j)); }
RegCF reg_cf_from_json(const json& j) { return RegCF(integers_from(j)); }

MurasugiBlocks blocks_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of blocks");
    std::vector<std::vector<Integer>> blocks;
    for (const auto& b : j) blocks.push_back(integers_from(b));
    return MurasugiBlocks(std::move(blocks));
}

json classification_record(const TwoBridge& tb, const Classification& c, const std::optional<LiscaOMembership>& o)
{
    json reasons = json::array();
    for (Reason r : c.reasons) reasons.push_back(std::string(to_string(r)));
    json rec;
    rec["p"] = to_json(tb.p());
    rec["q"] = to_json(tb.q());
    rec["components"] = tb.components();
    rec["neg_cf"] = to_json(c.cf);
    rec["status"] = std::string(to_string(c.status));
    rec["reasons"] = std::move(reasons);
    if (o)
        rec["lisca_O"] = json{{"m", to_json(o->m)}, {"h", to_json(o->h)}};
    else
        rec["lisca_O"] = nullptr;
    return rec;
}

json stats_record(const Rational& r, const TypedStats& ts)
{
    const BraidStats& s = ts.stats;
    json rec;
    rec["p"] = to_json(r.p());
    rec["q"] = to_json(r.q());
    rec["t"] = to_json(s.t);
    rec["b"] = to_json(s.b);
    rec["e"] = to_json(s.e);
    rec["s"] = to_json(s.s);
    rec["w"] = to_json(s.w);
    rec["d_plus"] = to_json(s.d_plus);
    rec["d_minus"] = to_json(s.d_minus);
    rec["r_plus"] = to_json(s.r_plus);
    rec["r_minus"] = to_json(s.r_minus);
    rec["ineq_ok"] = ts.inequalities_hold;
    return rec;
}

json to_json(const DiagramStats& st)
{
    return json{{"s", to_json(st.s)},
                {"w", to_json(st.w)},
                {"d_plus", to_json(st.d_plus)},
                {"d_minus", to_json(st.d_minus)},
                {"reduced", st.reduced},
                {"tree_choice_independent", st.tree_choice_independent}};
}

json diagram_record(const LinkDiagram& d)
{
    json crossings = json::array();
    for (const auto& x : d.crossings())
        crossings.push_back(json{{"id", x.id},
                                 {"sign", x.sign},
                                 {"twist_region", x.twist_region},
                                 {"group", x.group},
                                 {"ports", x.ports}});
    json rec;
    rec["crossings"] = std::move(crossings);
    rec["components"] = d.components();
    rec["writhe"] = d.writhe();
    rec["alternating"] = is_alternating(d);
    return rec;
}

}  // namespace twobridge
