#include "fairdiv/json_io.hpp"

namespace fairdiv {

using nlohmann::json;

json to_json(const PartitionResult& partition)
{
    json parts = json::array();
    for (GoodSet p : partition.parts)
        parts.push_back(p.to_vector());
    json values = json::array();
    for (const Rational& v : partition.value_vector)
        values.push_back(format_rational(v));
    return json{{"parts", std::move(parts)}, {"value_vector", std::move(values)}};
}

json to_json(const Allocation& alloc)
{
    json bundles = json::array();
    for (const GoodSet& b : alloc.bundles())
        bundles.push_back(b.to_vector());
    return json{{"bundles", std::move(bundles)}};
}

json to_json(const Witness& witness)
{
    json j = json::object();
    if (witness.other_agent)
        j["other_agent"] = *witness.other_agent;
    if (witness.good)
        j["good"] = *witness.good;
    if (witness.partition)
        j["partition"] = to_json(*witness.partition);
    return j;
}

json to_json(const FairnessReport& report)
{
    json agents = json::array();
    for (const AgentVerdict& verdict : report.agents) {
        json a{{"agent", verdict.agent},
               {"satisfied", verdict.satisfied},
               {"own_value", format_rational(verdict.own_value)}};
        if (verdict.threshold)
            a["threshold"] = format_rational(*verdict.threshold);
        if (verdict.witness)
            a["witness"] = to_json(*verdict.witness);
        agents.push_back(std::move(a));
    }
    return json{{"notion", notion_to_string(report.notion)},
                {"alpha", format_rational(report.alpha)},
                {"satisfied", report.satisfied},
                {"agents", std::move(agents)}};
}

json to_json(const MatchingRound& round)
{
    json matching = json::array();
    for (auto [agent, good] : round.matching)
        matching.push_back(json{{"agent", agent}, {"good", good}});
    return json{{"unenvied", round.unenvied},
                {"available", round.available},
                {"cardinality_fallback", round.cardinality_fallback},
                {"matching", std::move(matching)},
                {"rotations", round.rotations}};
}

json to_json(const MatchingResult& result)
{
    json rounds = json::array();
    for (const MatchingRound& r : result.trace)
        rounds.push_back(to_json(r));
    return json{{"allocation", to_json(result.allocation)},
                {"guarantee", guarantee_to_string(result.guarantee)},
                {"rounds", std::move(rounds)}};
}

json to_json(const SearchOutcome& outcome)
{
    json j{{"exists", outcome.exists}, {"nodes", outcome.nodes}};
    if (outcome.witness)
        j["witness"] = to_json(*outcome.witness);
    return j;
}

} // namespace fairdiv
