#include "fairdiv/instance.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace fairdiv {

using nlohmann::json;

Instance::Instance(std::vector<Valuation> valuations) : valuations_(std::move(valuations))
{
    if (valuations_.empty())
        throw std::invalid_argument("instance needs at least one agent");
    m_ = valuations_.front().good_count();
    for (const Valuation& v : valuations_)
        if (v.good_count() != m_)
            throw std::invalid_argument("all valuations must cover the same goods");
    for (int j = 1; j <= m_; ++j) {
        bool someone_cares = false;
        for (const Valuation& v : valuations_)
            if (v.value_of_good(j) > 0) {
                someone_cares = true;
                break;
            }
        if (!someone_cares)
            throw std::invalid_argument("good " + std::to_string(j) +
                                        " has zero value to every agent");
    }
}

const Valuation& Instance::valuation(int agent) const
{
    if (agent < 1 || agent > agent_count())
        throw std::out_of_range("agent index out of range: " + std::to_string(agent));
    return valuations_[agent - 1];
}

GoodSet Allocation::complement_of(int agent) const
{
    GoodSet rest;
    for (int i = 1; i <= agent_count(); ++i)
        if (i != agent)
            rest = rest | bundle(i);
    return rest;
}

void Allocation::validate(const Instance& inst) const
{
    if (agent_count() != inst.agent_count())
        throw std::invalid_argument("allocation has wrong number of bundles");
    GoodSet seen;
    for (const GoodSet& b : bundles_) {
        if (b.intersects(seen))
            throw std::invalid_argument("allocation bundles are not disjoint");
        seen = seen | b;
    }
    if (seen != inst.all_goods())
        throw std::invalid_argument("allocation does not cover all goods");
}

namespace {

Rational rational_from_json(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError(path + ": expected \"p/q\" string or integer");
}

std::string subset_key(GoodSet s)
{
    std::string key;
    for (int g : s.to_vector()) {
        if (!key.empty())
            key += ',';
        key += std::to_string(g);
    }
    return key;
}

GoodSet subset_from_key(const std::string& key, int m, const std::string& path)
{
    GoodSet s;
    if (key.empty())
        return s;
    std::istringstream in(key);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        int g = 0;
        try {
            g = std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError(path + ": bad good index \"" + tok + "\"");
        }
        if (g < 1 || g > m)
            throw ParseError(path + ": good index out of range: " + tok);
        if (s.contains(g))
            throw ParseError(path + ": duplicate good in subset key: " + tok);
        s.add(g);
    }
    return s;
}

Valuation valuation_from_json(const json& j, int m, const std::string& path)
{
    if (!j.is_object() || !j.contains("type"))
        throw ParseError(path + ": expected an object with a \"type\" field");
    const std::string type = j.at("type").get<std::string>();
    if (type == "additive") {
        if (!j.contains("values") || !j.at("values").is_array())
            throw ParseError(path + ".values: expected an array");
        const json& vals = j.at("values");
        if (static_cast<int>(vals.size()) != m)
            throw ParseError(path + ".values: expected " + std::to_string(m) + " entries");
        std::vector<Rational> values;
        values.reserve(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
            values.push_back(
                rational_from_json(vals[i], path + ".values[" + std::to_string(i) + "]"));
        return Valuation::additive(std::move(values));
    }
    if (type == "table") {
        if (m > Valuation::max_table_goods)
            throw ParseError(path + ": table valuations require m <= 16");
        if (!j.contains("entries") || !j.at("entries").is_object())
            throw ParseError(path + ".entries: expected an object");
        std::vector<Rational> table(std::size_t{1} << m, Rational(-1));
        table[0] = 0;
        for (const auto& [key, val] : j.at("entries").items()) {
            GoodSet s = subset_from_key(key, m, path + ".entries");
            Rational r = rational_from_json(val, path + ".entries[\"" + key + "\"]");
            if (s.empty() && r != 0)
                throw ParseError(path + ".entries: v(empty) must be 0");
            table[s.mask()] = r;
        }
        for (std::uint64_t mask = 1; mask < table.size(); ++mask)
            if (table[mask] < 0)
                throw ParseError(path + ".entries: missing entry for subset \"" +
                                 subset_key(GoodSet{mask}) + "\"");
        try {
            return Valuation::table(m, std::move(table));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw ParseError(path + ".type: unknown valuation type \"" + type + "\"");
}

json rational_to_json(const Rational& r) { return json(format_rational(r)); }

json valuation_to_json(const Valuation& v)
{
    json j;
    if (v.kind() == ValuationKind::Additive) {
        j["type"] = "additive";
        json vals = json::array();
        for (const Rational& r : v.additive_values())
            vals.push_back(rational_to_json(r));
        j["values"] = std::move(vals);
    } else {
        j["type"] = "table";
        json entries = json::object();
        const auto& table = v.table_by_mask();
        for (std::uint64_t mask = 1; mask < table.size(); ++mask)
            entries[subset_key(GoodSet{mask})] = rational_to_json(table[mask]);
        j["entries"] = std::move(entries);
    }
    return j;
}

json parse_json(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON");
    return j;
}

} // namespace

Instance parse_instance(const std::string& text)
{
    json j = parse_json(text);
    if (!j.is_object())
        throw ParseError("instance: expected a JSON object");
    for (const char* field : {"n", "m", "valuations"})
        if (!j.contains(field))
            throw ParseError(std::string("instance: missing field \"") + field + "\"");
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    if (n < 1)
        throw ParseError("instance.n: need at least one agent");
    if (m < 0 || m > GoodSet::max_goods)
        throw ParseError("instance.m: good count out of range");
    const json& vals = j.at("valuations");
    if (!vals.is_array() || static_cast<int>(vals.size()) != n)
        throw ParseError("instance.valuations: expected " + std::to_string(n) + " entries");
    std::vector<Valuation> valuations;
    valuations.reserve(n);
    for (int i = 0; i < n; ++i)
        valuations.push_back(valuation_from_json(
            vals[i], m, "instance.valuations[" + std::to_string(i) + "]"));
    try {
        return Instance(std::move(valuations));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
}

std::string serialize_instance(const Instance& inst)
{
    json j;
    j["n"] = inst.agent_count();
    j["m"] = inst.good_count();
    json vals = json::array();
    for (const Valuation& v : inst.valuations())
        vals.push_back(valuation_to_json(v));
    j["valuations"] = std::move(vals);
    return j.dump(2) + "\n";
}

Allocation parse_allocation(const std::string& text)
{
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("bundles") || !j.at("bundles").is_array())
        throw ParseError("allocation: expected an object with a \"bundles\" array");
    std::vector<GoodSet> bundles;
    for (std::size_t i = 0; i < j.at("bundles").size(); ++i) {
        const json& b = j.at("bundles")[i];
        if (!b.is_array())
            throw ParseError("allocation.bundles[" + std::to_string(i) + "]: expected an array");
        try {
            bundles.push_back(GoodSet::of(b.get<std::vector<int>>()));
        } catch (const std::exception& e) {
            throw ParseError("allocation.bundles[" + std::to_string(i) + "]: " + e.what());
        }
    }
    GoodSet seen;
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        if (bundles[i].intersects(seen))
            throw ParseError("allocation.bundles[" + std::to_string(i) +
                             "]: overlaps an earlier bundle");
        seen = seen | bundles[i];
    }
    return Allocation(std::move(bundles));
}

std::string serialize_allocation(const Allocation& alloc)
{
    json j;
    json bundles = json::array();
    for (const GoodSet& b : alloc.bundles())
        bundles.push_back(b.to_vector());
    j["bundles"] = std::move(bundles);
    return j.dump(2) + "\n";
}

} // namespace fairdiv
