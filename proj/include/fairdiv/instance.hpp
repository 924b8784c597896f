#pragma once

#include "fairdiv/valuation.hpp"

#include <string>
#include <vector>

namespace fairdiv {

// A fair-division instance: n agents, m goods, one valuation per agent.
// Validated at construction: all valuations over the same ground set, and
// every good has positive value to at least one agent.
class Instance {
public:
    Instance(std::vector<Valuation> valuations);

    int agent_count() const { return static_cast<int>(valuations_.size()); }
    int good_count() const { return m_; }
    GoodSet all_goods() const { return GoodSet::full(m_); }

    // agent is 1-based, matching the good indexing.
    const Valuation& valuation(int agent) const;
    const std::vector<Valuation>& valuations() const { return valuations_; }

private:
    int m_ = 0;
    std::vector<Valuation> valuations_;
};

// An ordered partition of M into n bundles, one per agent.
class Allocation {
public:
    explicit Allocation(std::vector<GoodSet> bundles) : bundles_(std::move(bundles)) {}

    int agent_count() const { return static_cast<int>(bundles_.size()); }
    const GoodSet& bundle(int agent) const { return bundles_.at(agent - 1); }
    const std::vector<GoodSet>& bundles() const { return bundles_; }
    GoodSet complement_of(int agent) const; // A_{-i}

    // Throws when bundles overlap, miss goods, or the count mismatches.
    void validate(const Instance& inst) const;

    bool operator==(const Allocation&) const = default;

private:
    std::vector<GoodSet> bundles_;
};

// JSON (de)serialization per the documented schemas. parse_* validate all
// invariants and report violations with a field path.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Allocation parse_allocation(const std::string& text);
std::string serialize_allocation(const Allocation& alloc);

} // namespace fairdiv
