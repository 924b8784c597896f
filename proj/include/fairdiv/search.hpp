#pragma once

#include "fairdiv/fairness.hpp"

#include <optional>

namespace fairdiv {

// Predicate over complete allocations for the existence search: either a
// fairness notion at a factor alpha (must hold for every agent), or a plain
// per-agent value threshold.
struct SearchPredicate {
    enum class Kind { NotionAll, MinValue };
    Kind kind = Kind::NotionAll;
    Notion notion = Notion::MMA;
    Rational alpha = 1;
    Rational threshold = 0;

    static SearchPredicate for_notion(Notion n, Rational a = 1)
    {
        SearchPredicate p;
        p.kind = Kind::NotionAll;
        p.notion = n;
        p.alpha = std::move(a);
        return p;
    }
    static SearchPredicate min_value(Rational t)
    {
        SearchPredicate p;
        p.kind = Kind::MinValue;
        p.threshold = std::move(t);
        return p;
    }
};

struct SearchOutcome {
    bool exists = false;
    std::optional<Allocation> witness;
    std::uint64_t nodes = 0;
};

// Enumerates allocations depth-first, pruning only in ways that cannot
// discard a feasible allocation: symmetric agents (equal valuation, equal
// bundle so far) are collapsed, and for value-threshold predicates an agent
// whose bundle plus all unassigned goods stays under the threshold cuts the
// branch (valuations are monotone). Returns the first witness found.
SearchOutcome exhaustive_allocation_search(const Instance& inst, const SearchPredicate& predicate,
                                           const SearchBudget& budget = {},
                                           MmsCache* cache = nullptr);

} // namespace fairdiv
