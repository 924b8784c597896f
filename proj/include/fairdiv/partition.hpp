#pragma once

#include "fairdiv/valuation.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fairdiv {

// A k-partition of a good set together with its part values sorted
// non-decreasingly. Empty parts are allowed.
struct PartitionResult {
    std::vector<GoodSet> parts;
    std::vector<Rational> value_vector;
};

// Node budget for the branch-and-bound searches. Exhaustion is a hard error,
// never a silent approximation: any result returned under a budget is exact.
struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
};

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("search budget exhausted") {}
};

// Canonical part order: parts listed in ascending order of smallest element,
// empty parts last. Used for deterministic leximin tie-breaking and stable
// witness output.
void canonicalize_parts(std::vector<GoodSet>& parts);

// Compares two partitions in canonical form (each part as an ascending index
// list, parts in canonical order); returns true when lhs is lexicographically
// smaller.
bool canonical_less(const std::vector<GoodSet>& lhs, const std::vector<GoodSet>& rhs);

// MMS_v(S,k): max over k-partitions of S of the minimum part value, with one
// maximizing partition as witness.
std::pair<Rational, PartitionResult> mms_value(const Valuation& v, GoodSet s, int k,
                                               const SearchBudget& budget = {});

// The k-partition of S whose sorted value vector is lexicographically
// maximal; ties broken by the canonical part order above.
PartitionResult leximin_partition(const Valuation& v, GoodSet s, int k,
                                  const SearchBudget& budget = {});

// Min over k-partitions of S of the maximum part value (makespan dual of
// MMS); decides EEF feasibility.
std::pair<Rational, PartitionResult> minimax_partition(const Valuation& v, GoodSet s, int k,
                                                       const SearchBudget& budget = {});

// Memo for repeated MMS queries against the same instance; keyed by agent,
// subset mask, and part count. The fairness checkers and the exhaustive
// searches hit the same (agent, subset, k) triples many times over.
class MmsCache {
public:
    const Rational* find(int agent, GoodSet s, int k) const
    {
        auto it = map_.find(key(agent, s, k));
        return it == map_.end() ? nullptr : &it->second;
    }
    void insert(int agent, GoodSet s, int k, Rational value)
    {
        map_.emplace(key(agent, s, k), std::move(value));
    }

private:
    struct Key {
        int agent;
        std::uint64_t mask;
        int k;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const
        {
            std::uint64_t h = k.mask * 0x9e3779b97f4a7c15ULL;
            h ^= (static_cast<std::uint64_t>(k.agent) << 32) | static_cast<std::uint32_t>(k.k);
            return std::hash<std::uint64_t>{}(h);
        }
    };
    static Key key(int agent, GoodSet s, int k) { return Key{agent, s.mask(), k}; }
    std::unordered_map<Key, Rational, KeyHash> map_;
};

// Cached MMS value (no witness); computes and stores on miss.
Rational cached_mms_value(MmsCache* cache, int agent, const Valuation& v, GoodSet s, int k,
                          const SearchBudget& budget = {});

} // namespace fairdiv
