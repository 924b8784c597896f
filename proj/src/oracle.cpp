#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace fairdiv {

namespace {

// Visits every k-assignment of the goods in S, in counting order over the
// goods as listed ascending (no value ordering, no pruning, no symmetry
// reduction).
template <typename F> void for_each_assignment(GoodSet s, int k, F&& visit)
{
    const std::vector<int> goods = s.to_vector();
    std::vector<int> part_of(goods.size(), 0);
    std::vector<GoodSet> parts(static_cast<std::size_t>(k));
    while (true) {
        for (auto& p : parts)
            p = GoodSet{};
        for (std::size_t i = 0; i < goods.size(); ++i)
            parts[static_cast<std::size_t>(part_of[i])].add(goods[i]);
        visit(parts);
        std::size_t pos = 0;
        while (pos < part_of.size() && part_of[pos] == k - 1)
            part_of[pos++] = 0;
        if (pos == part_of.size())
            return;
        ++part_of[pos];
    }
}

std::vector<Rational> sorted_values(const Valuation& v, const std::vector<GoodSet>& parts)
{
    std::vector<Rational> vals;
    vals.reserve(parts.size());
    for (GoodSet p : parts)
        vals.push_back(v.value(p));
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace

std::pair<Rational, PartitionResult> brute_mms_value(const Valuation& v, GoodSet s, int k)
{
    if (k < 1)
        throw std::invalid_argument("partition count k must be >= 1");
    std::optional<Rational> best;
    std::vector<GoodSet> best_parts;
    for_each_assignment(s, k, [&](const std::vector<GoodSet>& parts) {
        Rational low = v.value(parts[0]);
        for (std::size_t p = 1; p < parts.size(); ++p)
            low = std::min(low, v.value(parts[p]));
        if (!best || low > *best) {
            best = low;
            best_parts = parts;
        }
    });
    canonicalize_parts(best_parts);
    PartitionResult res{best_parts, sorted_values(v, best_parts)};
    return {*best, std::move(res)};
}

PartitionResult brute_leximin_partition(const Valuation& v, GoodSet s, int k)
{
    if (k < 1)
        throw std::invalid_argument("partition count k must be >= 1");
    std::optional<std::vector<Rational>> best;
    std::vector<GoodSet> best_parts;
    for_each_assignment(s, k, [&](const std::vector<GoodSet>& parts) {
        std::vector<Rational> vals = sorted_values(v, parts);
        if (!best || vals > *best) {
            best = std::move(vals);
            best_parts = parts;
            canonicalize_parts(best_parts);
        } else if (vals == *best) {
            std::vector<GoodSet> candidate = parts;
            canonicalize_parts(candidate);
            if (canonical_less(candidate, best_parts))
                best_parts = std::move(candidate);
        }
    });
    return PartitionResult{best_parts, std::move(*best)};
}

std::pair<Rational, PartitionResult> brute_minimax_partition(const Valuation& v, GoodSet s, int k)
{
    if (k < 1)
        throw std::invalid_argument("partition count k must be >= 1");
    std::optional<Rational> best;
    std::vector<GoodSet> best_parts;
    for_each_assignment(s, k, [&](const std::vector<GoodSet>& parts) {
        Rational high = v.value(parts[0]);
        for (std::size_t p = 1; p < parts.size(); ++p)
            high = std::max(high, v.value(parts[p]));
        if (!best || high < *best) {
            best = high;
            best_parts = parts;
        }
    });
    canonicalize_parts(best_parts);
    PartitionResult res{best_parts, sorted_values(v, best_parts)};
    return {*best, std::move(res)};
}

} // namespace fairdiv
