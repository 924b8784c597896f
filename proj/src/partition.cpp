#include "fairdiv/partition.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace fairdiv {

void canonicalize_parts(std::vector<GoodSet>& parts)
{
    std::sort(parts.begin(), parts.end(), [](GoodSet a, GoodSet b) {
        if (a.empty() != b.empty())
            return b.empty(); // non-empty parts first
        return a.lowest() < b.lowest();
    });
}

bool canonical_less(const std::vector<GoodSet>& lhs, const std::vector<GoodSet>& rhs)
{
    auto flatten = [](const std::vector<GoodSet>& parts) {
        std::vector<std::vector<int>> rep;
        rep.reserve(parts.size());
        for (GoodSet p : parts)
            rep.push_back(p.to_vector());
        return rep;
    };
    return flatten(lhs) < flatten(rhs);
}

namespace {

// Goods of S in descending singleton value, ties by ascending index; the
// standard assignment order for number-partitioning branch and bound.
std::vector<int> search_order(const Valuation& v, GoodSet s)
{
    std::vector<int> goods = s.to_vector();
    std::stable_sort(goods.begin(), goods.end(), [&](int a, int b) {
        return v.value_of_good(a) > v.value_of_good(b);
    });
    return goods;
}

struct SearchState {
    const Valuation& v;
    std::vector<int> goods;
    std::vector<GoodSet> remaining_after; // union of goods[idx..] per idx
    int k;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::vector<GoodSet> parts;

    SearchState(const Valuation& val, GoodSet s, int parts_count, const SearchBudget& budget)
        : v(val), goods(search_order(val, s)), k(parts_count), max_nodes(budget.max_nodes),
          parts(static_cast<std::size_t>(parts_count))
    {
        remaining_after.resize(goods.size() + 1);
        for (int i = static_cast<int>(goods.size()) - 1; i >= 0; --i)
            remaining_after[i] = remaining_after[i + 1].with(goods[i]);
    }

    void tick()
    {
        if (++nodes > max_nodes)
            throw BudgetExhausted();
    }

    std::vector<Rational> part_values() const
    {
        std::vector<Rational> vals;
        vals.reserve(parts.size());
        for (GoodSet p : parts)
            vals.push_back(v.value(p));
        return vals;
    }
};

void require_valid_k(int k)
{
    if (k < 1)
        throw std::invalid_argument("partition count k must be >= 1");
}

PartitionResult make_result(const Valuation& v, std::vector<GoodSet> parts)
{
    canonicalize_parts(parts);
    PartitionResult res;
    res.parts = std::move(parts);
    for (GoodSet p : res.parts)
        res.value_vector.push_back(v.value(p));
    std::sort(res.value_vector.begin(), res.value_vector.end());
    return res;
}

// Iterates the parts a good may be placed in, visiting at most one empty part
// (symmetric placements into distinct empty parts yield the same partition).
template <typename F> void for_each_placement(const std::vector<GoodSet>& parts, F&& f)
{
    bool tried_empty = false;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) {
            if (tried_empty)
                continue;
            tried_empty = true;
        }
        f(p);
    }
}

struct MaximinSearch {
    SearchState st;
    std::optional<Rational> best;
    std::vector<GoodSet> best_parts;

    MaximinSearch(const Valuation& v, GoodSet s, int k, const SearchBudget& b) : st(v, s, k, b) {}

    void run(std::size_t idx)
    {
        st.tick();
        if (idx == st.goods.size()) {
            Rational value = st.v.value(st.parts[0]);
            for (int p = 1; p < st.k; ++p)
                value = std::min(value, st.v.value(st.parts[p]));
            if (!best || value > *best) {
                best = value;
                best_parts = st.parts;
            }
            return;
        }
        if (best) {
            // each part can end up with at most its current goods plus all
            // remaining ones; the final minimum cannot exceed this bound
            Rational bound = st.v.value(st.parts[0] | st.remaining_after[idx]);
            for (int p = 1; p < st.k; ++p)
                bound = std::min(bound, st.v.value(st.parts[p] | st.remaining_after[idx]));
            if (bound <= *best)
                return;
        }
        const int good = st.goods[idx];
        for_each_placement(st.parts, [&](std::size_t p) {
            st.parts[p].add(good);
            run(idx + 1);
            st.parts[p].remove(good);
        });
    }
};

struct LeximinSearch {
    SearchState st;
    std::optional<std::vector<Rational>> best_vec; // sorted non-decreasing
    std::vector<GoodSet> best_parts;               // canonical order

    LeximinSearch(const Valuation& v, GoodSet s, int k, const SearchBudget& b) : st(v, s, k, b) {}

    void run(std::size_t idx)
    {
        st.tick();
        if (idx == st.goods.size()) {
            std::vector<Rational> vec = st.part_values();
            std::sort(vec.begin(), vec.end());
            if (!best_vec || vec > *best_vec) {
                best_vec = std::move(vec);
                best_parts = st.parts;
                canonicalize_parts(best_parts);
            } else if (vec == *best_vec) {
                std::vector<GoodSet> candidate = st.parts;
                canonicalize_parts(candidate);
                if (canonical_less(candidate, best_parts))
                    best_parts = std::move(candidate);
            }
            return;
        }
        if (best_vec) {
            std::vector<Rational> bound;
            bound.reserve(st.parts.size());
            for (GoodSet part : st.parts)
                bound.push_back(st.v.value(part | st.remaining_after[idx]));
            std::sort(bound.begin(), bound.end());
            // part-wise upper bounds stay upper bounds after sorting; ties
            // must still be explored for the canonical tie-break
            if (bound < *best_vec)
                return;
        }
        const int good = st.goods[idx];
        for_each_placement(st.parts, [&](std::size_t p) {
            st.parts[p].add(good);
            run(idx + 1);
            st.parts[p].remove(good);
        });
    }
};

struct MinimaxSearch {
    SearchState st;
    std::optional<Rational> best;
    std::vector<GoodSet> best_parts;

    MinimaxSearch(const Valuation& v, GoodSet s, int k, const SearchBudget& b) : st(v, s, k, b) {}

    void run(std::size_t idx)
    {
        st.tick();
        if (idx == st.goods.size()) {
            Rational value = st.v.value(st.parts[0]);
            for (int p = 1; p < st.k; ++p)
                value = std::max(value, st.v.value(st.parts[p]));
            if (!best || value < *best) {
                best = value;
                best_parts = st.parts;
            }
            return;
        }
        if (best) {
            // monotone valuation: a part's value never drops as goods arrive
            Rational bound = st.v.value(st.parts[0]);
            for (int p = 1; p < st.k; ++p)
                bound = std::max(bound, st.v.value(st.parts[p]));
            if (bound >= *best)
                return;
        }
        const int good = st.goods[idx];
        for_each_placement(st.parts, [&](std::size_t p) {
            st.parts[p].add(good);
            run(idx + 1);
            st.parts[p].remove(good);
        });
    }
};

} // namespace

std::pair<Rational, PartitionResult> mms_value(const Valuation& v, GoodSet s, int k,
                                               const SearchBudget& budget)
{
    require_valid_k(k);
    MaximinSearch search(v, s, k, budget);
    search.run(0);
    PartitionResult res = make_result(v, std::move(search.best_parts));
    return {*search.best, std::move(res)};
}

PartitionResult leximin_partition(const Valuation& v, GoodSet s, int k, const SearchBudget& budget)
{
    require_valid_k(k);
    LeximinSearch search(v, s, k, budget);
    search.run(0);
    PartitionResult res;
    res.parts = std::move(search.best_parts);
    res.value_vector = std::move(*search.best_vec);
    return res;
}

std::pair<Rational, PartitionResult> minimax_partition(const Valuation& v, GoodSet s, int k,
                                                       const SearchBudget& budget)
{
    require_valid_k(k);
    MinimaxSearch search(v, s, k, budget);
    search.run(0);
    PartitionResult res = make_result(v, std::move(search.best_parts));
    return {*search.best, std::move(res)};
}

Rational cached_mms_value(MmsCache* cache, int agent, const Valuation& v, GoodSet s, int k,
                          const SearchBudget& budget)
{
    if (cache)
        if (const Rational* hit = cache->find(agent, s, k))
            return *hit;
    Rational value = mms_value(v, s, k, budget).first;
    if (cache)
        cache->insert(agent, s, k, value);
    return value;
}

} // namespace fairdiv
