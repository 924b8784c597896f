#include "fairdiv/search.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

namespace {

// Goods in descending order of their largest per-agent value; placing the
// contested goods first makes the threshold bound bite early.
std::vector<int> good_order(const Instance& inst)
{
    std::vector<int> goods = inst.all_goods().to_vector();
    std::stable_sort(goods.begin(), goods.end(), [&](int a, int b) {
        Rational va = 0, vb = 0;
        for (const Valuation& v : inst.valuations()) {
            va = std::max(va, v.value_of_good(a));
            vb = std::max(vb, v.value_of_good(b));
        }
        return va > vb;
    });
    return goods;
}

// Agents with equal valuations are interchangeable while their bundles are
// equal; collapse those placements.
std::vector<int> valuation_class_ids(const Instance& inst)
{
    const int n = inst.agent_count();
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) {
        ids[i] = i;
        for (int j = 0; j < i; ++j)
            if (inst.valuations()[j] == inst.valuations()[i]) {
                ids[i] = ids[j];
                break;
            }
    }
    return ids;
}

struct AllocationSearch {
    const Instance& inst;
    const SearchPredicate& predicate;
    const SearchBudget& budget;
    MmsCache* cache;

    int n = inst.agent_count();
    std::vector<int> goods = good_order(inst);
    std::vector<int> class_of = valuation_class_ids(inst);
    std::vector<GoodSet> bundles = std::vector<GoodSet>(static_cast<std::size_t>(n));
    std::vector<GoodSet> unassigned_after; // union of goods[idx..]
    std::uint64_t nodes = 0;
    std::optional<Allocation> witness;

    // integer fast path for all-additive instances with a value-threshold
    // predicate: values scaled to a common denominator
    bool integer_mode = false;
    BigInt int_threshold;
    std::vector<std::vector<BigInt>> weight;  // [agent][good-1]
    std::vector<BigInt> own_int, remaining_int;

    AllocationSearch(const Instance& i, const SearchPredicate& p, const SearchBudget& b,
                     MmsCache* c)
        : inst(i), predicate(p), budget(b), cache(c)
    {
        unassigned_after.resize(goods.size() + 1);
        for (int idx = static_cast<int>(goods.size()) - 1; idx >= 0; --idx)
            unassigned_after[idx] = unassigned_after[idx + 1].with(goods[idx]);
        if (predicate.kind == SearchPredicate::Kind::MinValue)
            setup_integer_mode();
    }

    void setup_integer_mode()
    {
        for (const Valuation& v : inst.valuations())
            if (v.kind() != ValuationKind::Additive)
                return;
        BigInt common = denominator(predicate.threshold);
        for (const Valuation& v : inst.valuations())
            for (const Rational& x : v.additive_values())
                common = boost::multiprecision::lcm(common, denominator(x));
        integer_mode = true;
        int_threshold = numerator(predicate.threshold) * (common / denominator(predicate.threshold));
        weight.assign(n, {});
        own_int.assign(n, 0);
        remaining_int.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            for (const Rational& x : inst.valuations()[i].additive_values()) {
                weight[i].push_back(numerator(x) * (common / denominator(x)));
                remaining_int[i] += weight[i].back();
            }
        }
    }

    void tick()
    {
        if (++nodes > budget.max_nodes)
            throw BudgetExhausted();
    }

    bool leaf_satisfied()
    {
        Allocation alloc(bundles);
        if (predicate.kind == SearchPredicate::Kind::MinValue) {
            for (int i = 1; i <= n; ++i)
                if (inst.valuation(i).value(alloc.bundle(i)) < predicate.threshold)
                    return false;
            return true;
        }
        CheckOptions options{budget, cache};
        return check_fairness(inst, alloc, predicate.notion, predicate.alpha, options).satisfied;
    }

    bool threshold_prunable(std::size_t idx) const
    {
        if (predicate.kind != SearchPredicate::Kind::MinValue)
            return false;
        if (integer_mode) {
            for (int i = 0; i < n; ++i)
                if (own_int[i] + remaining_int[i] < int_threshold)
                    return true;
            return false;
        }
        for (int i = 1; i <= n; ++i)
            if (inst.valuation(i).value(bundles[i - 1] | unassigned_after[idx]) <
                predicate.threshold)
                return true;
        return false;
    }

    bool run(std::size_t idx)
    {
        tick();
        if (witness)
            return true;
        if (threshold_prunable(idx))
            return false;
        if (idx == goods.size()) {
            if (leaf_satisfied()) {
                std::vector<GoodSet> copy = bundles;
                witness.emplace(std::move(copy));
                return true;
            }
            return false;
        }
        const int good = goods[idx];
        std::vector<std::pair<int, std::uint64_t>> tried;
        for (int a = 0; a < n; ++a) {
            const std::pair<int, std::uint64_t> sig{class_of[a], bundles[a].mask()};
            if (std::find(tried.begin(), tried.end(), sig) != tried.end())
                continue;
            tried.push_back(sig);
            bundles[a].add(good);
            if (integer_mode) {
                own_int[a] += weight[a][good - 1];
                for (int i = 0; i < n; ++i)
                    remaining_int[i] -= weight[i][good - 1];
            }
            const bool found = run(idx + 1);
            bundles[a].remove(good);
            if (integer_mode) {
                own_int[a] -= weight[a][good - 1];
                for (int i = 0; i < n; ++i)
                    remaining_int[i] += weight[i][good - 1];
            }
            if (found)
                return true;
        }
        return false;
    }
};

} // namespace

SearchOutcome exhaustive_allocation_search(const Instance& inst, const SearchPredicate& predicate,
                                           const SearchBudget& budget, MmsCache* cache)
{
    AllocationSearch search(inst, predicate, budget, cache);
    search.run(0);
    SearchOutcome outcome;
    outcome.exists = search.witness.has_value();
    outcome.witness = std::move(search.witness);
    outcome.nodes = search.nodes;
    return outcome;
}

} // namespace fairdiv
