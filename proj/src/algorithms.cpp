#include "fairdiv/algorithms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace fairdiv {

std::vector<std::pair<int, int>> EnvyGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (envies(i, j))
                out.emplace_back(i, j);
    return out;
}

int EnvyGraph::edge_count() const
{
    return static_cast<int>(std::count(envies_.begin(), envies_.end(), true));
}

std::vector<int> EnvyGraph::find_cycle() const
{
    std::vector<int> state(n_ + 1, 0); // 0 fresh, 1 on stack, 2 done
    std::vector<int> stack;
    std::vector<int> cycle;

    auto dfs = [&](auto&& self, int node) -> bool {
        state[node] = 1;
        stack.push_back(node);
        for (int next = 1; next <= n_; ++next) {
            if (!envies(node, next))
                continue;
            if (state[next] == 1) {
                auto it = std::find(stack.begin(), stack.end(), next);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[next] == 0 && self(self, next))
                return true;
        }
        stack.pop_back();
        state[node] = 2;
        return false;
    };

    for (int start = 1; start <= n_; ++start)
        if (state[start] == 0 && dfs(dfs, start))
            return cycle;
    return {};
}

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc)
{
    const int n = inst.agent_count();
    EnvyGraph graph(n);
    for (int i = 1; i <= n; ++i) {
        const Valuation& v = inst.valuation(i);
        const Rational own = v.value(alloc.bundle(i));
        for (int j = 1; j <= n; ++j)
            if (j != i && own < v.value(alloc.bundle(j)))
                graph.set(i, j);
    }
    return graph;
}

Allocation eliminate_envy_cycles(const Instance& inst, Allocation alloc,
                                 std::vector<std::vector<int>>* rotations)
{
    std::vector<GoodSet> bundles = alloc.bundles();
    while (true) {
        EnvyGraph graph = build_envy_graph(inst, Allocation(bundles));
        std::vector<int> cycle = graph.find_cycle();
        if (cycle.empty())
            break;
        // i_k envies i_{k+1}: hand i_{k+1}'s bundle back to i_k
        GoodSet first = bundles[cycle.front() - 1];
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
            bundles[cycle[k] - 1] = bundles[cycle[k + 1] - 1];
        bundles[cycle.back() - 1] = first;
        if (rotations)
            rotations->push_back(std::move(cycle));
    }
    return Allocation(std::move(bundles));
}

namespace {

// Best matching weight on the rows x cols submatrix, positive edges only.
// Memoized over (column position, used-row mask); the row side is the agent
// side and stays small.
class MatchingOracle {
public:
    explicit MatchingOracle(const std::vector<std::vector<Rational>>& weights)
        : weights_(weights)
    {
        if (weights.size() > 20)
            throw std::invalid_argument("matching supports at most 20 left nodes");
    }

    Rational best(const std::vector<int>& rows, const std::vector<int>& cols)
    {
        memo_.clear();
        rows_ = &rows;
        cols_ = &cols;
        return solve(0, 0);
    }

private:
    Rational solve(std::size_t c, std::uint32_t used)
    {
        if (c == cols_->size())
            return 0;
        auto key = std::make_pair(c, used);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        Rational best = solve(c + 1, used);
        for (std::size_t r = 0; r < rows_->size(); ++r) {
            if (used & (1u << r))
                continue;
            const Rational& w = weights_[(*rows_)[r]][(*cols_)[c]];
            if (w <= 0)
                continue;
            best = std::max(best, w + solve(c + 1, used | (1u << r)));
        }
        memo_.emplace(key, best);
        return best;
    }

    const std::vector<std::vector<Rational>>& weights_;
    const std::vector<int>* rows_ = nullptr;
    const std::vector<int>* cols_ = nullptr;
    std::map<std::pair<std::size_t, std::uint32_t>, Rational> memo_;
};

} // namespace

std::vector<std::pair<int, int>> max_weight_matching(
    const std::vector<std::vector<Rational>>& weights)
{
    const int rows = static_cast<int>(weights.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(weights.front().size());
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged weight matrix");
        for (const Rational& w : row)
            if (w < 0)
                throw std::invalid_argument("matching weights must be non-negative");
    }
    if (rows == 0 || cols == 0)
        return {};

    MatchingOracle oracle(weights);
    std::vector<int> all_rows(rows), free_cols(cols);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    std::iota(free_cols.begin(), free_cols.end(), 0);
    const Rational total = oracle.best(all_rows, free_cols);

    // Fix edges greedily in (row, col) order: the first choice that keeps
    // the optimum reachable yields the lexicographically smallest matching.
    std::vector<std::pair<int, int>> matching;
    Rational fixed = 0;
    std::vector<int> later_rows = all_rows;
    for (int r = 0; r < rows; ++r) {
        later_rows.erase(later_rows.begin());
        for (std::size_t ci = 0; ci < free_cols.size(); ++ci) {
            const int c = free_cols[ci];
            if (weights[r][c] <= 0)
                continue;
            std::vector<int> rest_cols = free_cols;
            rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(ci));
            if (fixed + weights[r][c] + oracle.best(later_rows, rest_cols) == total) {
                matching.emplace_back(r + 1, c + 1);
                fixed += weights[r][c];
                free_cols = std::move(rest_cols);
                break;
            }
        }
    }
    return matching;
}

std::string guarantee_to_string(GuaranteeClass g)
{
    switch (g) {
    case GuaranteeClass::MmaHalf: return "1/2-mma";
    case GuaranteeClass::MmaxHalf: return "1/2-mmax";
    case GuaranteeClass::MmaxExact: return "mmax";
    case GuaranteeClass::EfHalf: return "1/2-ef";
    case GuaranteeClass::EfxHalf: return "1/2-efx";
    case GuaranteeClass::EfxExact: return "efx";
    }
    throw std::logic_error("unreachable");
}

MatchingResult allocate_matching(const Instance& inst)
{
    const int n = inst.agent_count();
    std::vector<GoodSet> bundles(static_cast<std::size_t>(n));
    GoodSet remaining = inst.all_goods();
    std::vector<MatchingRound> trace;

    while (!remaining.empty()) {
        MatchingRound round;
        Allocation current(bundles);

        // unenvied agents: nobody values their bundle above her own
        EnvyGraph graph = build_envy_graph(inst, current);
        std::vector<int> unenvied;
        for (int i = 1; i <= n; ++i) {
            bool envied = false;
            for (int j = 1; j <= n && !envied; ++j)
                envied = graph.envies(j, i);
            if (!envied)
                unenvied.push_back(i);
        }
        round.unenvied = unenvied;
        round.available = remaining.to_vector();

        std::vector<std::vector<Rational>> weights(unenvied.size());
        bool any_positive = false;
        for (std::size_t li = 0; li < unenvied.size(); ++li) {
            const int agent = unenvied[li];
            for (int good : round.available) {
                Rational w = inst.valuation(agent).marginal(bundles[agent - 1], good);
                any_positive = any_positive || w > 0;
                weights[li].push_back(std::move(w));
            }
        }
        if (!any_positive) {
            // all marginals zero: fall back to maximum cardinality
            round.cardinality_fallback = true;
            for (auto& row : weights)
                std::fill(row.begin(), row.end(), Rational(1));
        }

        for (auto [l, r] : max_weight_matching(weights)) {
            const int agent = unenvied[static_cast<std::size_t>(l - 1)];
            const int good = round.available[static_cast<std::size_t>(r - 1)];
            bundles[agent - 1].add(good);
            remaining.remove(good);
            round.matching.emplace_back(agent, good);
        }

        Allocation rotated =
            eliminate_envy_cycles(inst, Allocation(bundles), &round.rotations);
        bundles = rotated.bundles();
        trace.push_back(std::move(round));
    }

    int multi_good_agents = 0;
    for (const GoodSet& b : bundles)
        if (b.size() > 1)
            ++multi_good_agents;
    bool additive = true;
    for (const Valuation& v : inst.valuations())
        additive = additive && v.flags().additive;

    GuaranteeClass guarantee;
    if (multi_good_agents >= 2)
        guarantee = additive ? GuaranteeClass::MmaHalf : GuaranteeClass::EfHalf;
    else if (multi_good_agents == 1)
        guarantee = additive ? GuaranteeClass::MmaxHalf : GuaranteeClass::EfxHalf;
    else
        guarantee = additive ? GuaranteeClass::MmaxExact : GuaranteeClass::EfxExact;

    return MatchingResult{Allocation(std::move(bundles)), guarantee, std::move(trace)};
}

Allocation allocate_identical_leximin(const Valuation& v, int n, const SearchBudget& budget)
{
    if (n < 1)
        throw std::invalid_argument("need at least one agent");
    PartitionResult partition = leximin_partition(v, GoodSet::full(v.good_count()), n, budget);
    return Allocation(std::move(partition.parts));
}

namespace {

// Bundle indices ordered by an agent's preference, value descending with
// ties broken toward the lower index.
std::array<int, 3> preference_order(const Valuation& v, const std::array<GoodSet, 3>& bundles)
{
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return v.value(bundles[a]) > v.value(bundles[b]); });
    return order;
}

// The chooser picks her favorite of the divider's two parts (ties toward the
// first); returns (chooser's part, divider's part).
std::pair<GoodSet, GoodSet> choose_between(const Valuation& chooser, const PartitionResult& parts)
{
    GoodSet a = parts.parts.at(0), b = parts.parts.at(1);
    if (chooser.value(b) > chooser.value(a))
        return {b, a};
    return {a, b};
}

} // namespace

Allocation allocate_three_agents(const Instance& inst, const SearchBudget& budget)
{
    if (inst.agent_count() != 3)
        throw std::invalid_argument("divide-and-choose requires exactly three agents");
    for (const Valuation& v : inst.valuations())
        if (!v.flags().additive)
            throw std::invalid_argument("divide-and-choose requires additive valuations");

    const Valuation& v1 = inst.valuation(1);
    const Valuation& v2 = inst.valuation(2);
    const Valuation& v3 = inst.valuation(3);

    // Step 1: agent 3 divides M as her leximin 3-partition.
    PartitionResult divided = leximin_partition(v3, inst.all_goods(), 3, budget);
    std::array<GoodSet, 3> parts{divided.parts[0], divided.parts[1], divided.parts[2]};

    const std::array<int, 3> pref1 = preference_order(v1, parts);
    const std::array<int, 3> pref2 = preference_order(v2, parts);

    std::array<GoodSet, 3> out;
    if (pref1[0] != pref2[0]) {
        // Step 2: different favorites; each takes hers, agent 3 the rest.
        out[0] = parts[pref1[0]];
        out[1] = parts[pref2[0]];
        out[2] = parts[3 - pref1[0] - pref2[0]];
    } else if (pref1[1] == pref2[1]) {
        // Step 3: same favorite and same second favorite. Agent 2 takes her
        // favorite two bundles, leaves the third to agent 3, re-divides by
        // her leximin 2-partition; agent 1 chooses.
        const GoodSet pool = parts[pref2[0]] | parts[pref2[1]];
        out[2] = parts[pref2[2]];
        PartitionResult redivided = leximin_partition(v2, pool, 2, budget);
        std::tie(out[0], out[1]) = choose_between(v1, redivided);
    } else {
        // Step 4: same favorite, different second favorites. Relabel so that
        // agent 1 prefers X >= Y >= Z and agent 2 prefers X >= Z >= Y.
        const GoodSet x = parts[pref1[0]], y = parts[pref1[1]], z = parts[pref1[2]];
        if (2 * v1.value(y) > v1.value(x) + v1.value(z) &&
            2 * v2.value(z) > v2.value(x) + v2.value(y)) {
            // 4(a): both get their second favorite, agent 3 the common favorite.
            out[0] = y;
            out[1] = z;
            out[2] = x;
        } else if (2 * v1.value(y) <= v1.value(x) + v1.value(z)) {
            // 4(b): agent 2 takes her favorite two (X and Z), re-divides,
            // agent 1 chooses; Y goes to agent 3.
            out[2] = y;
            PartitionResult redivided = leximin_partition(v2, x | z, 2, budget);
            std::tie(out[0], out[1]) = choose_between(v1, redivided);
        } else {
            // 4(b) mirrored: agent 1 divides her favorite two (X and Y),
            // agent 2 chooses; Z goes to agent 3.
            out[2] = z;
            PartitionResult redivided = leximin_partition(v1, x | y, 2, budget);
            std::tie(out[1], out[0]) = choose_between(v2, redivided);
        }
    }
    return Allocation({out[0], out[1], out[2]});
}

} // namespace fairdiv
