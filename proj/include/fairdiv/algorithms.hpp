#pragma once

#include "fairdiv/instance.hpp"
#include "fairdiv/partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fairdiv {

// Directed envy relation: edge i -> j iff v_i(A_i) < v_i(A_j).
class EnvyGraph {
public:
    EnvyGraph(int n) : n_(n), envies_(static_cast<std::size_t>(n * n), false) {}

    int agent_count() const { return n_; }
    bool envies(int i, int j) const { return envies_[index(i, j)]; }
    void set(int i, int j) { envies_[index(i, j)] = true; }

    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;
    // A directed cycle found by depth-first search from the lowest-index
    // node, neighbors visited in ascending order; empty when acyclic.
    std::vector<int> find_cycle() const;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<bool> envies_;
};

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc);

// Rotates bundles backwards along envy cycles until the envy graph is
// acyclic. Each rotation strictly decreases the edge count and never
// decreases any agent's own-bundle value. Resolved cycles are appended to
// *rotations when given.
Allocation eliminate_envy_cycles(const Instance& inst, Allocation alloc,
                                 std::vector<std::vector<int>>* rotations = nullptr);

// Maximum-weight bipartite matching on a |L| x |R| matrix of non-negative
// rational weights. Zero-weight edges never appear in the result; among
// maximum-weight matchings the lexicographically smallest edge set (sorted
// by (left, right), both 1-based) is returned.
std::vector<std::pair<int, int>> max_weight_matching(
    const std::vector<std::vector<Rational>>& weights);

// Guarantee attached to the matching algorithm's output, classified by how
// many agents ended up with more than one good (additive valuations get the
// MMA-family labels, anything else the EF-family ones).
enum class GuaranteeClass { MmaHalf, MmaxHalf, MmaxExact, EfHalf, EfxHalf, EfxExact };

std::string guarantee_to_string(GuaranteeClass g);

struct MatchingRound {
    std::vector<int> unenvied;                  // L at round start
    std::vector<int> available;                 // R at round start
    bool cardinality_fallback = false;          // all L x R marginals were zero
    std::vector<std::pair<int, int>> matching;  // (agent, good)
    std::vector<std::vector<int>> rotations;    // envy cycles resolved after the round
};

struct MatchingResult {
    Allocation allocation;
    GuaranteeClass guarantee;
    std::vector<MatchingRound> trace;
};

// Round-based matching algorithm: repeatedly matches unenvied agents to
// unallocated goods by maximum marginal weight (maximum cardinality when all
// marginals vanish), then removes envy cycles. Terminates within m rounds.
MatchingResult allocate_matching(const Instance& inst);

// The leximin n-partition handed out in canonical part order. MMA1 for
// submodular valuations, MMAX for strictly increasing subadditive ones.
Allocation allocate_identical_leximin(const Valuation& v, int n, const SearchBudget& budget = {});

// Divide-and-choose for three agents with additive valuations: agent 3
// divides by her leximin 3-partition, agents 1 and 2 select per the case
// analysis. Output is MMA1 for all three agents.
Allocation allocate_three_agents(const Instance& inst, const SearchBudget& budget = {});

} // namespace fairdiv
