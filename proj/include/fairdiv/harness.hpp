#pragma once

#include "fairdiv/fairness.hpp"
#include "fairdiv/search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fairdiv {

// An expected verdict attached to a named reference allocation of a catalog
// entry; agent = 0 means the overall (conjunction) verdict.
struct ExpectedVerdict {
    std::string allocation;
    Notion notion = Notion::EF;
    Rational alpha = 1;
    int agent = 0;
    bool satisfied = false;
};

// An expected outcome of the exhaustive allocation-existence search.
struct ExpectedSearch {
    Notion notion = Notion::EF;
    Rational alpha = 1;
    bool exists = false;
};

struct InstanceCatalogEntry {
    std::string id;
    Instance instance;
    std::vector<std::pair<std::string, Allocation>> allocations;
    std::vector<ExpectedVerdict> expected_verdicts;
    std::vector<ExpectedSearch> expected_searches;

    const Allocation& allocation(const std::string& name) const;
};

// The bundled worked instances: the two-good high-contrast pair (example1),
// the tiered eight-good valuation (example2), the block-and-units family
// (example3_n2/n3), the epsilon matrix pair (example4), the seven-good
// EFX/MMAX separator (example5), the kn-1 unit-good families (lemma3_*),
// and the three-agents/two-goods instance (intro_footnote).
const std::vector<InstanceCatalogEntry>& instance_catalog();
const InstanceCatalogEntry& catalog_entry(const std::string& id);

// The block-and-units instance for arbitrary parameter n: n+1 agents and
// 2n+1 goods, identical additive values (n for the first n goods, 1 for the
// rest), plus its uneven reference allocation.
Instance block_and_units_instance(int n);
Allocation block_and_units_ef1_allocation(int n);

enum class ValuationClassKind {
    Additive,
    BinaryAdditive,
    SubadditiveTable,
    SubmodularTable,
    StrictlyIncreasingSubadditiveTable,
};

ValuationClassKind valuation_class_from_string(const std::string& name);

// Seeded instance generation; identical config and index always produce the
// same instance, and the instance is rejection-sampled until it belongs to
// the requested class (verified through check_valuation_class).
struct TrialConfig {
    ValuationClassKind kind = ValuationClassKind::Additive;
    int n = 3;
    int m = 6;
    std::uint64_t seed = 0;
    int trials = 500;
    int max_denominator = 64;
};

Instance generate_instance(const TrialConfig& cfg, int index);

// Deterministic random allocation for the sampling paths.
Allocation sample_allocation(const Instance& inst, std::uint64_t seed);

struct Counterexample {
    Instance instance;
    Allocation allocation;
    FairnessReport premise_report;
    FairnessReport conclusion_report;
    int trial = 0;
};

struct ImplicationReport {
    bool passed = false;
    int trials = 0;
    int premise_hits = 0;  // allocations that satisfied the premise
    bool sampled = false;  // some trial fell back to random allocation sampling
    std::optional<Counterexample> counterexample;
};

// Empirically certifies "premise => conclusion" on generated instances of
// the configured class. Premise-satisfying allocations are found by
// exhaustive enumeration when n^m <= enum_cap, otherwise by seeded sampling
// (recorded via `sampled`). Stops at the first counterexample.
ImplicationReport verify_implication(Notion premise, const Rational& premise_alpha,
                                     Notion conclusion, const Rational& conclusion_alpha,
                                     const TrialConfig& cfg,
                                     int max_checked_per_trial = 25,
                                     std::uint64_t enum_cap = 1'000'000,
                                     const SearchBudget& budget = {});

// Verifies that a specific allocation separates two notions: the premise
// holds and the conclusion fails. Returns the counterexample payload, or
// nullopt when the pair does not separate them.
std::optional<Counterexample> check_non_implication(const Instance& inst,
                                                    const Allocation& alloc, Notion premise,
                                                    const Rational& premise_alpha,
                                                    Notion conclusion,
                                                    const Rational& conclusion_alpha,
                                                    const SearchBudget& budget = {});

struct EgalitarianReport {
    int n = 0;
    Rational mma1_bound;         // ceil(n/2)
    Rational mmax_bound;         // n
    bool mma1_bound_holds = false;
    bool mmax_bound_holds = false;
    int mma1_count = 0;          // allocations satisfying MMA1 / MMAX
    int mmax_count = 0;
    std::optional<Rational> mma1_min_value; // worst agent value over MMA1 allocations
    std::optional<Rational> mmax_min_value;
    Rational ef1_fixture_min_value;         // the uneven reference allocation's worst agent
};

// Exhausts every allocation of the block-and-units instance with parameter n
// and checks the egalitarian floors: every MMA1 allocation leaves each agent
// at least ceil(n/2), every MMAX allocation at least n, while the reference
// EF1 allocation bottoms out at 1.
EgalitarianReport verify_egalitarian_bounds(int n, const SearchBudget& budget = {});

// The implication matrix certified by the harness: each row is one
// premise => conclusion claim together with the valuation class it is
// stated for.
struct ImplicationClaim {
    std::string id;
    Notion premise;
    Rational premise_alpha;
    Notion conclusion;
    Rational conclusion_alpha;
    ValuationClassKind kind;
};

const std::vector<ImplicationClaim>& standard_implication_claims();

struct AlphaMonotonicityReport {
    bool passed = false;
    int trials = 0;
    std::string violation; // empty when passed
};

// Random (instance, allocation) pairs: a notion satisfied at alpha must stay
// satisfied at every smaller alpha in the probe set.
AlphaMonotonicityReport verify_alpha_monotonicity(const TrialConfig& cfg,
                                                  const SearchBudget& budget = {});

struct AlgorithmTrialReport {
    bool passed = false;
    int trials = 0;
    std::string failure; // empty when passed
};

// Divide-and-choose on random additive 3-agent instances; the output must
// satisfy MMA1 at alpha=1 for every agent on every trial.
AlgorithmTrialReport verify_three_agent_algorithm(const TrialConfig& cfg,
                                                  const SearchBudget& budget = {});

// Matching algorithm on random instances: EF1 and 1/2-EFX always; for
// additive valuations each agent additionally passes 1/2-MMA or exact MMAX;
// the guarantee class matches the multi-good-agent count; and the round
// trace satisfies its structural invariants.
AlgorithmTrialReport verify_matching_algorithm(const TrialConfig& cfg,
                                               const SearchBudget& budget = {});

// Branch-and-bound solvers against the unpruned enumeration oracles on
// random instances (subset sizes kept within k^|S| <= 10^6).
AlgorithmTrialReport verify_solver_crosscheck(const TrialConfig& cfg,
                                              const SearchBudget& budget = {});

} // namespace fairdiv
