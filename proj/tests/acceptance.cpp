// Acceptance gate: ten checks, one pass/fail line each. All comparisons are
// exact rational equality; there are no numeric tolerances anywhere.
// The pruned 4^14 whole-instance search runs only with --slow.
#include "fairdiv/algorithms.hpp"
#include "fairdiv/harness.hpp"
#include "fairdiv/search.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>

using namespace fairdiv;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body)
{
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << number << " [" << title << "]: " << (ok ? "PASS" : "FAIL")
              << " (" << ms << " ms)";
    if (!error.empty())
        std::cout << "  error: " << error;
    std::cout << "\n";
    if (!ok)
        ++failures;
}

bool agent_verdict(const FairnessReport& report, int agent)
{
    return report.agents.at(static_cast<std::size_t>(agent - 1)).satisfied;
}

} // namespace

int main(int argc, char** argv)
{
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        slow = slow || std::strcmp(argv[i], "--slow") == 0;

    criterion(1, "two goods, two agents", [] {
        const InstanceCatalogEntry& entry = catalog_entry("example1");
        MmsCache cache;
        CheckOptions opts{{}, &cache};
        for (int agent : {1, 2})
            if (mms_value(entry.instance.valuation(agent), entry.instance.all_goods(), 2, {})
                    .first != 1)
                return false;
        const Allocation& swapped = entry.allocation("swapped");
        FairnessReport mms = check_fairness(entry.instance, swapped, Notion::MMS, 1, opts);
        FairnessReport mma = check_fairness(entry.instance, swapped, Notion::MMA, 1, opts);
        if (!mms.satisfied || agent_verdict(mma, 1) || agent_verdict(mma, 2))
            return false;
        return check_fairness(entry.instance, entry.allocation("favorites"), Notion::MMA, 1, opts)
            .satisfied;
    });

    criterion(2, "tiered eight-good valuation", [] {
        const InstanceCatalogEntry& entry = catalog_entry("example2");
        const Valuation& v1 = entry.instance.valuation(1);
        if (mms_value(v1, entry.instance.all_goods(), 4, {}).first != Rational(1, 2))
            return false;
        const Allocation& alloc = entry.allocation("tail_to_agent1");
        if (mms_value(v1, alloc.complement_of(1), 3, {}).first != Rational(2, 5))
            return false;
        MmsCache cache;
        CheckOptions opts{{}, &cache};
        return agent_verdict(check_fairness(entry.instance, alloc, Notion::MMA, 1, opts), 1) &&
               !agent_verdict(check_fairness(entry.instance, alloc, Notion::MMS, 1, opts), 1) &&
               !agent_verdict(check_fairness(entry.instance, alloc, Notion::PROP, 1, opts), 1);
    });

    criterion(3, "egalitarian floors, 4 agents x 7 goods", [] {
        EgalitarianReport report = verify_egalitarian_bounds(3);
        return report.ef1_fixture_min_value == 1 && report.mma1_count > 0 &&
               *report.mma1_min_value >= 2 && report.mmax_count > 0 &&
               *report.mmax_min_value >= 3;
    });

    criterion(4, "EFX without MMAX", [] {
        const InstanceCatalogEntry& entry = catalog_entry("example5");
        MmsCache cache;
        CheckOptions opts{{}, &cache};
        const Allocation& alloc = entry.allocation("fixture");
        if (!agent_verdict(check_fairness(entry.instance, alloc, Notion::EFX, 1, opts), 1))
            return false;
        FairnessReport mmax = check_fairness(entry.instance, alloc, Notion::MMAX, 1, opts);
        const AgentVerdict& verdict = mmax.agents.front();
        if (verdict.satisfied || !verdict.witness || !verdict.witness->good)
            return false;
        if (*verdict.witness->good != 7 || *verdict.threshold != Rational(6, 5))
            return false;
        for (const Rational& part : verdict.witness->partition->value_vector)
            if (part != Rational(6, 5))
                return false;
        return true;
    });

    criterion(5, "unit-good families: MMA unattainable, MMA1/MMAX attainable", [] {
        for (const char* id : {"lemma3_n2_k2", "lemma3_n3_k2"}) {
            const InstanceCatalogEntry& entry = catalog_entry(id);
            MmsCache cache;
            if (exhaustive_allocation_search(entry.instance,
                                             SearchPredicate::for_notion(Notion::MMA), {}, &cache)
                    .exists)
                return false;
            for (Notion notion : {Notion::MMA1, Notion::MMAX}) {
                SearchOutcome found = exhaustive_allocation_search(
                    entry.instance, SearchPredicate::for_notion(notion), {}, &cache);
                if (!found.exists || !found.witness)
                    return false;
                MmsCache verify_cache;
                if (!check_fairness(entry.instance, *found.witness, notion, 1,
                                    CheckOptions{{}, &verify_cache})
                         .satisfied)
                    return false;
            }
        }
        return true;
    });

    criterion(6, "epsilon matrix pair, fast checks", [] {
        const InstanceCatalogEntry& entry = catalog_entry("example4");
        MmsCache cache;
        FairnessReport mmax = check_fairness(entry.instance, entry.allocation("rows"),
                                             Notion::MMAX, 1, CheckOptions{{}, &cache});
        if (!mmax.satisfied)
            return false;
        for (int agent = 1; agent <= 4; ++agent)
            if (mms_value(entry.instance.valuation(agent), entry.instance.all_goods(), 4, {})
                    .first != 1)
                return false;
        return true;
    });

    if (slow) {
        criterion(6, "epsilon matrix pair, slow: no all-agents-at-MMS allocation", [] {
            const InstanceCatalogEntry& entry = catalog_entry("example4");
            SearchOutcome outcome = exhaustive_allocation_search(
                entry.instance, SearchPredicate::min_value(1),
                SearchBudget{1'000'000'000'000ULL});
            std::cout << "  (searched " << outcome.nodes << " nodes) ";
            return !outcome.exists;
        });
    }

    criterion(7, "implication suites, 500 trials per claim", [] {
        for (const ImplicationClaim& claim : standard_implication_claims()) {
            TrialConfig cfg;
            cfg.kind = claim.kind;
            cfg.n = 3;
            cfg.m = (claim.kind == ValuationClassKind::Additive ||
                     claim.kind == ValuationClassKind::BinaryAdditive)
                        ? 6
                        : 5;
            cfg.seed = 2024;
            cfg.trials = 500;
            ImplicationReport report =
                verify_implication(claim.premise, claim.premise_alpha, claim.conclusion,
                                   claim.conclusion_alpha, cfg);
            if (!report.passed || report.trials != 500) {
                std::cout << "  (claim " << claim.id << " failed) ";
                return false;
            }
        }
        TrialConfig mono;
        mono.trials = 500;
        mono.seed = 2024;
        if (!verify_alpha_monotonicity(mono).passed)
            return false;

        // the four separating fixtures
        struct Fixture {
            const char* entry;
            const char* alloc;
            Notion premise;
            Notion conclusion;
        };
        const Fixture fixtures[] = {
            {"example1", "swapped", Notion::MMS, Notion::MMA},
            {"example2", "tail_to_agent1", Notion::MMA, Notion::MMS},
            {"example5", "fixture", Notion::EFX, Notion::MMAX},
            {"example4", "rows", Notion::MMA1, Notion::MMS},
        };
        for (const Fixture& f : fixtures) {
            const InstanceCatalogEntry& entry = catalog_entry(f.entry);
            if (!check_non_implication(entry.instance, entry.allocation(f.alloc), f.premise, 1,
                                       f.conclusion, 1)
                     .has_value())
                return false;
        }
        return true;
    });

    criterion(8, "divide-and-choose, 500 additive 3-agent trials", [] {
        TrialConfig cfg;
        cfg.trials = 500;
        cfg.seed = 2024;
        cfg.m = 7;
        AlgorithmTrialReport report = verify_three_agent_algorithm(cfg);
        if (!report.failure.empty())
            std::cout << "  (" << report.failure << ") ";
        return report.passed && report.trials == 500;
    });

    criterion(9, "round-based matching, 500 additive + 500 subadditive trials", [] {
        TrialConfig additive;
        additive.kind = ValuationClassKind::Additive;
        additive.n = 4;
        additive.m = 8;
        additive.trials = 500;
        additive.seed = 2024;
        TrialConfig subadditive;
        subadditive.kind = ValuationClassKind::SubadditiveTable;
        subadditive.n = 4;
        subadditive.m = 6;
        subadditive.trials = 500;
        subadditive.seed = 2024;
        for (const TrialConfig& cfg : {additive, subadditive}) {
            AlgorithmTrialReport report = verify_matching_algorithm(cfg);
            if (!report.passed || report.trials != 500) {
                std::cout << "  (" << report.failure << ") ";
                return false;
            }
        }
        return true;
    });

    criterion(10, "solver cross-validation, 1000 instances", [] {
        AlgorithmTrialReport total;
        for (auto kind : {ValuationClassKind::Additive, ValuationClassKind::SubmodularTable}) {
            TrialConfig cfg;
            cfg.kind = kind;
            cfg.n = 2;
            cfg.m = kind == ValuationClassKind::Additive ? 12 : 8;
            cfg.trials = 500;
            cfg.seed = 2024;
            AlgorithmTrialReport report = verify_solver_crosscheck(cfg);
            if (!report.passed) {
                std::cout << "  (" << report.failure << ") ";
                return false;
            }
            total.trials += report.trials;
        }
        return total.trials == 1000;
    });

    std::cout << (failures == 0 ? "all criteria passed" : "FAILURES PRESENT") << "\n";
    return failures == 0 ? 0 : 1;
}
