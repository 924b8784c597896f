#include "fairdiv/algorithms.hpp"
#include "fairdiv/harness.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fairdiv;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;        // satisfied / exists / verified
constexpr int exit_violated = 1;  // valid computation, negative answer
constexpr int exit_usage = 2;     // bad flags or unparseable input
constexpr int exit_budget = 3;    // node budget exhausted

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_goods(const std::vector<int>& goods)
{
    std::string out = "{";
    for (std::size_t i = 0; i < goods.size(); ++i)
        out += (i ? "," : "") + std::to_string(goods[i]);
    return out + "}";
}

void print_report(const FairnessReport& report)
{
    std::cout << notion_to_string(report.notion) << " alpha=" << format_rational(report.alpha) << ": "
              << (report.satisfied ? "satisfied" : "violated") << "\n";
    for (const AgentVerdict& a : report.agents) {
        std::cout << "  agent " << a.agent << ": " << (a.satisfied ? "ok" : "violated")
                  << "  value=" << format_rational(a.own_value);
        if (a.threshold)
            std::cout << "  threshold=" << format_rational(*a.threshold);
        if (a.witness && a.witness->good)
            std::cout << "  witness good=" << *a.witness->good;
        if (a.witness && a.witness->other_agent)
            std::cout << "  witness agent=" << *a.witness->other_agent;
        std::cout << "\n";
        if (a.witness && a.witness->partition) {
            std::cout << "    witness partition:";
            for (GoodSet part : a.witness->partition->parts)
                std::cout << " " << join_goods(part.to_vector());
            std::cout << "\n";
        }
    }
}

void print_allocation(const Allocation& alloc)
{
    for (int i = 1; i <= alloc.agent_count(); ++i)
        std::cout << "agent " << i << ": " << join_goods(alloc.bundle(i).to_vector()) << "\n";
}

struct VerifyResult {
    bool passed = false;
    json detail;
};

VerifyResult run_claim(const std::string& id, std::uint64_t seed, int trials,
                       const SearchBudget& budget)
{
    for (const ImplicationClaim& claim : standard_implication_claims()) {
        if (claim.id != id)
            continue;
        TrialConfig cfg;
        cfg.kind = claim.kind;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.n = 3;
        cfg.m = (claim.kind == ValuationClassKind::Additive ||
                 claim.kind == ValuationClassKind::BinaryAdditive)
                    ? 6
                    : 5;
        ImplicationReport rep = verify_implication(claim.premise, claim.premise_alpha,
                                                   claim.conclusion, claim.conclusion_alpha, cfg,
                                                   25, 1'000'000, budget);
        json detail{{"claim", id},
                    {"trials", rep.trials},
                    {"premise_hits", rep.premise_hits},
                    {"sampled", rep.sampled},
                    {"passed", rep.passed}};
        if (rep.counterexample) {
            detail["counterexample"] = {
                {"instance", json::parse(serialize_instance(rep.counterexample->instance))},
                {"allocation", to_json(rep.counterexample->allocation)},
                {"trial", rep.counterexample->trial}};
        }
        return {rep.passed, std::move(detail)};
    }

    auto algo_detail = [&](const std::string& name, const AlgorithmTrialReport& rep) {
        json detail{{"claim", name}, {"trials", rep.trials}, {"passed", rep.passed}};
        if (!rep.failure.empty())
            detail["failure"] = rep.failure;
        return VerifyResult{rep.passed, std::move(detail)};
    };

    if (id == "alpha-monotonicity") {
        TrialConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        AlphaMonotonicityReport rep = verify_alpha_monotonicity(cfg, budget);
        json detail{{"claim", id}, {"trials", rep.trials}, {"passed", rep.passed}};
        if (!rep.violation.empty())
            detail["violation"] = rep.violation;
        return {rep.passed, std::move(detail)};
    }
    if (id == "three-agents") {
        TrialConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.m = 7;
        return algo_detail(id, verify_three_agent_algorithm(cfg, budget));
    }
    if (id == "matching-additive" || id == "matching-subadditive") {
        TrialConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.n = 4;
        if (id == "matching-additive") {
            cfg.kind = ValuationClassKind::Additive;
            cfg.m = 8;
        } else {
            cfg.kind = ValuationClassKind::SubadditiveTable;
            cfg.m = 6;
        }
        return algo_detail(id, verify_matching_algorithm(cfg, budget));
    }
    if (id == "solver-crosscheck") {
        TrialConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.n = 2;
        cfg.m = 12;
        return algo_detail(id, verify_solver_crosscheck(cfg, budget));
    }
    if (id == "non-implications") {
        // fixtures where the premise holds and the conclusion fails
        struct Fixture {
            const char* entry;
            const char* alloc;
            Notion premise;
            Notion conclusion;
        };
        static const Fixture fixtures[] = {
            {"example1", "swapped", Notion::MMS, Notion::MMA},
            {"example2", "tail_to_agent1", Notion::MMA, Notion::MMS},
            {"example5", "fixture", Notion::EFX, Notion::MMAX},
            {"example4", "rows", Notion::MMA1, Notion::MMS},
        };
        json rows = json::array();
        bool all = true;
        for (const Fixture& f : fixtures) {
            const InstanceCatalogEntry& entry = catalog_entry(f.entry);
            auto cex = check_non_implication(entry.instance, entry.allocation(f.alloc), f.premise,
                                             1, f.conclusion, 1, budget);
            all = all && cex.has_value();
            rows.push_back(json{{"entry", f.entry},
                                {"premise", notion_to_string(f.premise)},
                                {"conclusion", notion_to_string(f.conclusion)},
                                {"separated", cex.has_value()}});
        }
        return {all, json{{"claim", id}, {"passed", all}, {"fixtures", std::move(rows)}}};
    }
    if (id.rfind("egalitarian-n", 0) == 0) {
        const int n = std::stoi(id.substr(13));
        EgalitarianReport rep = verify_egalitarian_bounds(n, budget);
        bool passed = rep.mma1_bound_holds && rep.mmax_bound_holds &&
                      rep.ef1_fixture_min_value == Rational(1);
        json detail{{"claim", id},
                    {"passed", passed},
                    {"mma1_min_value", format_rational(*rep.mma1_min_value)},
                    {"mmax_min_value", format_rational(*rep.mmax_min_value)},
                    {"ef1_fixture_min_value", format_rational(rep.ef1_fixture_min_value)}};
        return {passed, std::move(detail)};
    }
    throw CLI::ValidationError("--claim", "unknown claim id: " + id);
}

std::vector<std::string> all_claim_ids()
{
    std::vector<std::string> ids;
    for (const ImplicationClaim& claim : standard_implication_claims())
        ids.push_back(claim.id);
    for (const char* extra : {"alpha-monotonicity", "non-implications", "egalitarian-n2",
                              "egalitarian-n3", "three-agents", "matching-additive",
                              "matching-subadditive", "solver-crosscheck"})
        ids.emplace_back(extra);
    return ids;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact fair-division toolkit: partition solvers, fairness checkers, "
                 "allocation algorithms"};
    app.require_subcommand(1);

    std::string instance_path, allocation_path, notion_name = "ef", alpha_text = "1";
    std::string algo = "matching", claim, class_name = "additive", entry_id;
    int agent = 1, k = 0, n = 3, m = 6, index = 0, trials = 500;
    std::uint64_t seed = 0, max_nodes = SearchBudget{}.max_nodes;
    bool want_json = false, want_trace = false;

    auto add_common = [&](CLI::App* cmd, bool needs_instance) {
        if (needs_instance)
            cmd->add_option("--instance", instance_path, "instance JSON file")->required();
        cmd->add_flag("--json", want_json, "emit canonical JSON instead of text");
        cmd->add_option("--max-nodes", max_nodes, "search node budget");
        return cmd;
    };

    auto* check = add_common(app.add_subcommand("check", "evaluate a fairness notion"), true);
    check->add_option("--allocation", allocation_path, "allocation JSON file")->required();
    check->add_option("--notion", notion_name, "ef|ef1|efx|prop|mms|eef|mma|mma1|mmax")
        ->required();
    check->add_option("--alpha", alpha_text, "approximation factor p/q in [0,1]");
    check->add_option("--agent", agent, "restrict the verdict to one agent (1-based)");
    bool agent_given = false;
    check->callback([&] { agent_given = check->count("--agent") > 0; });

    CLI::App* solvers[3];
    const char* solver_names[3] = {"mms", "leximin", "minimax"};
    const char* solver_help[3] = {"maximin k-partition value for one agent",
                                  "leximin k-partition for one agent",
                                  "minimax k-partition value for one agent"};
    for (int s = 0; s < 3; ++s) {
        solvers[s] = add_common(app.add_subcommand(solver_names[s], solver_help[s]), true);
        solvers[s]->add_option("--agent", agent, "agent whose valuation to use (1-based)");
        solvers[s]->add_option("--k", k, "number of parts")->required();
    }

    auto* solve = add_common(app.add_subcommand("solve", "run an allocation algorithm"), true);
    solve->add_option("--algo", algo, "matching|three-agents|identical-leximin");
    solve->add_flag("--trace", want_trace, "include the per-round trace (matching only)");

    auto* search = add_common(
        app.add_subcommand("search", "exhaustive search for a satisfying allocation"), true);
    search->add_option("--notion", notion_name, "notion every agent must satisfy")->required();
    search->add_option("--alpha", alpha_text, "approximation factor p/q in [0,1]");

    auto* gen = add_common(app.add_subcommand("gen", "generate a seeded random instance"), false);
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--class", class_name,
                    "additive|binary-additive|subadditive-table|submodular-table|"
                    "strictly-increasing-subadditive-table");
    gen->add_option("--n", n, "agents");
    gen->add_option("--m", m, "goods");
    gen->add_option("--index", index, "instance index within the seed's sequence");

    auto* verify = add_common(app.add_subcommand("verify", "run a harness suite"), false);
    verify->add_option("--claim", claim, "claim id, or 'all'")->required();
    verify->add_option("--seed", seed, "trial seed")->required();
    verify->add_option("--trials", trials, "trials per randomized claim");

    auto* examples =
        add_common(app.add_subcommand("examples", "list or dump the bundled instances"), false);
    examples->add_option("id", entry_id, "catalog entry to dump");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        SearchBudget budget{max_nodes};

        if (check->parsed()) {
            Instance inst = parse_instance(slurp(instance_path));
            Allocation alloc = parse_allocation(slurp(allocation_path));
            MmsCache cache;
            FairnessReport report = check_fairness(inst, alloc, notion_from_string(notion_name),
                                                   parse_rational(alpha_text),
                                                   CheckOptions{budget, &cache});
            if (want_json)
                emit(to_json(report));
            else
                print_report(report);
            bool verdict = agent_given ? report.agents.at(static_cast<std::size_t>(agent - 1))
                                             .satisfied
                                       : report.satisfied;
            return verdict ? exit_ok : exit_violated;
        }

        for (int s = 0; s < 3; ++s) {
            if (!solvers[s]->parsed())
                continue;
            Instance inst = parse_instance(slurp(instance_path));
            const Valuation& v = inst.valuation(agent);
            Rational value;
            PartitionResult partition;
            if (s == 0)
                std::tie(value, partition) = mms_value(v, inst.all_goods(), k, budget);
            else if (s == 1) {
                partition = leximin_partition(v, inst.all_goods(), k, budget);
                value = partition.value_vector.front();
            } else
                std::tie(value, partition) = minimax_partition(v, inst.all_goods(), k, budget);
            if (want_json)
                emit(json{{"agent", agent},
                          {"k", k},
                          {"value", format_rational(value)},
                          {"partition", to_json(partition)}});
            else {
                std::cout << format_rational(value) << "\n";
                for (GoodSet part : partition.parts)
                    std::cout << "  " << join_goods(part.to_vector()) << "\n";
            }
            return exit_ok;
        }

        if (solve->parsed()) {
            Instance inst = parse_instance(slurp(instance_path));
            if (algo == "matching") {
                MatchingResult result = allocate_matching(inst);
                json j = to_json(result);
                if (!want_trace)
                    j.erase("rounds");
                if (want_json)
                    emit(j);
                else {
                    print_allocation(result.allocation);
                    std::cout << "guarantee: " << guarantee_to_string(result.guarantee) << "\n";
                }
            } else if (algo == "three-agents") {
                Allocation alloc = allocate_three_agents(inst, budget);
                if (want_json)
                    emit(to_json(alloc));
                else
                    print_allocation(alloc);
            } else if (algo == "identical-leximin") {
                for (const Valuation& v : inst.valuations())
                    if (!(v == inst.valuation(1)))
                        throw ParseError("identical-leximin requires identical valuations");
                Allocation alloc =
                    allocate_identical_leximin(inst.valuation(1), inst.agent_count(), budget);
                if (want_json)
                    emit(to_json(alloc));
                else
                    print_allocation(alloc);
            } else {
                throw CLI::ValidationError("--algo", "unknown algorithm: " + algo);
            }
            return exit_ok;
        }

        if (search->parsed()) {
            Instance inst = parse_instance(slurp(instance_path));
            MmsCache cache;
            SearchOutcome outcome = exhaustive_allocation_search(
                inst,
                SearchPredicate::for_notion(notion_from_string(notion_name),
                                            parse_rational(alpha_text)),
                budget, &cache);
            if (want_json)
                emit(to_json(outcome));
            else {
                std::cout << (outcome.exists ? "exists" : "does not exist") << "\n";
                if (outcome.witness)
                    print_allocation(*outcome.witness);
            }
            return outcome.exists ? exit_ok : exit_violated;
        }

        if (gen->parsed()) {
            TrialConfig cfg;
            cfg.kind = valuation_class_from_string(class_name);
            cfg.n = n;
            cfg.m = m;
            cfg.seed = seed;
            std::cout << serialize_instance(generate_instance(cfg, index));
            return exit_ok;
        }

        if (verify->parsed()) {
            std::vector<std::string> ids =
                claim == "all" ? all_claim_ids() : std::vector<std::string>{claim};
            json results = json::array();
            bool all_passed = true;
            for (const std::string& id : ids) {
                VerifyResult result = run_claim(id, seed, trials, budget);
                all_passed = all_passed && result.passed;
                if (!want_json)
                    std::cout << id << ": " << (result.passed ? "pass" : "FAIL") << "\n";
                results.push_back(std::move(result.detail));
            }
            if (want_json)
                emit(json{{"passed", all_passed}, {"claims", std::move(results)}});
            return all_passed ? exit_ok : exit_violated;
        }

        if (examples->parsed()) {
            if (entry_id.empty()) {
                json ids = json::array();
                for (const InstanceCatalogEntry& entry : instance_catalog()) {
                    if (want_json)
                        ids.push_back(entry.id);
                    else
                        std::cout << entry.id << "\n";
                }
                if (want_json)
                    emit(ids);
                return exit_ok;
            }
            const InstanceCatalogEntry& entry = catalog_entry(entry_id);
            json allocations = json::object();
            for (const auto& [name, alloc] : entry.allocations)
                allocations[name] = to_json(alloc);
            json j{{"id", entry.id},
                   {"instance", json::parse(serialize_instance(entry.instance))},
                   {"allocations", std::move(allocations)}};
            emit(j);
            return exit_ok;
        }
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
