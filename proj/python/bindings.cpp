// Python module: thin JSON-string facade over the C++ core. Instances and
// allocations travel as the same JSON documents the CLI uses; results come
// back as JSON strings the wrapper decodes.
#include "fairdiv/algorithms.hpp"
#include "fairdiv/harness.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/search.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace fairdiv;
using nlohmann::json;

namespace {

SearchBudget budget_from(std::uint64_t max_nodes) { return SearchBudget{max_nodes}; }

std::string check_json(const std::string& instance_text, const std::string& allocation_text,
                       const std::string& notion, const std::string& alpha,
                       std::uint64_t max_nodes)
{
    Instance inst = parse_instance(instance_text);
    Allocation alloc = parse_allocation(allocation_text);
    MmsCache cache;
    FairnessReport report =
        check_fairness(inst, alloc, notion_from_string(notion), parse_rational(alpha),
                       CheckOptions{budget_from(max_nodes), &cache});
    return to_json(report).dump();
}

std::string partition_json(const std::string& instance_text, const std::string& solver, int agent,
                           int k, std::uint64_t max_nodes)
{
    Instance inst = parse_instance(instance_text);
    const Valuation& v = inst.valuation(agent);
    Rational value;
    PartitionResult partition;
    if (solver == "mms")
        std::tie(value, partition) = mms_value(v, inst.all_goods(), k, budget_from(max_nodes));
    else if (solver == "leximin") {
        partition = leximin_partition(v, inst.all_goods(), k, budget_from(max_nodes));
        value = partition.value_vector.front();
    } else if (solver == "minimax")
        std::tie(value, partition) =
            minimax_partition(v, inst.all_goods(), k, budget_from(max_nodes));
    else
        throw std::invalid_argument("unknown solver: " + solver);
    return json{{"value", format_rational(value)}, {"partition", to_json(partition)}}.dump();
}

std::string solve_json(const std::string& instance_text, const std::string& algo,
                       std::uint64_t max_nodes)
{
    Instance inst = parse_instance(instance_text);
    if (algo == "matching")
        return to_json(allocate_matching(inst)).dump();
    if (algo == "three-agents")
        return to_json(allocate_three_agents(inst, budget_from(max_nodes))).dump();
    if (algo == "identical-leximin") {
        for (const Valuation& v : inst.valuations())
            if (!(v == inst.valuation(1)))
                throw std::invalid_argument("identical-leximin requires identical valuations");
        return to_json(
                   allocate_identical_leximin(inst.valuation(1), inst.agent_count(),
                                              budget_from(max_nodes)))
            .dump();
    }
    throw std::invalid_argument("unknown algorithm: " + algo);
}

std::string search_json(const std::string& instance_text, const std::string& notion,
                        const std::string& alpha, std::uint64_t max_nodes)
{
    Instance inst = parse_instance(instance_text);
    MmsCache cache;
    SearchOutcome outcome = exhaustive_allocation_search(
        inst, SearchPredicate::for_notion(notion_from_string(notion), parse_rational(alpha)),
        budget_from(max_nodes), &cache);
    return to_json(outcome).dump();
}

std::string generate_json(const std::string& valuation_class, int n, int m, std::uint64_t seed,
                          int index)
{
    TrialConfig cfg;
    cfg.kind = valuation_class_from_string(valuation_class);
    cfg.n = n;
    cfg.m = m;
    cfg.seed = seed;
    return serialize_instance(generate_instance(cfg, index));
}

std::string catalog_json()
{
    json entries = json::array();
    for (const InstanceCatalogEntry& entry : instance_catalog()) {
        json allocations = json::object();
        for (const auto& [name, alloc] : entry.allocations)
            allocations[name] = to_json(alloc);
        entries.push_back(json{{"id", entry.id},
                               {"instance", json::parse(serialize_instance(entry.instance))},
                               {"allocations", std::move(allocations)}});
    }
    return entries.dump();
}

} // namespace

PYBIND11_MODULE(_fairdiv, m)
{
    m.doc() = "exact fair-division core: partition solvers, fairness checkers, allocation "
              "algorithms";
    m.def("check", &check_json, py::arg("instance"), py::arg("allocation"), py::arg("notion"),
          py::arg("alpha") = "1", py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def("partition", &partition_json, py::arg("instance"), py::arg("solver"),
          py::arg("agent") = 1, py::arg("k") = 2,
          py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def("solve", &solve_json, py::arg("instance"), py::arg("algo") = "matching",
          py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def("search", &search_json, py::arg("instance"), py::arg("notion"), py::arg("alpha") = "1",
          py::arg("max_nodes") = SearchBudget{}.max_nodes);
    m.def("generate", &generate_json, py::arg("valuation_class") = "additive", py::arg("n") = 3,
          py::arg("m") = 6, py::arg("seed") = 0, py::arg("index") = 0);
    m.def("catalog", &catalog_json);

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
}
