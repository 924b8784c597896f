#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairdiv {

Notion notion_from_string(const std::string& name)
{
    if (name == "ef") return Notion::EF;
    if (name == "ef1") return Notion::EF1;
    if (name == "efx") return Notion::EFX;
    if (name == "prop") return Notion::PROP;
    if (name == "mms") return Notion::MMS;
    if (name == "eef") return Notion::EEF;
    if (name == "mma") return Notion::MMA;
    if (name == "mma1") return Notion::MMA1;
    if (name == "mmax") return Notion::MMAX;
    throw std::invalid_argument("unknown fairness notion: " + name);
}

std::string notion_to_string(Notion notion)
{
    switch (notion) {
    case Notion::EF: return "ef";
    case Notion::EF1: return "ef1";
    case Notion::EFX: return "efx";
    case Notion::PROP: return "prop";
    case Notion::MMS: return "mms";
    case Notion::EEF: return "eef";
    case Notion::MMA: return "mma";
    case Notion::MMA1: return "mma1";
    case Notion::MMAX: return "mmax";
    }
    throw std::logic_error("unreachable");
}

namespace {

struct Checker {
    const Instance& inst;
    const Allocation& alloc;
    Rational alpha;
    const CheckOptions& options;
    int n;

    Rational own(int i) const { return inst.valuation(i).value(alloc.bundle(i)); }

    Rational mms_of(int agent, GoodSet s, int k) const
    {
        return cached_mms_value(options.cache, agent, inst.valuation(agent), s, k,
                                options.budget);
    }

    AgentVerdict envy(int i, Notion notion) const
    {
        const Valuation& v = inst.valuation(i);
        AgentVerdict verdict{i, true, own(i), std::nullopt, std::nullopt};
        for (int j = 1; j <= n; ++j) {
            if (j == i)
                continue;
            const GoodSet other = alloc.bundle(j);
            if (notion == Notion::EF) {
                if (verdict.own_value >= alpha * v.value(other))
                    continue;
                verdict.satisfied = false;
                verdict.witness = Witness{j, std::nullopt, std::nullopt};
                return verdict;
            }
            if (other.empty())
                continue; // EF1/EFX vacuous against an empty bundle
            // best removal (EF1 needs one to work) and worst removal (EFX
            // needs all to work), with the goods realizing them
            std::optional<Rational> lo, hi;
            int lo_good = 0, hi_good = 0;
            for (int e : other.to_vector()) {
                Rational rest = v.value(other.without(e));
                if (!lo || rest < *lo) {
                    lo = rest;
                    lo_good = e;
                }
                if (!hi || rest > *hi) {
                    hi = rest;
                    hi_good = e;
                }
            }
            if (notion == Notion::EF1 && verdict.own_value < alpha * *lo) {
                verdict.satisfied = false;
                verdict.witness = Witness{j, lo_good, std::nullopt};
                return verdict;
            }
            if (notion == Notion::EFX && verdict.own_value < alpha * *hi) {
                verdict.satisfied = false;
                verdict.witness = Witness{j, hi_good, std::nullopt};
                return verdict;
            }
        }
        return verdict;
    }

    AgentVerdict prop(int i) const
    {
        const Valuation& v = inst.valuation(i);
        AgentVerdict verdict{i, false, own(i), v.value(inst.all_goods()) / n, std::nullopt};
        verdict.satisfied = verdict.own_value >= alpha * *verdict.threshold;
        return verdict;
    }

    AgentVerdict mms(int i) const
    {
        auto [value, partition] = mms_value(inst.valuation(i), inst.all_goods(), n,
                                            options.budget);
        AgentVerdict verdict{i, false, own(i), value, std::nullopt};
        verdict.satisfied = verdict.own_value >= alpha * value;
        if (!verdict.satisfied)
            verdict.witness = Witness{std::nullopt, std::nullopt, std::move(partition)};
        return verdict;
    }

    AgentVerdict eef(int i) const
    {
        auto [value, partition] =
            minimax_partition(inst.valuation(i), alloc.complement_of(i), n - 1, options.budget);
        AgentVerdict verdict{i, false, own(i), value, std::nullopt};
        verdict.satisfied = verdict.own_value >= value;
        if (verdict.satisfied)
            verdict.witness = Witness{std::nullopt, std::nullopt, std::move(partition)};
        return verdict;
    }

    AgentVerdict mma(int i) const
    {
        const GoodSet rest = alloc.complement_of(i);
        AgentVerdict verdict{i, true, own(i), Rational(0), std::nullopt};
        if (rest.empty())
            return verdict;
        auto [value, partition] = mms_value(inst.valuation(i), rest, n - 1, options.budget);
        verdict.threshold = value;
        verdict.satisfied = verdict.own_value >= alpha * value;
        if (!verdict.satisfied)
            verdict.witness = Witness{std::nullopt, std::nullopt, std::move(partition)};
        return verdict;
    }

    // MMA1 when require_all=false (some removal suffices), MMAX when true
    // (every removal must work). Witness on violation: a good e realizing
    // the extremal residual MMS, ties toward the largest index, plus the
    // partition all of whose parts beat the agent's scaled bundle value.
    AgentVerdict mma_removal(int i, bool require_all) const
    {
        const GoodSet rest = alloc.complement_of(i);
        AgentVerdict verdict{i, true, own(i), Rational(0), std::nullopt};
        if (rest.empty())
            return verdict;
        std::optional<Rational> extremal;
        int extremal_good = 0;
        for (int e : rest.to_vector()) {
            Rational residual = mms_of(i, rest.without(e), n - 1);
            const bool better = !extremal || (require_all ? residual >= *extremal
                                                          : residual <= *extremal);
            if (better) {
                extremal = residual;
                extremal_good = e;
            }
        }
        verdict.threshold = *extremal;
        verdict.satisfied = verdict.own_value >= alpha * *extremal;
        if (!verdict.satisfied) {
            auto [value, partition] =
                mms_value(inst.valuation(i), rest.without(extremal_good), n - 1, options.budget);
            verdict.witness = Witness{std::nullopt, extremal_good, std::move(partition)};
        }
        return verdict;
    }
};

} // namespace

FairnessReport check_fairness(const Instance& inst, const Allocation& alloc, Notion notion,
                              const Rational& alpha, const CheckOptions& options)
{
    if (alpha < 0 || alpha > 1)
        throw std::invalid_argument("alpha must lie in [0,1]");
    if (notion == Notion::EEF && alpha != 1)
        throw std::invalid_argument("EEF is defined only at alpha = 1");
    alloc.validate(inst);

    FairnessReport report;
    report.notion = notion;
    report.alpha = alpha;
    report.satisfied = true;

    const int n = inst.agent_count();
    Checker checker{inst, alloc, alpha, options, n};
    for (int i = 1; i <= n; ++i) {
        AgentVerdict verdict;
        if (n == 1) {
            // a lone agent holding M satisfies every notion by convention
            verdict = AgentVerdict{i, true, checker.own(i), std::nullopt, std::nullopt};
        } else {
            switch (notion) {
            case Notion::EF:
            case Notion::EF1:
            case Notion::EFX: verdict = checker.envy(i, notion); break;
            case Notion::PROP: verdict = checker.prop(i); break;
            case Notion::MMS: verdict = checker.mms(i); break;
            case Notion::EEF: verdict = checker.eef(i); break;
            case Notion::MMA: verdict = checker.mma(i); break;
            case Notion::MMA1: verdict = checker.mma_removal(i, false); break;
            case Notion::MMAX: verdict = checker.mma_removal(i, true); break;
            }
        }
        report.satisfied = report.satisfied && verdict.satisfied;
        report.agents.push_back(std::move(verdict));
    }
    return report;
}

FairnessReport check_envy(const Instance& inst, const Allocation& alloc, Notion notion,
                          const Rational& alpha, const CheckOptions& options)
{
    if (notion != Notion::EF && notion != Notion::EF1 && notion != Notion::EFX)
        throw std::invalid_argument("check_envy expects EF, EF1, or EFX");
    return check_fairness(inst, alloc, notion, alpha, options);
}

FairnessReport check_prop(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                          const CheckOptions& options)
{
    return check_fairness(inst, alloc, Notion::PROP, alpha, options);
}

FairnessReport check_mms(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                         const CheckOptions& options)
{
    return check_fairness(inst, alloc, Notion::MMS, alpha, options);
}

FairnessReport check_eef(const Instance& inst, const Allocation& alloc,
                         const CheckOptions& options)
{
    return check_fairness(inst, alloc, Notion::EEF, 1, options);
}

FairnessReport check_mma(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                         const CheckOptions& options)
{
    return check_fairness(inst, alloc, Notion::MMA, alpha, options);
}

FairnessReport check_mma1(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                          const CheckOptions& options)
{
    return check_fairness(inst, alloc, Notion::MMA1, alpha, options);
}

FairnessReport check_mmax(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                          const CheckOptions& options)
{
    return check_fairness(inst, alloc, Notion::MMAX, alpha, options);
}

} // namespace fairdiv
