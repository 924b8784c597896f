#pragma once

#include "fairdiv/instance.hpp"
#include "fairdiv/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairdiv {

enum class Notion { EF, EF1, EFX, PROP, MMS, EEF, MMA, MMA1, MMAX };

Notion notion_from_string(const std::string& name);
std::string notion_to_string(Notion notion);

// Machine-checkable evidence attached to a verdict. The populated fields
// depend on the notion:
//   EF family   : other_agent (+ good for EF1/EFX)
//   MMS         : partition certifying the threshold (on violation)
//   EEF         : minimax partition (on satisfaction)
//   MMA family  : good removed (MMA1/MMAX) + the (n-1)-partition whose every
//                 part beats the agent's scaled bundle value
struct Witness {
    std::optional<int> other_agent;
    std::optional<int> good;
    std::optional<PartitionResult> partition;
};

struct AgentVerdict {
    int agent = 0;
    bool satisfied = false;
    Rational own_value;                // v_i(A_i)
    std::optional<Rational> threshold; // unscaled right-hand side, when single-valued
    std::optional<Witness> witness;
};

struct FairnessReport {
    Notion notion = Notion::EF;
    Rational alpha;
    bool satisfied = false; // conjunction of the per-agent verdicts
    std::vector<AgentVerdict> agents;
};

struct CheckOptions {
    SearchBudget budget{};
    MmsCache* cache = nullptr; // optional memo shared across checks on one instance
};

// Verdict for any notion at approximation factor alpha in [0,1] (alpha must
// be 1 for EEF, which has no approximate form here). Degenerate shapes: n=1
// satisfies every notion, and an agent whose complement is empty satisfies
// the whole MMA family.
FairnessReport check_fairness(const Instance& inst, const Allocation& alloc, Notion notion,
                              const Rational& alpha, const CheckOptions& options = {});

FairnessReport check_envy(const Instance& inst, const Allocation& alloc, Notion notion,
                          const Rational& alpha, const CheckOptions& options = {});
FairnessReport check_prop(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                          const CheckOptions& options = {});
FairnessReport check_mms(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                         const CheckOptions& options = {});
FairnessReport check_eef(const Instance& inst, const Allocation& alloc,
                         const CheckOptions& options = {});
FairnessReport check_mma(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                         const CheckOptions& options = {});
FairnessReport check_mma1(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                          const CheckOptions& options = {});
FairnessReport check_mmax(const Instance& inst, const Allocation& alloc, const Rational& alpha,
                          const CheckOptions& options = {});

} // namespace fairdiv
