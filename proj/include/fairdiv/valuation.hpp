#pragma once

#include "fairdiv/goodset.hpp"
#include "fairdiv/rational.hpp"

#include <vector>

namespace fairdiv {

enum class ValuationKind { Additive, Table };

// Results of the exhaustive class-membership check. Additive valuations
// short-circuit subadditive/submodular to true; tables are checked over all
// pairs/marginals, which is why the table kind is capped at m <= 16 goods.
struct ValuationClass {
    bool additive = false;
    bool binary_additive = false;
    bool subadditive = false;
    bool submodular = false;
    bool monotone = false;
    bool strictly_increasing = false;
};

// A normalized monotone valuation over M = {1..m}. Immutable after
// construction; construction validates v(empty)=0, monotonicity, and
// non-negativity, and caches the class flags.
class Valuation {
public:
    static constexpr int max_table_goods = 16;

    static Valuation additive(std::vector<Rational> per_good_values);
    // table[mask] = v(set with that bitmask); must have 1<<m entries.
    static Valuation table(int m, std::vector<Rational> table_by_mask);

    ValuationKind kind() const { return kind_; }
    int good_count() const { return m_; }
    const ValuationClass& flags() const { return flags_; }

    const std::vector<Rational>& additive_values() const { return values_; }
    const std::vector<Rational>& table_by_mask() const { return table_; }

    // v(S); additive sums per-good values, table looks the entry up.
    Rational value(GoodSet s) const;
    Rational value_of_good(int good) const { return value(GoodSet::single(good)); }

    // Marginal v(S u {good}) - v(S). Non-negative for monotone valuations.
    Rational marginal(GoodSet s, int good) const
    {
        return value(s.with(good)) - value(s);
    }

    bool operator==(const Valuation& other) const
    {
        return kind_ == other.kind_ && m_ == other.m_ && values_ == other.values_ &&
               table_ == other.table_;
    }

private:
    Valuation() = default;

    ValuationKind kind_ = ValuationKind::Additive;
    int m_ = 0;
    std::vector<Rational> values_; // additive kind
    std::vector<Rational> table_;  // table kind, indexed by bitmask
    ValuationClass flags_;
};

// Exhaustive class check; exposed separately so tests and generators can
// verify the cached flags agree with a recomputation.
ValuationClass check_valuation_class(const Valuation& v);

} // namespace fairdiv
