#include "fairdiv/valuation.hpp"

#include <stdexcept>
#include <string>

namespace fairdiv {

namespace {

ValuationClass classify_additive(const std::vector<Rational>& values)
{
    ValuationClass c;
    c.additive = true;
    c.subadditive = true;
    c.submodular = true;
    c.monotone = true;
    c.binary_additive = true;
    c.strictly_increasing = true;
    for (const Rational& x : values) {
        if (x != 0 && x != 1)
            c.binary_additive = false;
        if (x == 0)
            c.strictly_increasing = false;
    }
    return c;
}

ValuationClass classify_table(int m, const std::vector<Rational>& table)
{
    ValuationClass c;
    c.monotone = true;
    c.subadditive = true;
    c.submodular = true;
    c.strictly_increasing = true;
    const std::uint64_t full = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);

    // additive iff the table equals the sum of its singletons
    c.additive = true;
    for (std::uint64_t s = 0; s <= full && c.additive; ++s) {
        Rational sum = 0;
        for (std::uint64_t rest = s; rest; rest &= rest - 1)
            sum += table[rest & (~rest + 1)];
        if (table[s] != sum)
            c.additive = false;
        if (s == full)
            break;
    }
    c.binary_additive = c.additive;
    if (c.binary_additive)
        for (int j = 0; j < m; ++j)
            if (table[std::uint64_t{1} << j] != 0 && table[std::uint64_t{1} << j] != 1)
                c.binary_additive = false;

    // monotone + strictly increasing over all marginals; submodular via the
    // equivalent marginal condition v(S+e) - v(S) >= v(S+f+e) - v(S+f)
    for (std::uint64_t s = 0;; ++s) {
        for (int e = 0; e < m; ++e) {
            const std::uint64_t be = std::uint64_t{1} << e;
            if (s & be)
                continue;
            Rational me = table[s | be] - table[s];
            if (me < 0)
                c.monotone = false;
            if (me <= 0)
                c.strictly_increasing = false;
            for (int f = 0; f < m; ++f) {
                const std::uint64_t bf = std::uint64_t{1} << f;
                if (f == e || (s & bf))
                    continue;
                if (table[(s | bf) | be] - table[s | bf] > me)
                    c.submodular = false;
            }
        }
        if (s == full)
            break;
    }

    // subadditive over all disjoint pairs
    for (std::uint64_t s = 0; s <= full && c.subadditive; ++s) {
        const std::uint64_t rest = full & ~s;
        // enumerate subsets of the complement
        std::uint64_t t = rest;
        while (true) {
            if (table[s | t] > table[s] + table[t]) {
                c.subadditive = false;
                break;
            }
            if (t == 0)
                break;
            t = (t - 1) & rest;
        }
        if (s == full)
            break;
    }
    if (m == 0)
        c.strictly_increasing = true;
    return c;
}

} // namespace

Valuation Valuation::additive(std::vector<Rational> per_good_values)
{
    if (static_cast<int>(per_good_values.size()) > GoodSet::max_goods)
        throw std::invalid_argument("too many goods for additive valuation");
    for (const Rational& x : per_good_values)
        if (x < 0)
            throw std::invalid_argument("negative value in additive valuation");
    Valuation v;
    v.kind_ = ValuationKind::Additive;
    v.m_ = static_cast<int>(per_good_values.size());
    v.values_ = std::move(per_good_values);
    v.flags_ = classify_additive(v.values_);
    return v;
}

Valuation Valuation::table(int m, std::vector<Rational> table_by_mask)
{
    if (m < 0 || m > max_table_goods)
        throw std::invalid_argument("table valuation requires 0 <= m <= 16");
    if (table_by_mask.size() != (std::size_t{1} << m))
        throw std::invalid_argument("table valuation must have an entry for every subset");
    if (table_by_mask[0] != 0)
        throw std::invalid_argument("table valuation must be normalized: v(empty) = 0");
    Valuation v;
    v.kind_ = ValuationKind::Table;
    v.m_ = m;
    v.table_ = std::move(table_by_mask);
    v.flags_ = classify_table(m, v.table_);
    if (!v.flags_.monotone)
        throw std::invalid_argument("non-monotone table valuation rejected");
    return v;
}

Rational Valuation::value(GoodSet s) const
{
    if (!s.subset_of(GoodSet::full(m_)))
        throw std::out_of_range("good index outside the valuation's ground set");
    if (kind_ == ValuationKind::Additive) {
        Rational sum = 0;
        for (std::uint64_t m = s.mask(); m; m &= m - 1)
            sum += values_[std::countr_zero(m)];
        return sum;
    }
    return table_[s.mask()];
}

ValuationClass check_valuation_class(const Valuation& v)
{
    return v.kind() == ValuationKind::Additive ? classify_additive(v.additive_values())
                                               : classify_table(v.good_count(), v.table_by_mask());
}

} // namespace fairdiv
