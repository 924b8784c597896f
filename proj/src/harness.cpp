#include "fairdiv/harness.hpp"

#include "fairdiv/algorithms.hpp"
#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace fairdiv {

const Allocation& InstanceCatalogEntry::allocation(const std::string& name) const
{
    for (const auto& [alloc_name, alloc] : allocations)
        if (alloc_name == name)
            return alloc;
    throw std::out_of_range("catalog entry " + id + " has no allocation \"" + name + "\"");
}

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

Valuation unit_additive(int m) { return Valuation::additive(std::vector<Rational>(m, rat(1))); }

InstanceCatalogEntry make_example1()
{
    const Rational big = 100; // any value > 1 preserves the instance's conclusions
    InstanceCatalogEntry entry{
        "example1",
        Instance({Valuation::additive({big, 1}), Valuation::additive({1, big})}),
        {},
        {},
        {}};
    entry.allocations.emplace_back("favorites", Allocation({GoodSet::of({1}), GoodSet::of({2})}));
    entry.allocations.emplace_back("swapped", Allocation({GoodSet::of({2}), GoodSet::of({1})}));
    entry.expected_verdicts = {
        {"swapped", Notion::MMS, 1, 0, true},
        {"swapped", Notion::MMA, 1, 1, false},
        {"swapped", Notion::MMA, 1, 2, false},
        {"swapped", Notion::MMA, 1, 0, false},
        {"favorites", Notion::MMA, 1, 0, true},
        {"favorites", Notion::EF, 1, 0, true},
    };
    entry.expected_searches = {{Notion::MMA, 1, true}};
    return entry;
}

InstanceCatalogEntry make_example2()
{
    Valuation tiered = Valuation::additive({rat(1), rat(2, 5), rat(2, 5), rat(2, 5), rat(1, 10),
                                            rat(1, 10), rat(1, 10), rat(1, 10)});
    Valuation head_only = Valuation::additive({1, 1, 1, 1, 0, 0, 0, 0});
    InstanceCatalogEntry entry{
        "example2", Instance({tiered, head_only, head_only, head_only}), {}, {}, {}};
    entry.allocations.emplace_back(
        "tail_to_agent1", Allocation({GoodSet::of({5, 6, 7, 8}), GoodSet::of({1, 2}),
                                      GoodSet::of({3}), GoodSet::of({4})}));
    entry.expected_verdicts = {
        {"tail_to_agent1", Notion::MMA, 1, 1, true},
        {"tail_to_agent1", Notion::MMS, 1, 1, false},
        {"tail_to_agent1", Notion::PROP, 1, 1, false},
    };
    return entry;
}

InstanceCatalogEntry make_example3(int n)
{
    InstanceCatalogEntry entry{"example3_n" + std::to_string(n), block_and_units_instance(n),
                               {}, {}, {}};
    entry.allocations.emplace_back("uneven", block_and_units_ef1_allocation(n));
    entry.expected_verdicts = {{"uneven", Notion::EF1, 1, 0, true}};
    return entry;
}

InstanceCatalogEntry make_example4()
{
    const Rational e = Rational(1, BigInt(1) << 10);   // 2^-10
    const Rational te = Rational(1, BigInt(1) << 100); // 2^-100
    const Rational e2 = e * e, e3 = e2 * e, e4 = e3 * e;
    const Rational h = rat(1, 2), q = rat(1, 4), o = rat(1, 8);

    // per-good values in good order; goods are the 14 positive matrix cells,
    // row-major (cells (1,3) and (3,1) carry no good)
    const std::vector<Rational> p = {
        rat(7, 8), e4, o - e4 - te,
        e3, rat(3, 4), e2 - e3, q - e2 - te,
        e - e4, h, h + e4 - e - te,
        o - e3, q - e, h + e3 - e2, o + e2 + e + 3 * te};
    const std::vector<Rational> q_vals = {
        rat(7, 8), e4, o - e4,
        e3, rat(3, 4), e2 - e3, q - e2,
        e - e4, h, h + e4 - e,
        o - e3 - te, q - e - te, h + e3 - e2 - te, o + e2 + e + 3 * te};

    Valuation vp = Valuation::additive(p);
    Valuation vq = Valuation::additive(q_vals);
    InstanceCatalogEntry entry{"example4", Instance({vp, vp, vq, vq}), {}, {}, {}};
    entry.allocations.emplace_back(
        "rows", Allocation({GoodSet::of({1, 2, 3}), GoodSet::of({4, 5, 6, 7}),
                            GoodSet::of({8, 9, 10}), GoodSet::of({11, 12, 13, 14})}));
    entry.expected_verdicts = {
        {"rows", Notion::MMAX, 1, 0, true},
        {"rows", Notion::MMA1, 1, 0, true},
        {"rows", Notion::MMS, 1, 0, false},
    };
    return entry;
}

InstanceCatalogEntry make_example5()
{
    Valuation v = Valuation::additive(
        {rat(1), rat(1), rat(3, 5), rat(2, 5), rat(1, 5), rat(1, 5), rat(1, 5)});
    InstanceCatalogEntry entry{"example5", Instance({v, v, v}), {}, {}, {}};
    entry.allocations.emplace_back(
        "fixture",
        Allocation({GoodSet::of({1}), GoodSet::of({2, 4}), GoodSet::of({3, 5, 6, 7})}));
    entry.expected_verdicts = {
        {"fixture", Notion::EFX, 1, 1, true},
        {"fixture", Notion::MMAX, 1, 1, false},
    };
    return entry;
}

InstanceCatalogEntry make_lemma3(int n, int k)
{
    const int m = k * n - 1;
    InstanceCatalogEntry entry{
        "lemma3_n" + std::to_string(n) + "_k" + std::to_string(k),
        Instance(std::vector<Valuation>(static_cast<std::size_t>(n), unit_additive(m))),
        {},
        {},
        {}};
    entry.expected_searches = {
        {Notion::MMA, 1, false},
        {Notion::MMA1, 1, true},
        {Notion::MMAX, 1, true},
    };
    return entry;
}

InstanceCatalogEntry make_intro_footnote()
{
    InstanceCatalogEntry entry{
        "intro_footnote",
        Instance(std::vector<Valuation>(3, unit_additive(2))),
        {},
        {},
        {}};
    entry.expected_searches = {
        {Notion::EF, 1, false},
        {Notion::PROP, 1, false},
        {Notion::MMA1, 1, true},
    };
    return entry;
}

// ---- randomness ------------------------------------------------------

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0)
{
    return std::mt19937_64(splitmix(splitmix(seed ^ (index * 0x100000001b3ULL)) ^ salt));
}

int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Rational> random_additive_values(std::mt19937_64& rng, int m, int max_denominator,
                                             bool binary)
{
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        if (binary)
            values.push_back(rat(uniform_int(rng, 0, 1)));
        else
            values.push_back(
                Rational(uniform_int(rng, 0, 24), uniform_int(rng, 1, max_denominator)));
    }
    return values;
}

// coverage function: union of per-good element sets, weighted
std::vector<Rational> random_coverage_table(std::mt19937_64& rng, int m)
{
    const int universe = m + 3;
    std::vector<std::uint32_t> elements(static_cast<std::size_t>(m), 0);
    for (auto& set : elements) {
        for (int u = 0; u < universe; ++u)
            if (uniform_int(rng, 0, 2) == 0)
                set |= std::uint32_t{1} << u;
        if (set == 0)
            set = std::uint32_t{1} << uniform_int(rng, 0, universe - 1);
    }
    std::vector<Rational> weights;
    for (int u = 0; u < universe; ++u)
        weights.push_back(rat(uniform_int(rng, 1, 4)));

    std::vector<Rational> table(std::size_t{1} << m, 0);
    for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
        std::uint32_t covered = 0;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            covered |= elements[static_cast<std::size_t>(std::countr_zero(rest))];
        Rational total = 0;
        for (int u = 0; u < universe; ++u)
            if ((covered >> u) & 1)
                total += weights[u];
        table[mask] = total;
    }
    return table;
}

// monotone repair of a random table followed by its partition closure:
// v(S) = min over partitions of S of the summed raw values. The closure of a
// monotone function is monotone, subadditive, and fixes singletons.
std::vector<Rational> random_subadditive_table(std::mt19937_64& rng, int m)
{
    std::vector<Rational> raw(std::size_t{1} << m, 0);
    for (std::uint64_t mask = 1; mask < raw.size(); ++mask)
        raw[mask] = rat(uniform_int(rng, 1, 4 * m));
    // monotone repair, by ascending cardinality
    std::vector<std::uint64_t> by_size(raw.size() - 1);
    for (std::uint64_t mask = 1; mask < raw.size(); ++mask)
        by_size[mask - 1] = mask;
    std::sort(by_size.begin(), by_size.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (std::uint64_t mask : by_size)
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            raw[mask] = std::max(raw[mask], raw[mask & ~(rest & (~rest + 1))]);
    // partition closure via binary splits that keep the lowest bit left
    std::vector<Rational> closed = raw;
    for (std::uint64_t mask : by_size) {
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t rest = mask & ~low;
        for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint64_t left = low | sub;
            const std::uint64_t right = mask & ~left;
            if (right != 0)
                closed[mask] = std::min(closed[mask], Rational(closed[left] + closed[right]));
            if (sub == 0)
                break;
        }
    }
    return closed;
}

Valuation random_valuation(std::mt19937_64& rng, const TrialConfig& cfg)
{
    switch (cfg.kind) {
    case ValuationClassKind::Additive:
        return Valuation::additive(random_additive_values(rng, cfg.m, cfg.max_denominator, false));
    case ValuationClassKind::BinaryAdditive:
        return Valuation::additive(random_additive_values(rng, cfg.m, cfg.max_denominator, true));
    case ValuationClassKind::SubmodularTable:
        return Valuation::table(cfg.m, random_coverage_table(rng, cfg.m));
    case ValuationClassKind::SubadditiveTable:
        return Valuation::table(cfg.m, random_subadditive_table(rng, cfg.m));
    case ValuationClassKind::StrictlyIncreasingSubadditiveTable: {
        std::vector<Rational> table = random_subadditive_table(rng, cfg.m);
        std::vector<Rational> extra;
        for (int j = 0; j < cfg.m; ++j)
            extra.push_back(rat(uniform_int(rng, 1, 3)));
        for (std::uint64_t mask = 1; mask < table.size(); ++mask)
            for (std::uint64_t rest = mask; rest; rest &= rest - 1)
                table[mask] += extra[static_cast<std::size_t>(std::countr_zero(rest))];
        return Valuation::table(cfg.m, std::move(table));
    }
    }
    throw std::logic_error("unreachable");
}

bool class_matches(const Valuation& v, ValuationClassKind kind)
{
    const ValuationClass& f = v.flags();
    switch (kind) {
    case ValuationClassKind::Additive: return f.additive;
    case ValuationClassKind::BinaryAdditive: return f.binary_additive;
    case ValuationClassKind::SubmodularTable: return f.submodular;
    case ValuationClassKind::SubadditiveTable: return f.subadditive;
    case ValuationClassKind::StrictlyIncreasingSubadditiveTable:
        return f.subadditive && f.strictly_increasing;
    }
    return false;
}

// visit(bundles) returning true stops the enumeration early
template <typename F> bool for_each_allocation(int n, int m, F&& visit)
{
    std::vector<int> owner(static_cast<std::size_t>(m), 0);
    std::vector<GoodSet> bundles(static_cast<std::size_t>(n));
    while (true) {
        for (auto& b : bundles)
            b = GoodSet{};
        for (int j = 0; j < m; ++j)
            bundles[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)])].add(j + 1);
        if (visit(bundles))
            return true;
        std::size_t pos = 0;
        while (pos < owner.size() && owner[pos] == n - 1)
            owner[pos++] = 0;
        if (pos == owner.size())
            return false;
        ++owner[pos];
    }
}

std::uint64_t allocation_count(int n, int m, std::uint64_t cap)
{
    std::uint64_t count = 1;
    for (int j = 0; j < m; ++j) {
        if (count > cap / static_cast<std::uint64_t>(n))
            return cap + 1;
        count *= static_cast<std::uint64_t>(n);
    }
    return count;
}

} // namespace

const std::vector<InstanceCatalogEntry>& instance_catalog()
{
    static const std::vector<InstanceCatalogEntry> catalog = [] {
        std::vector<InstanceCatalogEntry> entries;
        entries.push_back(make_example1());
        entries.push_back(make_example2());
        entries.push_back(make_example3(2));
        entries.push_back(make_example3(3));
        entries.push_back(make_example4());
        entries.push_back(make_example5());
        entries.push_back(make_lemma3(2, 2));
        entries.push_back(make_lemma3(3, 2));
        entries.push_back(make_intro_footnote());
        return entries;
    }();
    return catalog;
}

const InstanceCatalogEntry& catalog_entry(const std::string& id)
{
    for (const InstanceCatalogEntry& entry : instance_catalog())
        if (entry.id == id)
            return entry;
    throw std::out_of_range("no catalog entry with id \"" + id + "\"");
}

Instance block_and_units_instance(int n)
{
    if (n < 1)
        throw std::invalid_argument("block-and-units parameter must be >= 1");
    std::vector<Rational> values;
    for (int j = 1; j <= n; ++j)
        values.push_back(rat(n));
    for (int j = n + 1; j <= 2 * n + 1; ++j)
        values.push_back(rat(1));
    Valuation v = Valuation::additive(std::move(values));
    return Instance(std::vector<Valuation>(static_cast<std::size_t>(n + 1), v));
}

Allocation block_and_units_ef1_allocation(int n)
{
    std::vector<GoodSet> bundles;
    for (int i = 1; i <= n; ++i)
        bundles.push_back(GoodSet::of({i, n + i}));
    bundles.push_back(GoodSet::of({2 * n + 1}));
    return Allocation(std::move(bundles));
}

ValuationClassKind valuation_class_from_string(const std::string& name)
{
    if (name == "additive") return ValuationClassKind::Additive;
    if (name == "binary-additive") return ValuationClassKind::BinaryAdditive;
    if (name == "subadditive-table") return ValuationClassKind::SubadditiveTable;
    if (name == "submodular-table") return ValuationClassKind::SubmodularTable;
    if (name == "strictly-increasing-subadditive-table")
        return ValuationClassKind::StrictlyIncreasingSubadditiveTable;
    throw std::invalid_argument("unknown valuation class: " + name);
}

Instance generate_instance(const TrialConfig& cfg, int index)
{
    if (cfg.n < 1 || cfg.m < 0)
        throw std::invalid_argument("bad trial config");
    const bool table_kind = cfg.kind != ValuationClassKind::Additive &&
                            cfg.kind != ValuationClassKind::BinaryAdditive;
    if (table_kind && cfg.m > Valuation::max_table_goods)
        throw std::invalid_argument("table classes require m <= 16");

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::mt19937_64 rng = rng_for(cfg.seed, static_cast<std::uint64_t>(index),
                                      static_cast<std::uint64_t>(attempt));
        try {
            std::vector<Valuation> valuations;
            bool ok = true;
            for (int i = 0; i < cfg.n && ok; ++i) {
                Valuation v = random_valuation(rng, cfg);
                ok = class_matches(v, cfg.kind);
                if (ok)
                    valuations.push_back(std::move(v));
            }
            if (ok)
                return Instance(std::move(valuations));
        } catch (const std::invalid_argument&) {
            // worthless good or degenerate valuation; resample
        }
    }
    throw std::runtime_error("instance generation failed to converge");
}

Allocation sample_allocation(const Instance& inst, std::uint64_t seed)
{
    std::mt19937_64 rng = rng_for(seed, 0x51ceb00daULL);
    std::vector<GoodSet> bundles(static_cast<std::size_t>(inst.agent_count()));
    for (int j = 1; j <= inst.good_count(); ++j)
        bundles[static_cast<std::size_t>(uniform_int(rng, 0, inst.agent_count() - 1))].add(j);
    return Allocation(std::move(bundles));
}

ImplicationReport verify_implication(Notion premise, const Rational& premise_alpha,
                                     Notion conclusion, const Rational& conclusion_alpha,
                                     const TrialConfig& cfg, int max_checked_per_trial,
                                     std::uint64_t enum_cap, const SearchBudget& budget)
{
    ImplicationReport report;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Instance inst = generate_instance(cfg, trial);
        MmsCache cache;
        CheckOptions options{budget, &cache};
        int checked = 0;

        auto consider = [&](const std::vector<GoodSet>& bundles) {
            Allocation alloc(bundles);
            FairnessReport premise_report =
                check_fairness(inst, alloc, premise, premise_alpha, options);
            if (!premise_report.satisfied)
                return false;
            ++report.premise_hits;
            ++checked;
            FairnessReport conclusion_report =
                check_fairness(inst, alloc, conclusion, conclusion_alpha, options);
            if (!conclusion_report.satisfied) {
                report.counterexample = Counterexample{inst, alloc, std::move(premise_report),
                                                       std::move(conclusion_report), trial};
                return true;
            }
            return checked >= max_checked_per_trial;
        };

        if (allocation_count(inst.agent_count(), inst.good_count(), enum_cap) <= enum_cap) {
            for_each_allocation(inst.agent_count(), inst.good_count(), consider);
        } else {
            report.sampled = true;
            for (int attempt = 0; attempt < 200 && checked < max_checked_per_trial; ++attempt) {
                Allocation alloc = sample_allocation(
                    inst, splitmix(cfg.seed ^ (static_cast<std::uint64_t>(trial) << 20 ^
                                               static_cast<std::uint64_t>(attempt))));
                if (consider(alloc.bundles()))
                    break;
            }
        }
        ++report.trials;
        if (report.counterexample) {
            report.passed = false;
            return report;
        }
    }
    report.passed = true;
    return report;
}

std::optional<Counterexample> check_non_implication(const Instance& inst, const Allocation& alloc,
                                                    Notion premise, const Rational& premise_alpha,
                                                    Notion conclusion,
                                                    const Rational& conclusion_alpha,
                                                    const SearchBudget& budget)
{
    MmsCache cache;
    CheckOptions options{budget, &cache};
    FairnessReport premise_report = check_fairness(inst, alloc, premise, premise_alpha, options);
    FairnessReport conclusion_report =
        check_fairness(inst, alloc, conclusion, conclusion_alpha, options);
    if (premise_report.satisfied && !conclusion_report.satisfied)
        return Counterexample{inst, alloc, std::move(premise_report),
                              std::move(conclusion_report), 0};
    return std::nullopt;
}

EgalitarianReport verify_egalitarian_bounds(int n, const SearchBudget& budget)
{
    Instance inst = block_and_units_instance(n);
    MmsCache cache;
    CheckOptions options{budget, &cache};

    EgalitarianReport report;
    report.n = n;
    report.mma1_bound = rat((n + 1) / 2); // ceil(n/2)
    report.mmax_bound = rat(n);

    for_each_allocation(inst.agent_count(), inst.good_count(),
                        [&](const std::vector<GoodSet>& bundles) {
                            Allocation alloc(bundles);
                            Rational worst = inst.valuation(1).value(alloc.bundle(1));
                            for (int i = 2; i <= inst.agent_count(); ++i)
                                worst = std::min(worst,
                                                 inst.valuation(i).value(alloc.bundle(i)));
                            if (check_fairness(inst, alloc, Notion::MMA1, 1, options).satisfied) {
                                ++report.mma1_count;
                                if (!report.mma1_min_value || worst < *report.mma1_min_value)
                                    report.mma1_min_value = worst;
                            }
                            if (check_fairness(inst, alloc, Notion::MMAX, 1, options).satisfied) {
                                ++report.mmax_count;
                                if (!report.mmax_min_value || worst < *report.mmax_min_value)
                                    report.mmax_min_value = worst;
                            }
                            return false;
                        });

    report.mma1_bound_holds =
        report.mma1_count > 0 && *report.mma1_min_value >= report.mma1_bound;
    report.mmax_bound_holds =
        report.mmax_count > 0 && *report.mmax_min_value >= report.mmax_bound;

    Allocation fixture = block_and_units_ef1_allocation(n);
    report.ef1_fixture_min_value = inst.valuation(1).value(fixture.bundle(1));
    for (int i = 2; i <= inst.agent_count(); ++i)
        report.ef1_fixture_min_value =
            std::min(report.ef1_fixture_min_value, inst.valuation(i).value(fixture.bundle(i)));
    return report;
}

const std::vector<ImplicationClaim>& standard_implication_claims()
{
    static const std::vector<ImplicationClaim> claims = {
        {"mma_implies_mms_ba", Notion::MMA, 1, Notion::MMS, 1,
         ValuationClassKind::BinaryAdditive},
        {"ef_implies_eef_additive", Notion::EF, 1, Notion::EEF, 1, ValuationClassKind::Additive},
        {"eef_implies_prop_additive", Notion::EEF, 1, Notion::PROP, 1,
         ValuationClassKind::Additive},
        {"prop_implies_mma_additive", Notion::PROP, 1, Notion::MMA, 1,
         ValuationClassKind::Additive},
        {"mms_implies_mma1_sm", Notion::MMS, 1, Notion::MMA1, 1,
         ValuationClassKind::SubmodularTable},
        {"half_mms_implies_half_mma1_sm", Notion::MMS, {1, 2}, Notion::MMA1, {1, 2},
         ValuationClassKind::SubmodularTable},
        {"mma1_implies_mms_ba", Notion::MMA1, 1, Notion::MMS, 1,
         ValuationClassKind::BinaryAdditive},
        {"efx_implies_mmax_ba", Notion::EFX, 1, Notion::MMAX, 1,
         ValuationClassKind::BinaryAdditive},
        {"ef_implies_efx_additive", Notion::EF, 1, Notion::EFX, 1, ValuationClassKind::Additive},
        {"efx_implies_ef1_sa", Notion::EFX, 1, Notion::EF1, 1,
         ValuationClassKind::SubadditiveTable},
        {"mma_implies_mmax_additive", Notion::MMA, 1, Notion::MMAX, 1,
         ValuationClassKind::Additive},
        {"mmax_implies_mma1_sa", Notion::MMAX, 1, Notion::MMA1, 1,
         ValuationClassKind::SubadditiveTable},
    };
    return claims;
}

AlphaMonotonicityReport verify_alpha_monotonicity(const TrialConfig& cfg,
                                                  const SearchBudget& budget)
{
    static const std::vector<Notion> notions = {Notion::EF,  Notion::EF1, Notion::EFX,
                                                Notion::PROP, Notion::MMS, Notion::MMA,
                                                Notion::MMA1, Notion::MMAX};
    const std::vector<Rational> alphas = {1, {7, 8}, {1, 2}, {1, 4}, 0}; // descending

    AlphaMonotonicityReport report;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Instance inst = generate_instance(cfg, trial);
        Allocation alloc =
            sample_allocation(inst, splitmix(cfg.seed + static_cast<std::uint64_t>(trial)));
        MmsCache cache;
        CheckOptions options{budget, &cache};
        for (Notion notion : notions) {
            bool satisfied_at_larger = false;
            for (const Rational& alpha : alphas) {
                bool satisfied = check_fairness(inst, alloc, notion, alpha, options).satisfied;
                if (satisfied_at_larger && !satisfied) {
                    report.violation = notion_to_string(notion) + " lost at smaller alpha, trial " +
                                       std::to_string(trial);
                    return report;
                }
                satisfied_at_larger = satisfied_at_larger || satisfied;
            }
        }
        ++report.trials;
    }
    report.passed = true;
    return report;
}

AlgorithmTrialReport verify_three_agent_algorithm(const TrialConfig& cfg,
                                                  const SearchBudget& budget)
{
    AlgorithmTrialReport report;
    TrialConfig local = cfg;
    local.n = 3;
    local.kind = ValuationClassKind::Additive;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Instance inst = generate_instance(local, trial);
        Allocation alloc = allocate_three_agents(inst, budget);
        alloc.validate(inst);
        MmsCache cache;
        CheckOptions options{budget, &cache};
        if (!check_fairness(inst, alloc, Notion::MMA1, 1, options).satisfied) {
            report.failure = "divide-and-choose output not MMA1 on trial " + std::to_string(trial);
            return report;
        }
        ++report.trials;
    }
    report.passed = true;
    return report;
}

namespace {

// Replays a round trace: structural invariants plus, for additive runs, the
// two inequalities behind the 1/2-MMA guarantee, derived from each bundle's
// last-received good.
std::string replay_trace(const Instance& inst, const MatchingResult& result)
{
    const int n = inst.agent_count();
    std::vector<GoodSet> bundles(static_cast<std::size_t>(n));
    std::vector<int> last_good(static_cast<std::size_t>(n), 0);

    if (static_cast<int>(result.trace.size()) > inst.good_count())
        return "more rounds than goods";
    for (const MatchingRound& round : result.trace) {
        if (round.unenvied.empty())
            return "round with empty unenvied set";
        if (round.matching.empty())
            return "round allocated no goods";
        for (auto [agent, good] : round.matching) {
            if (std::find(round.unenvied.begin(), round.unenvied.end(), agent) ==
                round.unenvied.end())
                return "good matched to an envied agent";
            bundles[static_cast<std::size_t>(agent - 1)].add(good);
            last_good[static_cast<std::size_t>(agent - 1)] = good;
        }
        for (const std::vector<int>& cycle : round.rotations) {
            GoodSet first_bundle = bundles[static_cast<std::size_t>(cycle.front() - 1)];
            int first_last = last_good[static_cast<std::size_t>(cycle.front() - 1)];
            for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
                bundles[static_cast<std::size_t>(cycle[k] - 1)] =
                    bundles[static_cast<std::size_t>(cycle[k + 1] - 1)];
                last_good[static_cast<std::size_t>(cycle[k] - 1)] =
                    last_good[static_cast<std::size_t>(cycle[k + 1] - 1)];
            }
            bundles[static_cast<std::size_t>(cycle.back() - 1)] = first_bundle;
            last_good[static_cast<std::size_t>(cycle.back() - 1)] = first_last;
        }
    }
    if (Allocation(bundles) != result.allocation)
        return "trace replay does not reproduce the allocation";

    bool additive = true;
    for (const Valuation& v : inst.valuations())
        additive = additive && v.flags().additive;
    if (!additive)
        return "";
    for (int i = 1; i <= n; ++i) {
        const Valuation& v = inst.valuation(i);
        const Rational own = v.value(result.allocation.bundle(i));
        for (int j = 1; j <= n; ++j) {
            if (j == i || result.allocation.bundle(j).size() <= 1)
                continue;
            const int e = last_good[static_cast<std::size_t>(j - 1)];
            if (own < v.value(result.allocation.bundle(j).without(e)))
                return "own value below envied bundle minus its last good";
            if (own < v.value_of_good(e))
                return "own value below another bundle's last good";
        }
    }
    return "";
}

} // namespace

AlgorithmTrialReport verify_matching_algorithm(const TrialConfig& cfg, const SearchBudget& budget)
{
    AlgorithmTrialReport report;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Instance inst = generate_instance(cfg, trial);
        MatchingResult result = allocate_matching(inst);
        result.allocation.validate(inst);
        MmsCache cache;
        CheckOptions options{budget, &cache};

        auto fail = [&](const std::string& what) {
            report.failure = what + " on trial " + std::to_string(trial);
            return report;
        };

        if (!check_fairness(inst, result.allocation, Notion::EF1, 1, options).satisfied)
            return fail("matching output not EF1");
        if (!check_fairness(inst, result.allocation, Notion::EFX, {1, 2}, options).satisfied)
            return fail("matching output not 1/2-EFX");

        int multi = 0;
        for (const GoodSet& b : result.allocation.bundles())
            if (b.size() > 1)
                ++multi;
        bool additive = true;
        for (const Valuation& v : inst.valuations())
            additive = additive && v.flags().additive;
        GuaranteeClass expected =
            multi >= 2 ? (additive ? GuaranteeClass::MmaHalf : GuaranteeClass::EfHalf)
            : multi == 1 ? (additive ? GuaranteeClass::MmaxHalf : GuaranteeClass::EfxHalf)
                         : (additive ? GuaranteeClass::MmaxExact : GuaranteeClass::EfxExact);
        if (result.guarantee != expected)
            return fail("guarantee class mismatch");

        if (additive) {
            FairnessReport half_mma =
                check_fairness(inst, result.allocation, Notion::MMA, {1, 2}, options);
            FairnessReport mmax =
                check_fairness(inst, result.allocation, Notion::MMAX, 1, options);
            for (int i = 0; i < inst.agent_count(); ++i)
                if (!half_mma.agents[static_cast<std::size_t>(i)].satisfied &&
                    !mmax.agents[static_cast<std::size_t>(i)].satisfied)
                    return fail("agent " + std::to_string(i + 1) +
                                " neither 1/2-MMA nor MMAX");
        }

        std::string trace_error = replay_trace(inst, result);
        if (!trace_error.empty())
            return fail(trace_error);
        ++report.trials;
    }
    report.passed = true;
    return report;
}

AlgorithmTrialReport verify_solver_crosscheck(const TrialConfig& cfg, const SearchBudget& budget)
{
    AlgorithmTrialReport report;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Instance inst = generate_instance(cfg, trial);
        std::mt19937_64 rng = rng_for(cfg.seed, static_cast<std::uint64_t>(trial), 0xabcdULL);
        const int k = uniform_int(rng, 2, 4);
        const int max_size = std::min(inst.good_count(), k == 2 ? 12 : k == 3 ? 10 : 8);
        const int size = uniform_int(rng, 0, max_size);
        std::vector<int> goods = inst.all_goods().to_vector();
        std::shuffle(goods.begin(), goods.end(), rng);
        GoodSet subset;
        for (int j = 0; j < size; ++j)
            subset.add(goods[static_cast<std::size_t>(j)]);
        const Valuation& v = inst.valuation(uniform_int(rng, 1, inst.agent_count()));

        auto fail = [&](const std::string& what) {
            report.failure = what + " on trial " + std::to_string(trial);
            return report;
        };

        auto [mms, mms_parts] = mms_value(v, subset, k, budget);
        auto [oracle_mms, oracle_mms_parts] = brute_mms_value(v, subset, k);
        if (mms != oracle_mms)
            return fail("mms disagrees with oracle");
        PartitionResult lex = leximin_partition(v, subset, k, budget);
        PartitionResult oracle_lex = brute_leximin_partition(v, subset, k);
        if (lex.value_vector != oracle_lex.value_vector || lex.parts != oracle_lex.parts)
            return fail("leximin disagrees with oracle");
        if (lex.value_vector.front() != mms)
            return fail("leximin floor differs from mms");
        auto [mini, mini_parts] = minimax_partition(v, subset, k, budget);
        auto [oracle_mini, oracle_mini_parts] = brute_minimax_partition(v, subset, k);
        if (mini != oracle_mini)
            return fail("minimax disagrees with oracle");
        ++report.trials;
    }
    report.passed = true;
    return report;
}

} // namespace fairdiv
