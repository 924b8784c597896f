#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdiv/fairness.hpp"
#include "fairdiv/harness.hpp"
#include "fairdiv/search.hpp"

using namespace fairdiv;

namespace {

FairnessReport check(const Instance& inst, const Allocation& alloc, Notion notion,
                     Rational alpha = 1)
{
    MmsCache cache;
    return check_fairness(inst, alloc, notion, alpha, CheckOptions{{}, &cache});
}

} // namespace

TEST_CASE("envy-freeness and its one-good relaxations")
{
    Instance inst({Valuation::additive({4, 3, 1}), Valuation::additive({1, 3, 4})});
    Allocation alloc({GoodSet::of({1}), GoodSet::of({2, 3})});

    FairnessReport ef = check(inst, alloc, Notion::EF);
    CHECK(ef.satisfied);

    // give everything to agent 2: agent 1 envies, EF1 needs the best removal
    Allocation lopsided({GoodSet{}, GoodSet::full(3)});
    CHECK(!check(inst, lopsided, Notion::EF).satisfied);
    FairnessReport ef1 = check(inst, lopsided, Notion::EF1);
    CHECK(!ef1.satisfied); // v1({2,3}) = 4 > 0 even after removing good 2
    CHECK(ef1.agents[0].witness.has_value());
    CHECK(*ef1.agents[0].witness->other_agent == 2);

    Allocation near({GoodSet::single(2), GoodSet::of({1, 3})});
    // agent 1: v({1,3}) = 5 > 3, removing good 1 leaves 1 <= 3: EF1 holds
    CHECK(check(inst, near, Notion::EF1).satisfied);
    // EFX must survive removing the *least* valued good: 5 - 1 = 4 > 3
    CHECK(!check(inst, near, Notion::EFX).satisfied);
}

TEST_CASE("proportionality and approximation factors")
{
    Instance inst({Valuation::additive({3, 1}), Valuation::additive({3, 1})});
    Allocation alloc({GoodSet::single(1), GoodSet::single(2)});
    // 3 >= 2 for agent 1, but 1 < 2 for agent 2
    CHECK(check(inst, alloc, Notion::PROP).agents[0].satisfied);
    CHECK(!check(inst, alloc, Notion::PROP).agents[1].satisfied);
    CHECK(!check(inst, alloc, Notion::PROP).satisfied);
    CHECK(check(inst, alloc, Notion::PROP, Rational(1, 2)).satisfied); // 1 >= 2 * 1/2
    CHECK_THROWS(check(inst, alloc, Notion::PROP, Rational(3, 2)));
    CHECK_THROWS(check(inst, alloc, Notion::PROP, Rational(-1)));
}

TEST_CASE("maximin share thresholds")
{
    const InstanceCatalogEntry& entry = catalog_entry("example2");
    FairnessReport mms = check(entry.instance, entry.allocation("tail_to_agent1"), Notion::MMS);
    CHECK(!mms.agents[0].satisfied);
    CHECK(*mms.agents[0].threshold == Rational(1, 2));
    CHECK(mms.agents[0].own_value == Rational(2, 5));
    // the witness partition achieves the threshold
    REQUIRE(mms.agents[0].witness.has_value());
    CHECK(mms.agents[0].witness->partition->value_vector.front() == Rational(1, 2));
}

TEST_CASE("epistemic envy-freeness via the minimax partition")
{
    // identical valuations: EEF iff own value >= minimax over the complement
    Valuation v = Valuation::additive({2, 2, 1, 1});
    Instance inst({v, v, v});
    Allocation alloc({GoodSet::of({1}), GoodSet::of({2}), GoodSet::of({3, 4})});
    CHECK(check(inst, alloc, Notion::EEF).satisfied);
    Allocation skewed({GoodSet::of({3}), GoodSet::of({1, 2}), GoodSet::of({4})});
    FairnessReport eef = check(inst, skewed, Notion::EEF);
    CHECK(!eef.satisfied); // agent 1 holds 1; complement splits no better than (2,3)
    CHECK_THROWS(check(inst, alloc, Notion::EEF, Rational(1, 2))); // only exact
}

TEST_CASE("maximin-aware family")
{
    const InstanceCatalogEntry& ex1 = catalog_entry("example1");
    FairnessReport mma = check(ex1.instance, ex1.allocation("swapped"), Notion::MMA);
    CHECK(!mma.satisfied);
    // each agent's MMA threshold is the full value of the single good held
    // by the other agent
    CHECK(*mma.agents[0].threshold == Rational(100));
    CHECK(mma.agents[0].own_value == Rational(1));
    CHECK(check(ex1.instance, ex1.allocation("favorites"), Notion::MMA).satisfied);

    const InstanceCatalogEntry& ex5 = catalog_entry("example5");
    FairnessReport mmax = check(ex5.instance, ex5.allocation("fixture"), Notion::MMAX);
    CHECK(!mmax.agents[0].satisfied);
    CHECK(*mmax.agents[0].witness->good == 7);
    CHECK(*mmax.agents[0].threshold == Rational(6, 5));
    FairnessReport mma1 = check(ex5.instance, ex5.allocation("fixture"), Notion::MMA1);
    CHECK(mma1.agents[0].satisfied); // removing good 2 drops the threshold to 1
}

TEST_CASE("degenerate shapes")
{
    // single agent: everything holds
    Instance solo({Valuation::additive({1, 2})});
    Allocation all({GoodSet::full(2)});
    for (Notion notion : {Notion::EF, Notion::EF1, Notion::EFX, Notion::PROP, Notion::MMS,
                          Notion::EEF, Notion::MMA, Notion::MMA1, Notion::MMAX})
        CHECK(check(solo, all, notion).satisfied);

    // an agent holding everything has an empty complement: MMA family trivially holds
    Instance pair({Valuation::additive({1}), Valuation::additive({1})});
    Allocation hog({GoodSet::single(1), GoodSet{}});
    CHECK(check(pair, hog, Notion::MMA).agents[0].satisfied);
    CHECK(check(pair, hog, Notion::MMA1).agents[0].satisfied);
    CHECK(!check(pair, hog, Notion::MMA).agents[1].satisfied);
}

TEST_CASE("notion names round-trip")
{
    for (Notion notion : {Notion::EF, Notion::EF1, Notion::EFX, Notion::PROP, Notion::MMS,
                          Notion::EEF, Notion::MMA, Notion::MMA1, Notion::MMAX})
        CHECK(notion_from_string(notion_to_string(notion)) == notion);
    CHECK_THROWS(notion_from_string("nope"));
}

TEST_CASE("exhaustive search returns verified witnesses")
{
    const InstanceCatalogEntry& entry = catalog_entry("lemma3_n2_k2");
    MmsCache cache;
    SearchOutcome no_mma = exhaustive_allocation_search(
        entry.instance, SearchPredicate::for_notion(Notion::MMA), {}, &cache);
    CHECK(!no_mma.exists);
    CHECK(!no_mma.witness.has_value());

    SearchOutcome mma1 = exhaustive_allocation_search(
        entry.instance, SearchPredicate::for_notion(Notion::MMA1), {}, &cache);
    REQUIRE(mma1.exists);
    CHECK(check(entry.instance, *mma1.witness, Notion::MMA1).satisfied);

    // threshold search: 3 unit goods, 2 agents, nobody can guarantee 2 each
    SearchOutcome floor2 = exhaustive_allocation_search(
        entry.instance, SearchPredicate::min_value(2), {}, &cache);
    CHECK(!floor2.exists);
    SearchOutcome floor1 = exhaustive_allocation_search(
        entry.instance, SearchPredicate::min_value(1), {}, &cache);
    CHECK(floor1.exists);
}
