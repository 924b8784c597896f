#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdiv/harness.hpp"
#include "fairdiv/instance.hpp"

#include <fstream>
#include <sstream>

using namespace fairdiv;

static std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(format_rational(Rational(4, 8)) == "1/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(parse_rational("0/9")) == "0");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("good sets")
{
    GoodSet s = GoodSet::of({1, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.lowest() == 1);
    CHECK(s.without(3) == GoodSet::of({1, 5}));
    CHECK((s | GoodSet::single(2)) == GoodSet::of({1, 2, 3, 5}));
    CHECK((s & GoodSet::of({3, 4})) == GoodSet::single(3));
    CHECK(s.minus(GoodSet::of({1, 5})) == GoodSet::single(3));
    CHECK(GoodSet::full(4).to_vector() == std::vector<int>{1, 2, 3, 4});
    CHECK(GoodSet::full(0).empty());
    CHECK_THROWS(GoodSet::of({1, 1}));
    CHECK_THROWS(GoodSet::single(0));
    CHECK_THROWS(GoodSet::single(63));
}

TEST_CASE("additive valuations")
{
    Valuation v = Valuation::additive({Rational(1, 2), Rational(1, 3), Rational(0)});
    CHECK(v.value(GoodSet{}) == 0);
    CHECK(v.value(GoodSet::of({1, 2})) == Rational(5, 6));
    CHECK(v.marginal(GoodSet::single(3), 1) == Rational(1, 2));
    CHECK(v.flags().additive);
    CHECK(v.flags().subadditive);
    CHECK(v.flags().submodular);
    CHECK(!v.flags().binary_additive);
    CHECK(!v.flags().strictly_increasing);
    CHECK_THROWS(Valuation::additive({Rational(-1)}));

    Valuation binary = Valuation::additive({1, 0, 1});
    CHECK(binary.flags().binary_additive);
}

TEST_CASE("table valuations and their classification")
{
    // v(S) = min(|S|, 2): submodular, monotone, not additive
    std::vector<Rational> capped = {0, 1, 1, 2, 1, 2, 2, 2};
    Valuation v = Valuation::table(3, capped);
    CHECK(v.value(GoodSet::of({1, 2, 3})) == 2);
    CHECK(!v.flags().additive);
    CHECK(v.flags().submodular);
    CHECK(v.flags().subadditive);

    // subadditive but not submodular: adding good 3 to {1,2} is worth more
    // than adding it to {1}
    std::vector<Rational> spiky = {0, 2, 2, 2, 2, 2, 2, 4};
    Valuation w = Valuation::table(3, spiky);
    CHECK(w.flags().subadditive);
    CHECK(!w.flags().submodular);

    CHECK_THROWS(Valuation::table(2, {1, 1, 1, 1}));    // v(empty) != 0
    CHECK_THROWS(Valuation::table(2, {0, 2, 2, 1}));    // not monotone
    CHECK_THROWS(Valuation::table(2, {0, 1}));          // wrong length
}

TEST_CASE("instance validation")
{
    CHECK_THROWS(Instance({}));
    // a good worth zero to every agent is rejected
    CHECK_THROWS(Instance({Valuation::additive({1, 0}), Valuation::additive({1, 0})}));
    CHECK_THROWS(Instance(
        {Valuation::additive({1, 1}), Valuation::additive({1, 1, 1})})); // mismatched m

    Instance inst({Valuation::additive({1, 2}), Valuation::additive({2, 1})});
    CHECK(inst.agent_count() == 2);
    CHECK(inst.good_count() == 2);
    CHECK(inst.all_goods() == GoodSet::of({1, 2}));
}

TEST_CASE("allocation validation")
{
    Instance inst({Valuation::additive({1, 1, 1}), Valuation::additive({1, 1, 1})});
    Allocation good({GoodSet::of({1, 3}), GoodSet::single(2)});
    CHECK_NOTHROW(good.validate(inst));
    CHECK(good.complement_of(1) == GoodSet::single(2));

    Allocation overlap({GoodSet::of({1, 2}), GoodSet::of({2, 3})});
    CHECK_THROWS(overlap.validate(inst));
    Allocation missing({GoodSet::single(1), GoodSet::single(2)});
    CHECK_THROWS(missing.validate(inst)); // good 3 unallocated
    Allocation wrong_n({GoodSet::of({1, 2, 3})});
    CHECK_THROWS(wrong_n.validate(inst));
}

TEST_CASE("instance JSON round-trips byte-identically")
{
    for (const InstanceCatalogEntry& entry : instance_catalog()) {
        std::string text = serialize_instance(entry.instance);
        Instance reparsed = parse_instance(text);
        CHECK(serialize_instance(reparsed) == text);
        CHECK(read_file(std::string(FIXTURES_DIR) + "/" + entry.id + ".json") == text);
        for (const auto& [name, alloc] : entry.allocations) {
            std::string alloc_text = serialize_allocation(alloc);
            CHECK(serialize_allocation(parse_allocation(alloc_text)) == alloc_text);
            CHECK(read_file(std::string(FIXTURES_DIR) + "/" + entry.id + "_" + name + ".json") ==
                  alloc_text);
        }
    }
}

TEST_CASE("instance JSON parse errors carry field paths")
{
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":1,"m":1})"), ParseError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"n":1,"m":2,"valuations":[{"type":"additive","values":["1"]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"n":2,"m":1,"valuations":[{"type":"additive","values":["1"]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"n":1,"m":1,"valuations":[{"type":"table","entries":{"1":"-1"}}]})"),
        ParseError);
    CHECK_THROWS_AS(parse_allocation(R"({"bundles":[[1],[1]]})"), ParseError);

    // table entries cover the schema: missing entries default to nothing and fail
    Instance table_inst = parse_instance(
        R"({"n":1,"m":2,"valuations":[{"type":"table",
            "entries":{"1":"1","2":"1","1,2":"2"}}]})");
    CHECK(table_inst.valuation(1).value(GoodSet::of({1, 2})) == 2);
    CHECK_THROWS_AS(parse_instance(
                        R"({"n":1,"m":2,"valuations":[{"type":"table",
            "entries":{"1":"1","1,2":"2"}}]})"),
                    ParseError);
}
