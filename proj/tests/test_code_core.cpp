#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace convex_codes;

namespace {

Code code2()
{
    return Code::parse(6, {"0", "12", "16", "23", "34", "45", "56", "123", "126", "156", "234", "345", "456"});
}

Code code3()
{
    return Code::parse(5, {"2345", "124", "135", "145", "14", "15", "24", "35", "45", "4", "5"});
}

} // namespace

TEST_CASE("codeword bit operations", "[codeword]")
{
    const Codeword a = Codeword::of({1, 3});
    CHECK(a.bits() == 0b101);
    CHECK(a.size() == 2);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.with(2) == Codeword::of({1, 2, 3}));
    CHECK(a.without(1) == Codeword::of({3}));
    CHECK(Codeword::of({3}).subset_of(a));
    CHECK(Codeword{}.subset_of(a));
    CHECK(a.max_neuron() == 3);
    CHECK(Codeword::full(4).bits() == 0b1111);
    CHECK(to_string(Codeword{}) == "0");
    CHECK(to_string(Codeword::of({1, 2, 3})) == "123");
    CHECK(to_string(Codeword::of({1, 10})) == "1,10");
    CHECK(parse_compact("1,10") == Codeword::of({1, 10}));
    CHECK_THROWS(Codeword::of({0}));
    CHECK_THROWS(Codeword::of({65}));
}

TEST_CASE("code keeps canonical order and distinguishes the empty word", "[code]")
{
    const Code c(3, {Codeword::of({2, 3}), Codeword{}, Codeword::of({1}), Codeword::of({2, 3})});
    REQUIRE(c.size() == 3);
    CHECK(c.words()[0] == Codeword{});
    CHECK(c.contains_empty());
    CHECK_FALSE(Code::parse(3, {"1"}).contains_empty());
    CHECK(c.without(Codeword{}).size() == 2);
    CHECK(to_string(c) == "{0, 1, 23}");
    CHECK_THROWS(Code(2, {Codeword::of({3})}));
}

TEST_CASE("maximal codewords", "[code]")
{
    CHECK(maximal_codewords(code3()) == Code::parse(5, {"2345", "124", "135", "145"}));
    CHECK(maximal_codewords(Code::parse(3, {"0"})) == Code::parse(3, {"0"}));
    CHECK(maximal_codewords(Code::parse(4, {"23", "14", "123"})) == Code::parse(4, {"14", "123"}));
}

TEST_CASE("simplicial complex of a code", "[code]")
{
    const auto k = simplicial_complex(Code::parse(3, {"0", "1", "2", "13", "23"}));
    CHECK(k.facets() == std::vector<Codeword>{Codeword::of({1, 3}), Codeword::of({2, 3})});
    CHECK(k.contains(Codeword::of({3})));
    CHECK(k.contains(Codeword{}));
    CHECK_FALSE(k.contains(Codeword::of({1, 2})));
    CHECK(simplicial_complex(Code::parse(2, {"0"})).facets() == std::vector<Codeword>{Codeword{}});
}

TEST_CASE("links", "[code]")
{
    const Code c = Code::parse(4, {"0", "1", "2", "3", "4", "123", "124"});
    CHECK(link(c, Codeword::of({1, 2})) == Code::parse(4, {"3", "4"}));
    CHECK(link(c, Codeword{}) == c);
}

TEST_CASE("simplicial violators", "[code]")
{
    CHECK(simplicial_violators(Code::parse(3, {"0", "1", "2", "13", "23"})) ==
          std::vector<Codeword>{Codeword::of({3})});
    const Code k = simplicial_complex(Code::parse(3, {"12", "3"})).as_code();
    CHECK(simplicial_violators(k).empty());
}

TEST_CASE("intersection completion", "[code]")
{
    CHECK(intersection_completion(Code::parse(4, {"123", "134"})) == Code::parse(4, {"13", "123", "134"}));
    CHECK(intersection_completion(Code::parse(2, {"1", "2"})) == Code::parse(2, {"0", "1", "2"}));
    const Code mc2 = maximal_codewords(code2());
    CHECK(intersection_completion(mc2).contains(Codeword{}));
    CHECK(intersection_completion(mc2).contains(Codeword::of({1})));
}

TEST_CASE("completeness flags and witnesses", "[code]")
{
    const auto f2 = classify_completeness(code2());
    CHECK_FALSE(f2.max_intersection_complete);
    CHECK_FALSE(f2.intersection_complete);
    REQUIRE(missing_max_intersection(code2()));
    CHECK(to_string(*missing_max_intersection(code2())) == "1 = 123∩156");

    CHECK_FALSE(classify_completeness(code3()).max_intersection_complete);
    CHECK(to_string(*missing_max_intersection(code3())) == "1 = 124∩135");

    const Code simplex = simplicial_complex(Code::parse(3, {"12", "23"})).as_code();
    CHECK(classify_completeness(simplex).intersection_complete);
    CHECK(classify_completeness(simplex).max_intersection_complete);
    CHECK_FALSE(missing_max_intersection(simplex));

    // ∅ is reported only when it is the sole missing intersection
    const auto m = missing_max_intersection(Code::parse(2, {"1", "2"}));
    REQUIRE(m);
    CHECK(to_string(*m) == "0 = 1∩2");
}

TEST_CASE("restriction and covering sets", "[code]")
{
    const Code c = Code::parse(4, {"23", "14", "123"});
    CHECK(covers(Codeword::of({1, 2}), c));
    CHECK(covers(Codeword::of({3, 4}), c));
    CHECK_FALSE(covers(Codeword::of({1}), c));
    CHECK(restrict(c, Codeword::of({1, 2})) == Code::parse(4, {"1", "2", "12"}));
    CHECK_FALSE(covers(Codeword::of({1, 2, 3, 4}), Code::parse(4, {"0", "1"})));
}

TEST_CASE("finite realization reproduces the code", "[abstract]")
{
    for (const Code& c : {code2(), code3(), Code::parse(3, {"0"}), Code::parse(3, {"1", "23"})}) {
        const AbstractCover a = finite_realization(c);
        CHECK(abstract_code(a) == c);
    }
}

TEST_CASE("union ambient drops the empty word", "[abstract]")
{
    AbstractCover a(2);
    a.add_point("p", Codeword::of({1}));
    a.add_point("q", Codeword{});
    CHECK(abstract_code(a) == Code::parse(2, {"0", "1"}));
    a.set_union_ambient();
    CHECK(abstract_code(a) == Code::parse(2, {"1"}));
}

TEST_CASE("property: library agrees with brute-force oracles", "[property]")
{
    CodeGenerator g(20240611);
    for (int t = 0; t < 300; ++t) {
        const int n = g.uniform(1, 7);
        const Code c = g.code(n, 10);
        INFO("code " << to_string(c));
        CHECK(intersection_completion(c) == oracle::completion(c));
        CHECK(simplicial_complex(c).as_code() == oracle::faces(c));
        CHECK(maximal_codewords(c) == oracle::maximal(c));
        CHECK(simplicial_violators(c) == oracle::violators(c));
        const bool mic = oracle::completion(oracle::maximal(c)).subset_of(c);
        CHECK(classify_completeness(c).max_intersection_complete == mic);
        CHECK(classify_completeness(c).intersection_complete == (oracle::completion(c) == c));
        const auto miss = missing_max_intersection(c);
        CHECK(miss.has_value() == !mic);
        if (miss) {
            CHECK_FALSE(c.contains(miss->target));
            std::uint64_t x = ~std::uint64_t{0};
            for (Codeword w : miss->members) {
                CHECK(maximal_codewords(c).contains(w));
                x &= w.bits();
            }
            CHECK(Codeword(x) == miss->target);
        }
        // C ⊆ Ĉ ⊆ faces of Δ(C)
        CHECK(c.subset_of(intersection_completion(c)));
        CHECK(intersection_completion(c).without(Codeword{}).subset_of(oracle::faces(c)));
    }
}
