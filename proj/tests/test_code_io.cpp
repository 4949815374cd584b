#include <filesystem>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "convex_codes/convex_codes.hpp"

using namespace convex_codes;

namespace {

const std::string data = CONVEX_CODES_DATA_DIR;

std::size_t parse_error_line(const std::string& text)
{
    try {
        parse_code(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("code files parse to the expected codes", "[code_io]")
{
    CHECK(read_code_file(data + "/local_3.code") == Code::parse(3, {"0", "1", "2", "13", "23"}));
    CHECK(read_code_file(data + "/local_12.code") == Code::parse(4, {"0", "1", "2", "3", "4", "123", "124"}));
    CHECK(read_code_file(data + "/nonlocal.code") == Code::parse(4, {"23", "14", "123"}));
    CHECK(read_code_file(data + "/code3.code") ==
          Code::parse(5, {"2345", "124", "135", "145", "14", "15", "24", "35", "45", "4", "5"}));
    CHECK(read_code_file(data + "/realize_small.code") == Code::parse(4, {"1", "13", "123", "134"}));
}

TEST_CASE("code write/read round-trip is byte-exact", "[code_io]")
{
    CodeGenerator g(99);
    for (int t = 0; t < 100; ++t) {
        const Code c = g.code(g.uniform(0, 12) + 1, 10);
        const std::string text = format_code(c);
        const Code back = parse_code(text);
        CHECK(back == c);
        CHECK(format_code(back) == text);
    }
}

TEST_CASE("malformed code files report the offending line", "[code_io]")
{
    CHECK(parse_error_line("") == 0);
    CHECK_THROWS_AS(parse_code(""), ParseError);
    CHECK(parse_error_line("n=3\n1 2\n4\n") == 3);
    CHECK(parse_error_line("n=3\n1 1\n") == 2);
    CHECK(parse_error_line("# comment\nm=3\n") == 2);
    CHECK(parse_error_line("n=3\n0 1\n") == 2);
    CHECK(parse_error_line("n=3\n1 x\n") == 2);
    CHECK(parse_error_line("n=65\n") == 1);
}

TEST_CASE("abstract cover table round-trip", "[code_io]")
{
    AbstractCover a(3);
    a.add_point("a", Codeword::of({1, 2}));
    a.add_point("b", Codeword{});
    a.add_point("c", Codeword::of({3}));
    for (bool union_ambient : {false, true}) {
        if (union_ambient)
            a.set_union_ambient();
        std::stringstream s;
        write_abstract_cover(s, a);
        const AbstractCover back = read_abstract_cover(s);
        CHECK(back.labels() == a.labels());
        CHECK(abstract_code(back) == abstract_code(a));
        CHECK(back.ambient_is_all_points() == a.ambient_is_all_points());
        std::stringstream again;
        write_abstract_cover(again, back);
        std::stringstream first;
        write_abstract_cover(first, a);
        CHECK(again.str() == first.str());
    }
}

TEST_CASE("cover files round-trip exactly", "[cover_io]")
{
    for (const char* name : {"closed_polygons.cover", "two_intervals.cover", "half_lines.cover", "half_lines_union.cover",
                             "nested.cover", "ball_split.cover"}) {
        INFO(name);
        const PolyhedralCover p = read_cover_file(data + "/" + name);
        const std::string text = format_cover(p);
        const PolyhedralCover back = parse_cover(text);
        CHECK(back == p);
        CHECK(format_cover(back) == text);
    }
}

TEST_CASE("cover files with an explicit region round-trip", "[cover_io]")
{
    const std::string text = "d=1 n=1 ambient=region\nSET 1\nH 1/1 : 1/2 lt\nREGION\nH -1/1 : 0/1 le\nH 1/1 : 1/1 le\n";
    const PolyhedralCover p = parse_cover(text);
    REQUIRE(p.ambient_region);
    CHECK(p.ambient_region->halfspaces.size() == 2);
    CHECK(format_cover(p) == text);
}

TEST_CASE("malformed cover files", "[cover_io]")
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_cover(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("d=2 n=1\n") == 1);
    CHECK(line_of("d=1 n=1 ambient=whole\nSET 2\n") == 2);
    CHECK(line_of("d=1 n=1 ambient=whole\nSET 1\nH 0/1 : 1/1 lt\n") == 3);
    CHECK(line_of("d=1 n=1 ambient=whole\nSET 1\nH 1/1 : 1/1 lq\n") == 3);
    CHECK(line_of("d=1 n=1 ambient=whole\nSET 1\nH 1/1 1/1 lt\n") == 3);
    CHECK(line_of("d=1 n=1 ambient=whole\nSET 1\nH 1/0 : 1/1 lt\n") == 3);
    CHECK(line_of("d=2 n=1 ambient=whole\nSET 1\nBALL 0 0 r -1 lt\n") == 3);
    CHECK(line_of("d=1 n=2 ambient=whole\nSET 1\n") == 2);
    CHECK(line_of("d=1 n=1 ambient=region\nSET 1\n") == 2);
    CHECK(line_of("d=1 n=0 ambient=whole\nREGION\n") == 2);
}

TEST_CASE("rational parsing accepts integers and fractions", "[cover_io]")
{
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(format_rational(Rational(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(2)) == "2/1");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("certificate text round-trip", "[bundle]")
{
    RealizationCertificate c;
    c.target = Code::parse(4, {"1", "13", "123", "134"});
    c.achieved = c.target;
    c.method = RealizationMethod::ChamberPlusMonotone;
    c.dimension = 2;
    c.ambient = AmbientKind::UnionOfSets;
    c.check("first", true, "some detail text");
    c.skip("second", "too large");
    c.check("third", true);
    std::stringstream s;
    write_certificate(s, c);
    const auto back = read_certificate(s);
    CHECK(back.target == c.target);
    CHECK(back.achieved == c.achieved);
    CHECK(back.method == c.method);
    CHECK(back.dimension == 2);
    CHECK(back.ambient == AmbientKind::UnionOfSets);
    REQUIRE(back.checks.size() == 3);
    CHECK(back.checks[0].detail == "some detail text");
    CHECK(back.checks[1].skipped);
    CHECK(back.valid());

    c.check("fourth", false, "broken");
    std::stringstream s2;
    write_certificate(s2, c);
    CHECK_FALSE(read_certificate(s2).valid());
}

TEST_CASE("bundle directory round-trip", "[bundle]")
{
    const auto dir = std::filesystem::temp_directory_path() / "convex_codes_test_bundle";
    std::filesystem::remove_all(dir);
    const auto out = realize(Code::parse(4, {"1", "13", "123", "134"}));
    REQUIRE(out.applicable());
    Bundle b{out.realization->certificate, out.realization->cover, out.realization->chamber.geometric};
    write_bundle(dir, b);
    const Bundle back = read_bundle(dir);
    CHECK(back.certificate.achieved == b.certificate.achieved);
    CHECK(abstract_code(back.abstract) == abstract_code(b.abstract));
    REQUIRE(back.cover);
    CHECK(*back.cover == *b.cover);
    CHECK(replay(back.certificate, back.abstract));
    std::filesystem::remove_all(dir);
}
