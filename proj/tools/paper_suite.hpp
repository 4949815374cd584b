#ifndef CONVEX_CODES_TOOLS_PAPER_SUITE_HPP
#define CONVEX_CODES_TOOLS_PAPER_SUITE_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "convex_codes/convex_codes.hpp"

namespace convex_codes::cli {

struct FixtureOutcome
{
    bool passed = false;
    std::string detail;
};

struct Fixture
{
    std::string name;
    std::function<FixtureOutcome()> run;
};

namespace suite {

inline bool only_local(const LocalObstructionReport& r, Codeword sigma)
{
    return r.unknown.empty() && r.obstructions.size() == 1 && r.obstructions[0].sigma == sigma;
}

inline std::string local_list(const LocalObstructionReport& r)
{
    std::string s;
    for (const auto& o : r.obstructions)
        s += (s.empty() ? "" : " ") + to_string(o.sigma);
    return "local={" + s + "} unknown=" + std::to_string(r.unknown.size());
}

inline PolyhedralCover half_lines(AmbientKind ambient)
{
    PolyhedralCover p;
    p.dimension = 1;
    p.ambient = ambient;
    p.regions.push_back(ConvexRegion{1, {HalfSpace({1}, 0, false)}, {}});
    p.regions.push_back(ConvexRegion{1, {HalfSpace({-1}, 0, false)}, {}});
    return p;
}

} // namespace suite

/// Every worked example with a stated outcome, plus the seeded property sweeps.
inline std::vector<Fixture> paper_fixtures(const std::filesystem::path& data)
{
    using namespace suite;
    auto file = [data](const char* name) { return (data / name).string(); };
    std::vector<Fixture> f;

    f.push_back({"local-obstruction-at-3", [=] {
                     const auto r = local_obstructions(read_code_file(file("local_3.code")));
                     return FixtureOutcome{only_local(r, Codeword::of({3})), local_list(r)};
                 }});
    f.push_back({"local-obstruction-at-12", [=] {
                     const auto r = local_obstructions(read_code_file(file("local_12.code")));
                     return FixtureOutcome{only_local(r, Codeword::of({1, 2})), local_list(r)};
                 }});
    f.push_back({"nonlocal-example-has-local-at-1", [=] {
                     const auto r = local_obstructions(read_code_file(file("nonlocal.code")));
                     bool found = false;
                     for (const auto& o : r.obstructions)
                         found = found || o.sigma == Codeword::of({1});
                     return FixtureOutcome{found && r.unknown.empty(), local_list(r)};
                 }});
    f.push_back({"nonlocal-pair-12-34", [=] {
                     const auto s = nonlocal_obstructions(read_code_file(file("nonlocal.code")));
                     for (const auto& o : s.obstructions)
                         if (o.sigma == Codeword::of({1, 2}) && o.sigma2 == Codeword::of({3, 4}))
                             return FixtureOutcome{o.profile1.all_zero() && o.profile2.reduced ==
                                                                               std::vector<std::size_t>{1},
                                                   format_obstruction(o)};
                     return FixtureOutcome{false, "pair (12, 34) not reported"};
                 }});
    f.push_back({"code2-no-local-not-max-intersection-complete", [=] {
                     const Code c = read_code_file(file("code2.code"));
                     const auto r = local_obstructions(c);
                     const auto out = realize(c);
                     const std::string w = out.not_applicable ? to_string(*out.not_applicable) : "realizable";
                     return FixtureOutcome{r.certified_free() && !classify_completeness(c).max_intersection_complete &&
                                               w == "1 = 123∩156",
                                           local_list(r) + " witness=" + w};
                 }});
    f.push_back({"code3-no-local-not-max-intersection-complete", [=] {
                     const Code c = read_code_file(file("code3.code"));
                     const auto r = local_obstructions(c);
                     const auto miss = missing_max_intersection(c);
                     return FixtureOutcome{r.certified_free() && miss.has_value() &&
                                               to_string(*miss) == "1 = 124∩135",
                                           local_list(r) + " witness=" + (miss ? to_string(*miss) : "none")};
                 }});
    f.push_back({"closed-polygon-cover-realizes-code3", [=] {
                     const Code c = read_code_file(file("code3.code"));
                     const auto cc = code_of_cover(read_cover_file(file("closed_polygons.cover")));
                     return FixtureOutcome{cc.code == c, "cover code " + to_string(cc.code)};
                 }});
    f.push_back({"half-lines-code", [] {
                     const auto c = code_of_cover(half_lines(AmbientKind::WholeSpace)).code;
                     return FixtureOutcome{c == Code::parse(2, {"1", "12", "2"}), to_string(c)};
                 }});
    f.push_back({"half-lines-condition-ii-not-i", [] {
                     const auto r = check_nondegeneracy(half_lines(AmbientKind::WholeSpace));
                     return FixtureOutcome{!r.cond_i && r.cond_ii, "cond_i=" + std::to_string(r.cond_i) +
                                                                       " cond_ii=" + std::to_string(r.cond_ii)};
                 }});
    f.push_back({"half-lines-interior-loses-12", [] {
                     const auto r = verify_closure_interior_invariance(half_lines(AmbientKind::UnionOfSets));
                     return FixtureOutcome{r.original == Code::parse(2, {"1", "12", "2"}) &&
                                               r.transformed == Code::parse(2, {"1", "2"}),
                                           to_string(r.original) + " vs " + to_string(r.transformed)};
                 }});
    f.push_back({"nested-intervals-dimension-1", [=] {
                     const auto c = code_of_cover(read_cover_file(file("nested.cover"))).code;
                     return FixtureOutcome{c == Code::parse(3, {"0", "1", "12", "123"}), to_string(c)};
                 }});
    f.push_back({"simplicial-complexes-are-convex", [] {
                     // every face of 123, realized by extension from the single word 123
                     const Code c = Code::parse(3, {"123"});
                     const Code d = simplicial_complex(c).as_code();
                     const auto a = monotone_extend(finite_realization(c), d);
                     const auto out = realize(d);
                     return FixtureOutcome{abstract_code(a) == d && out.applicable() &&
                                               out.realization->certificate.valid(),
                                           to_string(abstract_code(a))};
                 }});
    f.push_back({"potential-cover-1-2-12", [] {
                     const auto [pc, cert] = potential_cover(Code::parse(2, {"1", "2", "12"}));
                     return FixtureOutcome{cert.valid() && cert.achieved == Code::parse(2, {"0", "1", "2", "12"}),
                                           to_string(cert.achieved)};
                 }});
    f.push_back({"chamber-round-trip-sweep", [] {
                     CodeGenerator g(0xC4A3B);
                     for (int t = 0; t < 200; ++t) {
                         const int n = g.uniform(1, 7);
                         const Code c = g.code(n, 8);
                         if (maximal_codewords(c).size() > 5)
                             continue;
                         for (AmbientKind a : {AmbientKind::WholeSpace, AmbientKind::UnionOfSets}) {
                             ChamberOptions opt;
                             opt.geometric_check_max_k = 4;
                             const auto [ch, cert] = max_int_realization(c, a, opt);
                             if (!cert.valid())
                                 return FixtureOutcome{false, "trial " + std::to_string(t) + " code " + to_string(c)};
                         }
                     }
                     return FixtureOutcome{true, "200 seeded codes"};
                 }});
    f.push_back({"end-to-end-realization-sweep", [] {
                     CodeGenerator g(0x7E12);
                     for (int t = 0; t < 100; ++t) {
                         const Code c = g.max_intersection_complete(g.uniform(1, 7), g.uniform(1, 5));
                         const auto out = realize(c);
                         if (!out.applicable() || !(out.realization->certificate.achieved == c) ||
                             !replay(out.realization->certificate, out.realization->cover))
                             return FixtureOutcome{false, "trial " + std::to_string(t) + " code " + to_string(c)};
                     }
                     return FixtureOutcome{true, "100 seeded codes"};
                 }});
    f.push_back({"monotone-extension-sweep", [] {
                     CodeGenerator g(0x3070);
                     for (int t = 0; t < 200; ++t) {
                         const Code c = g.code(g.uniform(1, 6), 6);
                         const Code d = g.extension(c, 40);
                         if (!(abstract_code(monotone_extend(finite_realization(c), d)) == d))
                             return FixtureOutcome{false, "trial " + std::to_string(t)};
                     }
                     return FixtureOutcome{true, "200 seeded pairs"};
                 }});
    f.push_back({"potential-cover-sweep", [] {
                     CodeGenerator g(0x9073);
                     for (int t = 0; t < 200; ++t) {
                         const Code c = g.code(g.uniform(1, 6), 12);
                         const auto [pc, cert] = potential_cover(c);
                         if (!cert.valid())
                             return FixtureOutcome{false, "trial " + std::to_string(t) + " code " + to_string(c)};
                     }
                     return FixtureOutcome{true, "200 seeded codes"};
                 }});
    f.push_back({"concurrent-lines-13-cells", [] {
                     const auto cx = enumerate_cells({{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}}, 2);
                     return FixtureOutcome{cx.cells().size() == 13, std::to_string(cx.cells().size()) + " cells"};
                 }});
    f.push_back({"two-interval-sampling-seed-7", [=] {
                     const auto p = read_cover_file(file("two_intervals.cover"));
                     const Box box{{Rational(-1)}, {Rational(4)}};
                     const auto a = format_sample_report(sample_code(p, 100000, 7, box));
                     const auto b = format_sample_report(sample_code(p, 100000, 7, box));
                     const auto r = sample_code(p, 100000, 7, box);
                     return FixtureOutcome{a == b && r.observed == Code::parse(2, {"0", "1", "12", "2"}),
                                           to_string(r.observed)};
                 }});
    f.push_back({"homology-fixtures", [] {
                     const bool ok =
                         reduced_betti(SimplicialComplex(3, {Codeword::of({1, 2}), Codeword::of({1, 3}),
                                                             Codeword::of({2, 3})}))
                                 .reduced == std::vector<std::size_t>{0, 1} &&
                         reduced_betti(SimplicialComplex(4, {Codeword::of({1, 2, 3}), Codeword::of({1, 2, 4}),
                                                             Codeword::of({1, 3, 4}), Codeword::of({2, 3, 4})}))
                                 .reduced == std::vector<std::size_t>{0, 0, 1} &&
                         reduced_betti(SimplicialComplex(2, {Codeword::of({1}), Codeword::of({2})})).reduced ==
                             std::vector<std::size_t>{1} &&
                         reduced_betti(SimplicialComplex(3, {Codeword::of({1, 2, 3})})).all_zero();
                     return FixtureOutcome{ok, "hollow triangle, tetrahedron boundary, two points, full simplex"};
                 }});
    f.push_back({"realize-123-134-13-1", [=] {
                     const auto out = realize(read_code_file(file("realize_small.code")));
                     return FixtureOutcome{out.applicable() && out.realization->certificate.valid() &&
                                               out.realization->certificate.dimension == 2,
                                           out.applicable() ? "dimension " +
                                                                  std::to_string(out.realization->certificate.dimension)
                                                            : "not applicable"};
                 }});
    return f;
}

} // namespace convex_codes::cli

#endif
