// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "oracles.hpp"

using namespace convex_codes;

namespace {

const std::string data = CONVEX_CODES_DATA_DIR;

struct Outcome
{
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

bool local_sigmas_are(const LocalObstructionReport& r, std::vector<Codeword> expected)
{
    std::vector<Codeword> got;
    for (const auto& o : r.obstructions)
        got.push_back(o.sigma);
    return got == expected;
}

bool has_local(const LocalObstructionReport& r, Codeword sigma)
{
    return std::any_of(r.obstructions.begin(), r.obstructions.end(), [&](const auto& o) { return o.sigma == sigma; });
}

Outcome criterion1()
{
    Outcome o;
    const auto r3 = local_obstructions(read_code_file(data + "/local_3.code"));
    o.require(local_sigmas_are(r3, {Codeword::of({3})}) && r3.unknown.empty(), "{0,1,2,13,23} not exactly {3}");
    const auto r12 = local_obstructions(read_code_file(data + "/local_12.code"));
    o.require(local_sigmas_are(r12, {Codeword::of({1, 2})}) && r12.unknown.empty(),
              "{0,1,2,3,4,123,124} not exactly {12}");
    const auto rn = local_obstructions(read_code_file(data + "/nonlocal.code"));
    o.require(has_local(rn, Codeword::of({1})) && rn.unknown.empty(), "{23,14,123} lacks {1}");
    if (o.passed)
        o.detail = "3 fixtures, no unknown verdicts";
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const auto s = nonlocal_obstructions(read_code_file(data + "/nonlocal.code"));
    bool found = false;
    for (const auto& ob : s.obstructions)
        if (ob.sigma == Codeword::of({1, 2}) && ob.sigma2 == Codeword::of({3, 4})) {
            found = ob.profile1.all_zero() && !ob.profile1.empty_face_class &&
                    ob.profile2.reduced == std::vector<std::size_t>{1};
            o.detail = format_obstruction(ob);
        }
    o.require(found, "pair (12, 34) with profiles () vs (1) not found");
    return o;
}

Outcome criterion3()
{
    Outcome o;
    const Code c2 = read_code_file(data + "/code2.code");
    o.require(local_obstructions(c2).certified_free(), "code2 has local obstructions");
    o.require(!classify_completeness(c2).max_intersection_complete, "code2 reported max intersection-complete");
    const auto out = realize(c2);
    o.require(!out.applicable() && to_string(*out.not_applicable) == "1 = 123∩156", "code2 witness mismatch");
    // independent check of the witness: 123 ∩ 156 = 1 is absent
    o.require(!c2.contains(Codeword::of({1})) && oracle::completion(oracle::maximal(c2)).contains(Codeword::of({1})),
              "oracle disagrees on code2");

    const Code c3 = read_code_file(data + "/code3.code");
    o.require(local_obstructions(c3).certified_free(), "code3 has local obstructions");
    o.require(!classify_completeness(c3).max_intersection_complete, "code3 reported max intersection-complete");
    const auto fig = read_cover_file(data + "/closed_polygons.cover");
    bool closed = true;
    for (const auto& r : fig.regions)
        for (const auto& h : r.halfspaces)
            closed = closed && !h.strict;
    o.require(closed, "closed polygon cover is not closed");
    const Code got = code_of_cover(fig).code;
    o.require(got == c3, "closed polygon cover code " + to_string(got));
    o.require(oracle::cover_code(fig) == c3, "oracle closed polygon cover code differs");
    if (o.passed)
        o.detail = "code2 witness 1 = 123∩156; closed polygon cover code equals code3";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    CodeGenerator g(0xacc4);
    int accepted = 0, geometric = 0;
    while (accepted < 200) {
        const int n = g.uniform(1, 7);
        const Code c = g.code(n, 8);
        const Code m = oracle::maximal(c);
        if (m.size() > 5)
            continue;
        ++accepted;
        const AmbientKind amb = g.coin(50) ? AmbientKind::WholeSpace : AmbientKind::UnionOfSets;
        ChamberOptions opt;
        opt.geometric_check_max_k = 0;
        const auto [ch, cert] = max_int_realization(c, amb, opt);
        const std::string tag = "code " + to_string(c) + " ambient " + to_string(amb);
        o.require(abstract_code(ch.abstract) == oracle::chamber_code(c, amb), tag + ": abstract code");
        if (m.size() > 4)
            continue;
        ++geometric;
        const auto cc = code_of_cover(ch.geometric);
        o.require(cc.code == abstract_code(ch.abstract), tag + ": geometric code");
        const Barycentric bary(ch.simplex);
        for (std::size_t k = 0; k < cc.complex.cells().size(); ++k) {
            if (!cc.in_ambient[k])
                continue;
            const Vector& x = cc.complex.cells()[k].witness;
            Codeword r, w;
            for (int b = 0; b < ch.k; ++b)
                if (bary.lambda(b, x) >= 0)
                    r = r.with(b + 1);
            for (int i = 1; i <= c.n(); ++i)
                if (ch.geometric.regions[i - 1].contains(x))
                    w = w.with(i);
            o.require(w == chamber_word(ch.rho, r), tag + ": cell at " + format_vector(x));
        }
        const auto nd = check_nondegeneracy(ch.geometric);
        o.require(nd.cond_i && nd.cond_ii, tag + ": non-degeneracy");
        o.require(verify_closure_interior_invariance(ch.geometric).equal(), tag + ": invariance");
    }
    if (o.passed)
        o.detail = "200 codes, " + std::to_string(geometric) + " with k <= 4 checked geometrically";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    CodeGenerator g(0xacc5);
    for (int t = 0; t < 100; ++t) {
        const int n = g.uniform(1, 7);
        const Code c = g.max_intersection_complete(n, g.uniform(1, 5));
        const std::string tag = "code " + to_string(c);
        o.require(oracle::completion(oracle::maximal(c)).without(Codeword{}).subset_of(c), tag + ": generator");
        const auto out = realize(c);
        if (!out.applicable()) {
            o.require(false, tag + ": not applicable");
            continue;
        }
        const auto& cert = out.realization->certificate;
        const int k = static_cast<int>(oracle::maximal(c).size());
        o.require(cert.achieved == c && abstract_code(out.realization->cover) == c, tag + ": achieved");
        o.require(cert.dimension == std::max(2, k - 1), tag + ": dimension");
        o.require(cert.valid() && replay(cert, out.realization->cover), tag + ": replay");
    }
    if (o.passed)
        o.detail = "100 codes";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    const auto nested = read_cover_file(data + "/nested.cover");
    const auto base = code_of_cover(nested);
    o.require(nested.dimension == 1 && base.code.without(Codeword{}) == Code::parse(3, {"1", "12", "123"}),
              "nested fixture code " + to_string(base.code));
    const auto lifted = code_of_cover(lift_cover(nested));
    const Code faces = oracle::faces(base.code);
    const Code got = abstract_code(monotone_extend(abstract_from_cells(lifted, 3), faces));
    o.require(got == faces, "lifted extension " + to_string(got));

    CodeGenerator g(0xacc6);
    int spurious = 0;
    for (int t = 0; t < 200; ++t) {
        const Code c = g.code(g.uniform(1, 7), 7);
        const Code d = g.extension(c, 40);
        const std::string tag = "C " + to_string(c) + " D " + to_string(d);
        o.require(c.subset_of(d) && d.subset_of(oracle::faces(c)) && oracle::maximal(c) == oracle::maximal(d),
                  tag + ": generator");
        const Code e = abstract_code(monotone_extend(finite_realization(c), d));
        for (Codeword w : e)
            spurious += !d.contains(w);
        o.require(e == d, tag + ": extension code " + to_string(e));
    }
    o.require(spurious == 0, std::to_string(spurious) + " spurious codewords");
    if (o.passed)
        o.detail = "nested lift realizes all 8 faces; 200 pairs, 0 spurious";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    CodeGenerator g(0xacc7);
    std::size_t witnesses = 0;
    for (int t = 0; t < 200; ++t) {
        const Code c = g.code(g.uniform(1, 6), 12);
        const std::string tag = "code " + to_string(c);
        const auto [pc, cert] = potential_cover(c);
        o.require(cert.achieved == oracle::completion(c), tag + ": achieved " + to_string(cert.achieved));
        const auto poly = pc.as_polyhedral();
        for (const auto& [sigma, x] : pc.witnesses) {
            ++witnesses;
            o.require(poly.in_ambient(x, poly.codeword_at(x)) && poly.codeword_at(x) == sigma, tag + ": witness " + to_string(sigma));
        }
    }
    if (o.passed)
        o.detail = "200 codes, " + std::to_string(witnesses) + " witnesses verified";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    const std::vector<Hyperplane> hs{{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}};
    const std::size_t cells = enumerate_cells(hs, 2).cells().size();
    o.require(cells == 13, std::to_string(cells) + " cells");
    int feasible_count = 0;
    for (int s = 0; s < 27; ++s) {
        std::vector<LinearConstraint> cons;
        for (int j = 0, v = s; j < 3; ++j, v /= 3)
            cons.push_back(detail::sign_constraint(hs[j], static_cast<signed char>(v % 3 - 1)));
        feasible_count += oracle::lp_feasible(cons, 2);
    }
    o.require(feasible_count == 13, "oracle finds " + std::to_string(feasible_count) + " cells");

    const auto nd = check_nondegeneracy(read_cover_file(data + "/half_lines.cover"));
    o.require(!nd.cond_i && nd.cond_ii, "half-lines non-degeneracy flags");

    const auto p = read_cover_file(data + "/two_intervals.cover");
    const Box box{{Rational(-1)}, {Rational(4)}};
    const auto a = sample_code(p, 100000, 7, box);
    const auto b = sample_code(p, 100000, 7, box);
    o.require(a.observed == Code::parse(2, {"0", "1", "12", "2"}), "sampled " + to_string(a.observed));
    o.require(format_sample_report(a) == format_sample_report(b), "sampling report not reproducible");
    if (o.passed)
        o.detail = "13 cells; cond_i=false cond_ii=true; sampled {0, 1, 12, 2} twice identically";
    return o;
}

Outcome criterion9()
{
    Outcome o;
    auto check = [&](int n, std::vector<const char*> facets, std::vector<std::size_t> expected, const char* name) {
        std::vector<Codeword> fs;
        for (const char* f : facets)
            fs.push_back(parse_compact(f));
        const auto got = reduced_betti(SimplicialComplex(n, fs));
        o.require(got.reduced == expected && !got.empty_face_class, std::string(name) + " " + to_string(got));
        o.require(oracle::betti(fs, n) == expected, std::string(name) + " oracle");
    };
    check(3, {"12", "13", "23"}, {0, 1}, "hollow triangle");
    check(4, {"123", "124", "134", "234"}, {0, 0, 1}, "tetrahedron boundary");
    check(2, {"1", "2"}, {1}, "two points");
    check(4, {"1234"}, {}, "full simplex");
    if (o.passed)
        o.detail = "(0,1) (0,0,1) (1) ()";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9};
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.passed;
        std::cout << "criterion " << k + 1 << ": " << (o.passed ? "PASS" : "FAIL") << "  " << o.detail << '\n';
    }
    return failures;
}
