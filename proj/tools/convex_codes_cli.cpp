// convex-codes: command-line front end.
//
// Exit codes: 0 success, 1 domain verdict (not applicable, fixture failure),
// 2 parse error, 3 capability error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "paper_suite.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace convex_codes;
using convex_codes::cli::Json;

namespace {

enum Exit { kOk = 0, kVerdict = 1, kParse = 2, kCapability = 3 };

void emit(const Json& j, bool json)
{
    if (json)
        std::cout << j.dump(2) << '\n';
    else
        cli::render_text(std::cout, j);
}

int cmd_analyze(const std::string& path, std::size_t budget, bool json)
{
    const Code c = read_code_file(path);
    emit(cli::analyze_code(c, budget), json);
    return kOk;
}

AmbientKind parse_ambient(const std::string& s)
{
    return s == "whole" ? AmbientKind::WholeSpace : AmbientKind::UnionOfSets;
}

/// Reads the bundle back and re-checks it independently of the in-memory objects.
std::string reverify_bundle(const fs::path& dir)
{
    const Bundle b = read_bundle(dir);
    const auto& cert = b.certificate;
    if (!cert.valid())
        return "certificate does not validate";
    if (!(abstract_code(b.abstract) == cert.achieved))
        return "abstract cover code differs from the certified code";
    if (!b.cover)
        return "";
    try {
        const Code geo = code_of_cover(*b.cover).code;
        const Code expected = cert.method == RealizationMethod::PotentialCover
                                  ? cert.achieved
                                  : chamber_target(cert.achieved, cert.ambient);
        if (!(geo == expected))
            return "cover file code " + to_string(geo) + " differs from " + to_string(expected);
    } catch (const std::length_error&) {
        // beyond the exact engine's caps; the abstract check above stands
    }
    return "";
}

int cmd_realize(const std::string& path, const std::string& method, const std::string& ambient,
                const std::string& out_dir, bool json)
{
    const Code c = read_code_file(path);
    std::string chosen = method;
    if (chosen == "auto")
        chosen = !realize(c).applicable() && !c.empty() && potential_target(c) == c
                     ? "potential"
                     : "chamber";
    Json report;
    report["input"] = cli::code_json(c);
    Bundle bundle;
    if (chosen == "chamber") {
        RealizeOptions opt;
        if (ambient != "auto")
            opt.ambient = parse_ambient(ambient);
        const auto out = realize(c, opt);
        if (!out.applicable()) {
            report["verdict"] = "not-applicable";
            report["witness"] = to_string(*out.not_applicable);
            emit(report, json);
            return kVerdict;
        }
        bundle.certificate = out.realization->certificate;
        bundle.abstract = out.realization->cover;
        bundle.cover = out.realization->chamber.geometric;
    } else {
        if (c.empty()) {
            report["verdict"] = "not-applicable";
            report["witness"] = "empty code";
            emit(report, json);
            return kVerdict;
        }
        const auto [pc, cert] = potential_cover(c);
        bundle.certificate = cert;
        AbstractCover a(c.n());
        for (const auto& [sigma, x] : pc.witnesses)
            a.add_point("w" + to_string(sigma), pc.codeword_at(x));
        bundle.abstract = a;
        if (pc.dimension() <= 8)
            bundle.cover = pc.as_polyhedral();
    }
    report["verdict"] = bundle.certificate.valid() ? "realized" : "failed";
    report["certificate"] = cli::certificate_json(bundle.certificate);
    if (!out_dir.empty()) {
        write_bundle(out_dir, bundle);
        const std::string problem = reverify_bundle(out_dir);
        report["bundle"] = Json{{"path", out_dir}, {"reverified", problem.empty()}, {"problem", problem}};
        if (!problem.empty()) {
            emit(report, json);
            return kVerdict;
        }
    }
    emit(report, json);
    return bundle.certificate.valid() ? kOk : kVerdict;
}

Box parse_box(const std::string& spec, int d)
{
    std::vector<Rational> v;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');)
        v.push_back(parse_rational(tok));
    if (static_cast<int>(v.size()) != 2 * d)
        throw std::invalid_argument("--box needs 2d comma-separated bounds lo1,hi1,...");
    Box b;
    for (int j = 0; j < d; ++j) {
        b.lo.push_back(v[2 * j]);
        b.hi.push_back(v[2 * j + 1]);
    }
    return b;
}

int cmd_cover_code(const std::string& path, bool nondegen, bool invariance, long long samples,
                   std::uint64_t seed, const std::string& box, bool json)
{
    const PolyhedralCover p = read_cover_file(path);
    Json report;
    report["dimension"] = p.dimension;
    report["n"] = p.n();
    report["ambient"] = to_string(p.ambient);
    if (samples >= 0) {
        const auto r = sample_code(p, static_cast<std::uint64_t>(samples), seed,
                                   box.empty() ? std::nullopt : std::optional<Box>(parse_box(box, p.dimension)));
        Json counts = Json::array();
        for (Codeword w : r.observed)
            counts.push_back(Json{{"codeword", to_string(w)}, {"count", r.counts.at(w)}});
        std::string box_text;
        for (int j = 0; j < p.dimension; ++j)
            box_text += (j ? " x " : "") + std::string("[") + format_rational(r.box.lo[j]) + ", " +
                        format_rational(r.box.hi[j]) + "]";
        report["mode"] = "sampled";
        report["sample"] = Json{{"budget", r.budget}, {"seed", r.seed}, {"in_ambient", r.in_ambient}, {"box", box_text}};
        report["code"] = cli::words_json(r.observed.words());
        report["counts"] = counts;
    } else {
        if (p.has_balls()) {
            std::cerr << "error: cover has ball constraints; exact mode handles polyhedra only, rerun with --sample N\n";
            return kCapability;
        }
        const auto cc = code_of_cover(p);
        report["mode"] = "exact";
        report["cells"] = cc.complex.cells().size();
        report["code"] = cli::words_json(cc.code.words());
    }
    if (nondegen) {
        const auto r = check_nondegeneracy(p);
        Json off = Json::array();
        for (const auto& o : r.offenders)
            off.push_back(Json{{"condition", o.condition},
                               {"sigma", to_string(o.sigma)},
                               {"cell_witness", format_vector(r.complex.cells()[o.cell].witness)}});
        report["nondegeneracy"] = Json{{"cond_i", r.cond_i}, {"cond_ii", r.cond_ii}, {"offenders", off}};
    }
    if (invariance) {
        const auto r = verify_closure_interior_invariance(p);
        report["invariance"] = Json{{"compared_with", r.open ? "closure" : "interior"},
                                    {"original", cli::words_json(r.original.words())},
                                    {"transformed", cli::words_json(r.transformed.words())},
                                    {r.open ? "code_equal_cl" : "code_equal_int", r.equal()}};
    }
    emit(report, json);
    return kOk;
}

int cmd_verify_paper(bool list, const std::string& data_dir)
{
    const auto fixtures = cli::paper_fixtures(data_dir);
    if (list) {
        for (const auto& f : fixtures)
            std::cout << f.name << '\n';
        return kOk;
    }
    int failed = 0;
    for (const auto& f : fixtures) {
        cli::FixtureOutcome r;
        try {
            r = f.run();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        failed += r.passed ? 0 : 1;
        std::cout << (r.passed ? "PASS " : "FAIL ") << f.name << "  " << r.detail << '\n';
    }
    std::cout << fixtures.size() - failed << "/" << fixtures.size() << " fixtures passed\n";
    return failed ? kVerdict : kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convexity tests and convex realizations for combinatorial neural codes"};
    app.require_subcommand(1);

    std::string file, method = "auto", ambient = "auto", out_dir, box, data_dir = CONVEX_CODES_DATA_DIR;
    std::size_t budget = 1'000'000;
    long long samples = -1;
    std::uint64_t seed = 7;
    bool json = false, nondegen = false, invariance = false, list = false;

    auto* analyze = app.add_subcommand("analyze", "Obstructions and completeness of a code");
    analyze->add_option("file", file, "code file")->required();
    analyze->add_option("--nonlocal-budget", budget, "maximum covering-set pairs to examine");
    analyze->add_flag("--json", json, "JSON output");

    auto* realize_cmd = app.add_subcommand("realize", "Build and certify a convex realization");
    realize_cmd->add_option("file", file, "code file")->required();
    realize_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "chamber", "potential"}));
    realize_cmd->add_option("--ambient", ambient)->check(CLI::IsMember({"auto", "whole", "union"}));
    realize_cmd->add_option("--out", out_dir, "bundle directory");
    realize_cmd->add_flag("--json", json, "JSON output");

    auto* cover = app.add_subcommand("cover-code", "Code of a polyhedral cover");
    cover->add_option("file", file, "cover file")->required();
    cover->add_flag("--nondegen", nondegen, "check non-degeneracy");
    cover->add_flag("--invariance", invariance, "compare with the closure or interior cover");
    cover->add_option("--sample", samples, "estimate by sampling N points (allows balls)");
    cover->add_option("--seed", seed, "sampling seed");
    cover->add_option("--box", box, "sampling box lo1,hi1,lo2,hi2,...");
    cover->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify-paper", "Run the worked-example fixture suite");
    verify->add_flag("--list", list, "list fixture names only");
    verify->add_option("--data-dir", data_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }

    try {
        if (*analyze)
            return cmd_analyze(file, budget, json);
        if (*realize_cmd)
            return cmd_realize(file, method, ambient, out_dir, json);
        if (*cover)
            return cmd_cover_code(file, nondegen, invariance, samples, seed, box, json);
        return cmd_verify_paper(list, data_dir);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapability;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapability;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapability;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    }
}
