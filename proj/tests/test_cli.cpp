#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch_amalgamated.hpp>

#include "report.hpp"

namespace fs = std::filesystem;

namespace {

const std::string data = CONVEX_CODES_DATA_DIR;
const fs::path scratch = fs::temp_directory_path() / "convex_codes_cli_test";

struct Run
{
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    fs::create_directories(scratch);
    const fs::path log = scratch / "stdout.txt";
    const std::string cmd = std::string("\"") + CONVEX_CODES_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(log);
    std::stringstream s;
    s << in.rdbuf();
    r.out = s.str();
    return r;
}

fs::path write_file(const std::string& name, const std::string& text)
{
    fs::create_directories(scratch);
    const fs::path p = scratch / name;
    std::ofstream(p) << text;
    return p;
}

bool has(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("analyze reports obstructions with exit 0", "[cli]")
{
    const auto r = run("analyze " + data + "/local_3.code");
    CHECK(r.status == 0);
    CHECK(has(r.out, "sigma=3"));
    CHECK(has(r.out, "max_intersection_complete"));

    const auto c2 = run("analyze " + data + "/code2.code");
    CHECK(c2.status == 0);
    CHECK(has(c2.out, "1 = 123∩156"));
}

TEST_CASE("parse errors exit 2", "[cli]")
{
    CHECK(run("analyze " + write_file("empty.code", "").string()).status == 2);
    const auto bad = run("analyze " + write_file("bad.code", "n=3\n1 2\n7\n").string());
    CHECK(bad.status == 2);
    CHECK(has(bad.out, "3"));
    CHECK(run("analyze " + (scratch / "missing.code").string()).status == 2);
    CHECK(run("no-such-command").status == 2);
}

TEST_CASE("realize exit codes", "[cli]")
{
    const fs::path out = scratch / "bundle";
    fs::remove_all(out);
    const auto ok = run("realize " + data + "/realize_small.code --method auto --out " + out.string());
    CHECK(ok.status == 0);
    CHECK(has(ok.out, "dimension: 2"));
    CHECK(has(ok.out, "reverified: true"));
    CHECK(fs::exists(out / "certificate.txt"));

    const auto na = run("realize " + data + "/code2.code --method chamber");
    CHECK(na.status == 1);
    CHECK(has(na.out, "1 = 123∩156"));

    const auto pot = run("realize " + data + "/potential_small.code --method potential --json");
    CHECK(pot.status == 0);
    const auto j = convex_codes::cli::Json::parse(pot.out);
    CHECK(j["certificate"]["achieved"] == convex_codes::cli::Json::array({"0", "1", "2", "12"}));
    CHECK(j["certificate"]["dimension"] == 3);
}

TEST_CASE("cover-code exact and sampled modes", "[cli]")
{
    const auto exact = run("cover-code " + data + "/two_intervals.cover");
    CHECK(exact.status == 0);
    CHECK(has(exact.out, "code: [0, 1, 2, 12]"));

    CHECK(run("cover-code " + data + "/ball_split.cover").status == 3);
    const auto sampled = run("cover-code " + data + "/ball_split.cover --sample 20000 --seed 7");
    CHECK(sampled.status == 0);
    CHECK(has(sampled.out, "mode: sampled"));

    const auto nd = run("cover-code " + data + "/half_lines.cover --nondegen --invariance");
    CHECK(nd.status == 0);
    CHECK(has(nd.out, "cond_i: false"));
    CHECK(has(nd.out, "cond_ii: true"));
}

TEST_CASE("text output carries the same fields as JSON", "[cli]")
{
    for (const std::string args : {"analyze " + data + "/nonlocal.code", "cover-code " + data + "/closed_polygons.cover",
                                   "realize " + data + "/realize_small.code"}) {
        INFO(args);
        const auto text = run(args);
        const auto json = run(args + " --json");
        REQUIRE(text.status == json.status);
        std::ostringstream rendered;
        convex_codes::cli::render_text(rendered, convex_codes::cli::Json::parse(json.out));
        CHECK(rendered.str() == text.out);
    }
}

TEST_CASE("verify-paper runs every fixture", "[cli]")
{
    const auto list = run("verify-paper --list");
    CHECK(list.status == 0);
    CHECK(has(list.out, "code2-no-local-not-max-intersection-complete"));
    CHECK_FALSE(has(list.out, "PASS"));

    const auto all = run("verify-paper");
    CHECK(all.status == 0);
    CHECK_FALSE(has(all.out, "FAIL"));
}

TEST_CASE("a corrupted code2 fixture fails its row", "[cli]")
{
    const fs::path dir = scratch / "corrupted";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& e : fs::directory_iterator(data))
        fs::copy_file(e.path(), dir / e.path().filename());
    // add the missing intersection 1, which makes the code max intersection-complete
    std::ofstream(dir / "code2.code", std::ios::app) << "1\n";
    const auto r = run("verify-paper --data-dir " + dir.string());
    CHECK(r.status == 1);
    CHECK(has(r.out, "FAIL code2-no-local-not-max-intersection-complete"));
    fs::remove_all(dir);
}
