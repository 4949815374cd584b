#ifndef CONVEX_CODES_BUNDLE_HPP
#define CONVEX_CODES_BUNDLE_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "convex_codes/certificate.hpp"
#include "convex_codes/code_io.hpp"
#include "convex_codes/cover_io.hpp"

namespace convex_codes {

/**
 * Certificate text:
 *
 *     method=chamber+monotone
 *     dimension=2
 *     ambient=union
 *     valid=1
 *     BEGIN target
 *     n=4
 *     ...
 *     END target
 *     BEGIN achieved
 *     ...
 *     END achieved
 *     check <name> <pass|fail|skip> <detail...>
 */
inline void write_certificate(std::ostream& out, const RealizationCertificate& c)
{
    out << "method=" << to_string(c.method) << '\n'
        << "dimension=" << c.dimension << '\n'
        << "ambient=" << to_string(c.ambient) << '\n'
        << "valid=" << (c.valid() ? 1 : 0) << '\n';
    out << "BEGIN target\n";
    write_code(out, c.target);
    out << "END target\nBEGIN achieved\n";
    write_code(out, c.achieved);
    out << "END achieved\n";
    for (const auto& ch : c.checks) {
        out << "check " << ch.name << ' ' << (ch.skipped ? "skip" : ch.passed ? "pass" : "fail");
        if (!ch.detail.empty())
            out << ' ' << ch.detail;
        out << '\n';
    }
}

inline RealizationCertificate read_certificate(std::istream& in)
{
    RealizationCertificate c;
    std::string line;
    std::size_t line_no = 0;
    auto block = [&](const std::string& name) {
        std::string body;
        while (std::getline(in, line)) {
            ++line_no;
            if (detail::trim(line) == "END " + name)
                return parse_code(body);
            body += line + '\n';
        }
        throw ParseError(line_no, "unterminated block " + name);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.rfind("method=", 0) == 0) {
            const std::string m = t.substr(7);
            if (m == "chamber")
                c.method = RealizationMethod::Chamber;
            else if (m == "chamber+monotone")
                c.method = RealizationMethod::ChamberPlusMonotone;
            else if (m == "potential")
                c.method = RealizationMethod::PotentialCover;
            else
                throw ParseError(line_no, "unknown method '" + m + "'");
        } else if (t.rfind("dimension=", 0) == 0) {
            c.dimension = detail::parse_int(t.substr(10), line_no);
        } else if (t.rfind("ambient=", 0) == 0) {
            const std::string a = t.substr(8);
            c.ambient = a == "whole" ? AmbientKind::WholeSpace
                        : a == "union" ? AmbientKind::UnionOfSets
                                       : AmbientKind::ExplicitRegion;
        } else if (t.rfind("valid=", 0) == 0) {
            // derived; recomputed on demand
        } else if (t == "BEGIN target") {
            c.target = block("target");
        } else if (t == "BEGIN achieved") {
            c.achieved = block("achieved");
        } else if (t.rfind("check ", 0) == 0) {
            std::istringstream toks(t.substr(6));
            CheckResult r;
            std::string status;
            toks >> r.name >> status;
            std::getline(toks, r.detail);
            r.detail = detail::trim(r.detail);
            r.passed = status == "pass";
            r.skipped = status == "skip";
            if (status != "pass" && status != "fail" && status != "skip")
                throw ParseError(line_no, "unknown check status '" + status + "'");
            c.checks.push_back(std::move(r));
        } else {
            throw ParseError(line_no, "unexpected line '" + t + "'");
        }
    }
    return c;
}

struct Bundle
{
    RealizationCertificate certificate;
    AbstractCover abstract;
    std::optional<PolyhedralCover> cover;
};

/// Writes certificate.txt, abstract.txt and (if present) cover.txt into dir.
inline void write_bundle(const std::filesystem::path& dir, const Bundle& b)
{
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name);
        if (!f)
            throw std::runtime_error("cannot write " + (dir / name).string());
        return f;
    };
    {
        auto f = open("certificate.txt");
        write_certificate(f, b.certificate);
    }
    {
        auto f = open("abstract.txt");
        write_abstract_cover(f, b.abstract);
    }
    if (b.cover) {
        auto f = open("cover.txt");
        write_cover(f, *b.cover);
    }
}

inline Bundle read_bundle(const std::filesystem::path& dir)
{
    auto open = [&](const char* name) {
        std::ifstream f(dir / name);
        if (!f)
            throw std::runtime_error("cannot read " + (dir / name).string());
        return f;
    };
    Bundle b;
    {
        auto f = open("certificate.txt");
        b.certificate = read_certificate(f);
    }
    {
        auto f = open("abstract.txt");
        b.abstract = read_abstract_cover(f);
    }
    if (std::filesystem::exists(dir / "cover.txt")) {
        auto f = open("cover.txt");
        b.cover = read_cover(f);
    }
    return b;
}

} // namespace convex_codes

#endif
