#ifndef CONVEX_CODES_COVER_IO_HPP
#define CONVEX_CODES_COVER_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "convex_codes/code_io.hpp"
#include "convex_codes/polyhedra.hpp"

namespace convex_codes {

/**
 * Cover file format:
 *
 *     d=2 n=2 ambient=whole
 *     SET 1
 *     H 1/1 0/1 : 0/1 le
 *     SET 2
 *     H -1/1 0/1 : 0/1 le
 *     BALL 0/1 0/1 r 1/1 lt
 *
 * "H a_1 ... a_d : b rel" is the half-space a·x < b (lt) or a·x <= b (le).
 * With ambient=region a trailing REGION block describes X the same way.
 */
inline PolyhedralCover read_cover(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    PolyhedralCover p;
    bool have_header = false;
    int n = 0;
    ConvexRegion* current = nullptr;

    auto relation = [&](const std::string& tok) {
        if (tok == "lt")
            return true;
        if (tok == "le")
            return false;
        throw ParseError(line_no, "expected relation 'lt' or 'le', got '" + tok + "'");
    };
    auto rational = [&](const std::string& tok) {
        try {
            return parse_rational(tok);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream toks(line);
        std::vector<std::string> t;
        for (std::string s; toks >> s;)
            t.push_back(s);
        if (!have_header) {
            if (t.size() != 3 || t[0].rfind("d=", 0) != 0 || t[1].rfind("n=", 0) != 0 ||
                t[2].rfind("ambient=", 0) != 0)
                throw ParseError(line_no, "expected header 'd=<int> n=<int> ambient=<whole|union|region>'");
            p.dimension = detail::parse_int(t[0].substr(2), line_no);
            n = detail::parse_int(t[1].substr(2), line_no);
            if (p.dimension < 1)
                throw ParseError(line_no, "d must be positive");
            if (n < 0 || n > kMaxNeurons)
                throw ParseError(line_no, "n must lie in [0, 64]");
            const std::string amb = t[2].substr(8);
            if (amb == "whole")
                p.ambient = AmbientKind::WholeSpace;
            else if (amb == "union")
                p.ambient = AmbientKind::UnionOfSets;
            else if (amb == "region")
                p.ambient = AmbientKind::ExplicitRegion;
            else
                throw ParseError(line_no, "unknown ambient '" + amb + "'");
            have_header = true;
            continue;
        }
        if (t[0] == "SET") {
            if (t.size() != 2)
                throw ParseError(line_no, "expected 'SET <index>'");
            const int i = detail::parse_int(t[1], line_no);
            if (i != p.n() + 1)
                throw ParseError(line_no, "sets must be listed in order; expected SET " + std::to_string(p.n() + 1));
            if (i > n)
                throw ParseError(line_no, "more sets than n=" + std::to_string(n));
            if (p.ambient_region)
                throw ParseError(line_no, "SET after REGION");
            p.regions.push_back(ConvexRegion{p.dimension, {}, {}});
            current = &p.regions.back();
        } else if (t[0] == "REGION") {
            if (p.ambient != AmbientKind::ExplicitRegion)
                throw ParseError(line_no, "REGION block requires ambient=region");
            if (p.ambient_region)
                throw ParseError(line_no, "duplicate REGION block");
            p.ambient_region = ConvexRegion{p.dimension, {}, {}};
            current = &*p.ambient_region;
        } else if (t[0] == "H") {
            if (!current)
                throw ParseError(line_no, "H line outside a SET or REGION block");
            const std::size_t d = static_cast<std::size_t>(p.dimension);
            if (t.size() != d + 4 || t[d + 1] != ":")
                throw ParseError(line_no, "expected 'H' with " + std::to_string(d) + " coefficients, ':', offset, relation");
            Vector a(d);
            for (std::size_t j = 0; j < d; ++j)
                a[j] = rational(t[1 + j]);
            if (is_zero(a))
                throw ParseError(line_no, "half-space normal must be non-zero");
            current->halfspaces.emplace_back(std::move(a), rational(t[d + 2]), relation(t[d + 3]));
        } else if (t[0] == "BALL") {
            if (!current)
                throw ParseError(line_no, "BALL line outside a SET or REGION block");
            const std::size_t d = static_cast<std::size_t>(p.dimension);
            if (t.size() != d + 4 || t[d + 1] != "r")
                throw ParseError(line_no, "expected 'BALL' with " + std::to_string(d) + " center coordinates, 'r', radius, relation");
            if (current->ball)
                throw ParseError(line_no, "at most one BALL per block");
            Ball b;
            for (std::size_t j = 0; j < d; ++j)
                b.center.push_back(rational(t[1 + j]));
            b.radius = rational(t[d + 2]);
            if (b.radius <= 0)
                throw ParseError(line_no, "ball radius must be positive");
            b.strict = relation(t[d + 3]);
            current->ball = std::move(b);
        } else {
            throw ParseError(line_no, "unknown directive '" + t[0] + "'");
        }
    }
    if (!have_header)
        throw ParseError(line_no, "missing header 'd=<int> n=<int> ambient=...'");
    if (p.n() != n)
        throw ParseError(line_no, "expected " + std::to_string(n) + " sets, found " + std::to_string(p.n()));
    if (p.ambient == AmbientKind::ExplicitRegion && !p.ambient_region)
        throw ParseError(line_no, "ambient=region requires a REGION block");
    return p;
}

inline PolyhedralCover read_cover_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_cover(in);
}

inline PolyhedralCover parse_cover(const std::string& text)
{
    std::istringstream in(text);
    return read_cover(in);
}

/// Canonical form: every rational written num/den, so read_cover(write_cover(P)) == P and re-writing is byte-identical.
inline void write_cover(std::ostream& out, const PolyhedralCover& p)
{
    out << "d=" << p.dimension << " n=" << p.n() << " ambient=" << to_string(p.ambient) << '\n';
    auto block = [&](const ConvexRegion& r) {
        for (const auto& h : r.halfspaces) {
            out << 'H';
            for (const auto& a : h.normal)
                out << ' ' << format_rational(a);
            out << " : " << format_rational(h.offset) << (h.strict ? " lt" : " le") << '\n';
        }
        if (r.ball) {
            out << "BALL";
            for (const auto& c : r.ball->center)
                out << ' ' << format_rational(c);
            out << " r " << format_rational(r.ball->radius) << (r.ball->strict ? " lt" : " le") << '\n';
        }
    };
    for (int i = 0; i < p.n(); ++i) {
        out << "SET " << i + 1 << '\n';
        block(p.regions[i]);
    }
    if (p.ambient_region) {
        out << "REGION\n";
        block(*p.ambient_region);
    }
}

inline std::string format_cover(const PolyhedralCover& p)
{
    std::ostringstream out;
    write_cover(out, p);
    return out.str();
}

} // namespace convex_codes

#endif
