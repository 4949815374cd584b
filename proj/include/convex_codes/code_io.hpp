#ifndef CONVEX_CODES_CODE_IO_HPP
#define CONVEX_CODES_CODE_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "convex_codes/abstract_cover.hpp"
#include "convex_codes/code.hpp"

namespace convex_codes {

/// Malformed input; `line` is 1-based (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, std::size_t line)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

} // namespace detail

/**
 * Reads the code text format:
 *
 *     # comment
 *     n=4
 *     0
 *     2 3
 *     1 4
 *
 * One codeword per line as 1-based indices; "0" alone is the empty word.
 */
inline Code read_code(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    int n = -1;
    std::vector<Codeword> words;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0)
                throw ParseError(line_no, "expected header 'n=<int>'");
            n = detail::parse_int(line.substr(2), line_no);
            if (n < 0 || n > kMaxNeurons)
                throw ParseError(line_no, "n must lie in [0, 64]");
            continue;
        }
        std::istringstream toks(line);
        std::string tok;
        Codeword w;
        bool saw_zero = false;
        int count = 0;
        while (toks >> tok) {
            const int i = detail::parse_int(tok, line_no);
            ++count;
            if (i == 0) {
                saw_zero = true;
                continue;
            }
            if (i < 1 || i > n)
                throw ParseError(line_no, "neuron index " + tok + " outside [1, " + std::to_string(n) + "]");
            if (w.contains(i))
                throw ParseError(line_no, "repeated neuron " + tok);
            w = w.with(i);
        }
        if (saw_zero && count != 1)
            throw ParseError(line_no, "'0' must stand alone for the empty codeword");
        words.push_back(w);
    }
    if (n < 0)
        throw ParseError(line_no, "missing header 'n=<int>'");
    return Code(n, std::move(words));
}

inline Code read_code_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_code(in);
}

inline Code parse_code(const std::string& text)
{
    std::istringstream in(text);
    return read_code(in);
}

/// Canonical serialization; read_code(write_code(C)) == C byte for byte.
inline void write_code(std::ostream& out, const Code& c)
{
    out << "n=" << c.n() << '\n';
    for (Codeword w : c) {
        if (w.empty()) {
            out << "0\n";
            continue;
        }
        const auto ns = w.neurons();
        for (std::size_t k = 0; k < ns.size(); ++k)
            out << (k ? " " : "") << ns[k];
        out << '\n';
    }
}

inline std::string format_code(const Code& c)
{
    std::ostringstream out;
    write_code(out, c);
    return out.str();
}

/**
 * Point/membership table of a finite cover:
 *
 *     n=4 points=7 ambient=all
 *     <label> <in-ambient 0|1> <indices or 0>
 */
inline void write_abstract_cover(std::ostream& out, const AbstractCover& a)
{
    out << "n=" << a.n() << " points=" << a.num_points()
        << " ambient=" << (a.ambient_is_all_points() ? "all" : "explicit") << '\n';
    const auto amb = a.ambient_points();
    for (std::size_t p = 0; p < a.num_points(); ++p) {
        const bool in_amb = std::binary_search(amb.begin(), amb.end(), p);
        out << a.labels()[p] << ' ' << (in_amb ? 1 : 0);
        const Codeword w = a.membership_of(p);
        if (w.empty())
            out << " 0";
        for (int i : w.neurons())
            out << ' ' << i;
        out << '\n';
    }
}

inline AbstractCover read_abstract_cover(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    std::optional<AbstractCover> cover;
    bool explicit_ambient = false;
    std::vector<std::size_t> ambient;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream toks(line);
        if (!cover) {
            std::string nf, pf, af;
            toks >> nf >> pf >> af;
            if (nf.rfind("n=", 0) != 0 || pf.rfind("points=", 0) != 0 || af.rfind("ambient=", 0) != 0)
                throw ParseError(line_no, "expected header 'n=<int> points=<int> ambient=<all|explicit>'");
            cover.emplace(detail::parse_int(nf.substr(2), line_no));
            explicit_ambient = af.substr(8) == "explicit";
            continue;
        }
        std::string label, flag, tok;
        toks >> label >> flag;
        if (flag != "0" && flag != "1")
            throw ParseError(line_no, "expected ambient flag 0 or 1");
        Codeword w;
        while (toks >> tok) {
            const int i = detail::parse_int(tok, line_no);
            if (i != 0)
                w = w.with(i);
        }
        const auto p = cover->add_point(label, w);
        if (flag == "1")
            ambient.push_back(p);
    }
    if (!cover)
        throw ParseError(line_no, "missing header");
    if (explicit_ambient)
        cover->set_explicit_ambient(ambient);
    return *cover;
}

} // namespace convex_codes

#endif
