#ifndef CONVEX_CODES_CODE_HPP
#define CONVEX_CODES_CODE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "convex_codes/codeword.hpp"

namespace convex_codes {

/**
 * A combinatorial code on n neurons: a finite, duplicate-free set of
 * codewords kept in canonical order (cardinality, then lexicographic).
 */
class Code
{
public:
    Code() = default;

    explicit Code(int n) : n_(check_n(n)) {}

    Code(int n, std::vector<Codeword> words) : n_(check_n(n)), words_(std::move(words))
    {
        canonicalize();
    }

    Code(int n, std::initializer_list<Codeword> words) : Code(n, std::vector<Codeword>(words)) {}

    /// Parses compact literals, e.g. Code::parse(4, {"0", "23", "14"}).
    static Code parse(int n, std::initializer_list<const char*> literals)
    {
        std::vector<Codeword> ws;
        for (const char* s : literals)
            ws.push_back(parse_compact(s));
        return Code(n, std::move(ws));
    }

    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Codeword>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool contains(Codeword w) const { return std::binary_search(words_.begin(), words_.end(), w); }
    bool contains_empty() const { return !words_.empty() && words_.front().empty(); }

    /// Set union with another code on the same neurons.
    Code merged(const Code& other) const
    {
        require_same_n(other);
        std::vector<Codeword> ws = words_;
        ws.insert(ws.end(), other.words_.begin(), other.words_.end());
        return Code(n_, std::move(ws));
    }

    Code with(Codeword w) const
    {
        std::vector<Codeword> ws = words_;
        ws.push_back(w);
        return Code(n_, std::move(ws));
    }

    Code without(Codeword w) const
    {
        std::vector<Codeword> ws;
        for (Codeword v : words_)
            if (v != w)
                ws.push_back(v);
        return Code(n_, std::move(ws));
    }

    bool subset_of(const Code& other) const
    {
        return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
    }

    friend bool operator==(const Code& a, const Code& b) = default;

    void require_same_n(const Code& other) const
    {
        if (other.n_ != n_)
            throw std::invalid_argument("codes on different neuron counts");
    }

private:
    static int check_n(int n)
    {
        if (n < 0 || n > kMaxNeurons)
            throw std::invalid_argument("neuron count must lie in [0, 64], got " + std::to_string(n));
        return n;
    }

    void canonicalize()
    {
        const Codeword universe = Codeword::full(n_);
        for (Codeword w : words_)
            if (!w.subset_of(universe))
                throw std::invalid_argument("codeword " + to_string(w) + " exceeds n=" + std::to_string(n_));
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    int n_ = 0;
    std::vector<Codeword> words_;
};

inline std::string to_string(const Code& c)
{
    std::string s = "{";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0)
            s += ", ";
        s += to_string(c.words()[k]);
    }
    return s + "}";
}

/// Inclusion-maximal elements of a set of codewords, in canonical order.
inline std::vector<Codeword> maximal_elements(std::span<const Codeword> words)
{
    std::vector<Codeword> out;
    for (Codeword w : words) {
        bool maximal = true;
        for (Codeword v : words)
            if (w.proper_subset_of(v)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// M(C): the maximal codewords.
inline Code maximal_codewords(const Code& c)
{
    return Code(c.n(), maximal_elements(c.words()));
}

/**
 * A simplicial complex on [n] stored by its facets. Faces are enumerated on
 * demand; the complex with no facets is the void complex, while {∅} is the
 * complex whose only face is the empty simplex.
 */
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    SimplicialComplex(int n, std::vector<Codeword> generators)
        : n_(n), facets_(maximal_elements(generators))
    {
    }

    int n() const { return n_; }
    const std::vector<Codeword>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    bool contains(Codeword face) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [face](Codeword f) { return face.subset_of(f); });
    }

    /// Vertices (as a single mask).
    Codeword vertex_set() const
    {
        Codeword v;
        for (Codeword f : facets_)
            v = v | f;
        return v;
    }

    int dimension() const
    {
        int d = -1;
        for (Codeword f : facets_)
            d = std::max(d, f.size() - 1);
        return d;
    }

    /**
     * Every face including ∅, canonical order. Throws std::length_error if
     * the face count exceeds the budget.
     */
    std::vector<Codeword> faces(std::size_t budget = std::size_t{1} << 20) const
    {
        std::unordered_set<Codeword> seen;
        for (Codeword f : facets_) {
            // iterate all submasks of f
            const std::uint64_t full = f.bits();
            std::uint64_t sub = full;
            while (true) {
                seen.insert(Codeword(sub));
                if (seen.size() > budget)
                    throw std::length_error("simplicial complex exceeds face budget of " + std::to_string(budget));
                if (sub == 0)
                    break;
                sub = (sub - 1) & full;
            }
        }
        std::vector<Codeword> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// The faces as a code (for comparisons with codes).
    Code as_code(std::size_t budget = std::size_t{1} << 20) const { return Code(n_, faces(budget)); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) = default;

private:
    int n_ = 0;
    std::vector<Codeword> facets_;
};

/// Δ(C): the smallest simplicial complex containing C.
inline SimplicialComplex simplicial_complex(const Code& c)
{
    return SimplicialComplex(c.n(), c.words());
}

/// Cone over K with apex v (v must be a fresh vertex).
inline SimplicialComplex cone(const SimplicialComplex& k, int apex)
{
    if (k.vertex_set().contains(apex))
        throw std::invalid_argument("cone apex must be a fresh vertex");
    std::vector<Codeword> fs;
    for (Codeword f : k.facets())
        fs.push_back(f.with(apex));
    if (fs.empty())
        fs.push_back(Codeword{}.with(apex));
    return SimplicialComplex(std::max(k.n(), apex), std::move(fs));
}

/// link_σ C = {τ : τ ∪ σ ∈ C, τ ∩ σ = ∅}.
inline Code link(const Code& c, Codeword sigma)
{
    std::vector<Codeword> out;
    for (Codeword w : c)
        if (sigma.subset_of(w))
            out.push_back(w - sigma);
    return Code(c.n(), std::move(out));
}

/// link_σ K for a simplicial complex, returned by facets.
inline SimplicialComplex link(const SimplicialComplex& k, Codeword sigma)
{
    std::vector<Codeword> out;
    for (Codeword f : k.facets())
        if (sigma.subset_of(f))
            out.push_back(f - sigma);
    return SimplicialComplex(k.n(), std::move(out));
}

/// Δ(C) \ C, including ∅ when ∅ ∉ C and C is non-empty.
inline std::vector<Codeword> simplicial_violators(const Code& c)
{
    std::vector<Codeword> out;
    for (Codeword f : simplicial_complex(c).faces())
        if (!c.contains(f))
            out.push_back(f);
    return out;
}

/// C ∩ σ = {τ ∩ σ : τ ∈ C}, kept on the ambient neuron set [n].
inline Code restrict(const Code& c, Codeword sigma)
{
    std::vector<Codeword> out;
    out.reserve(c.size());
    for (Codeword w : c)
        out.push_back(w & sigma);
    return Code(c.n(), std::move(out));
}

/// True iff σ meets every codeword of C. σ must be non-empty.
inline bool covers(Codeword sigma, const Code& c)
{
    if (sigma.empty())
        throw std::invalid_argument("a covering set must be non-empty");
    return std::all_of(c.begin(), c.end(), [sigma](Codeword w) { return w.meets(sigma); });
}

/**
 * Ĉ: all intersections of non-empty subcodes of C. The empty set is included
 * whenever some intersection is empty.
 */
inline Code intersection_completion(const Code& c)
{
    std::set<Codeword> closed(c.begin(), c.end());
    std::vector<Codeword> frontier(c.begin(), c.end());
    while (!frontier.empty()) {
        std::vector<Codeword> next;
        for (Codeword a : frontier)
            for (Codeword b : c) {
                Codeword x = a & b;
                if (closed.insert(x).second)
                    next.push_back(x);
            }
        frontier = std::move(next);
    }
    return Code(c.n(), std::vector<Codeword>(closed.begin(), closed.end()));
}

struct CompletenessFlags
{
    bool intersection_complete = false;
    bool max_intersection_complete = false;
};

inline CompletenessFlags classify_completeness(const Code& c)
{
    CompletenessFlags flags;
    flags.intersection_complete = intersection_completion(c) == c;
    flags.max_intersection_complete = intersection_completion(maximal_codewords(c)).subset_of(c);
    return flags;
}

/// A missing intersection of maximal codewords: target = ∩ members, target ∉ C.
struct MissingIntersection
{
    Codeword target;
    std::vector<Codeword> members;
};

inline std::string to_string(const MissingIntersection& m)
{
    std::string s = to_string(m.target) + " = ";
    for (std::size_t k = 0; k < m.members.size(); ++k)
        s += (k ? "∩" : "") + to_string(m.members[k]);
    return s;
}

/**
 * Smallest (canonical order) element of M̂(C) \ C together with a smallest
 * family of maximal codewords realizing it, or nothing if C is max
 * intersection-complete. A missing ∅ is reported only when no non-empty
 * intersection is missing.
 */
inline std::optional<MissingIntersection> missing_max_intersection(const Code& c)
{
    const Code m = maximal_codewords(c);
    std::vector<Codeword> order = intersection_completion(m).words();
    // ∅ sorts first; report it only when nothing non-empty is missing.
    if (!order.empty() && order.front().empty())
        std::rotate(order.begin(), order.begin() + 1, order.end());
    for (Codeword target : order) {
        if (c.contains(target))
            continue;
        const auto& ws = m.words();
        // Breadth-first over family sizes, lexicographic within a size.
        for (std::size_t r = 2; r <= ws.size(); ++r) {
            std::vector<std::size_t> idx(r);
            for (std::size_t k = 0; k < r; ++k)
                idx[k] = k;
            while (true) {
                Codeword x = ws[idx[0]];
                for (std::size_t k = 1; k < r; ++k)
                    x = x & ws[idx[k]];
                if (x == target) {
                    MissingIntersection out{target, {}};
                    for (std::size_t k : idx)
                        out.members.push_back(ws[k]);
                    return out;
                }
                std::size_t k = r;
                while (k > 0 && idx[k - 1] == ws.size() - r + (k - 1))
                    --k;
                if (k == 0)
                    break;
                ++idx[k - 1];
                for (std::size_t j = k; j < r; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

} // namespace convex_codes

#endif
