#ifndef CONVEX_CODES_MONOTONE_HPP
#define CONVEX_CODES_MONOTONE_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

#include "convex_codes/abstract_cover.hpp"
#include "convex_codes/code.hpp"
#include "convex_codes/cover_code.hpp"

namespace convex_codes {

/// A monotone-extension precondition failed; `word` is the offending codeword.
class ExtensionError : public std::invalid_argument
{
public:
    ExtensionError(Codeword word, const std::string& what)
        : std::invalid_argument(what + ": " + to_string(word)), word_(word)
    {
    }
    Codeword word() const { return word_; }

private:
    Codeword word_;
};

/**
 * Adds the codewords of D \ code(A) to the finite cover A, largest first.
 * Each new word σ0 sits strictly below some maximal α, and gets one fresh
 * point lying in exactly the sets of σ0 (the finite image of carving a small
 * cap out of the atom of α).
 */
inline AbstractCover monotone_extend(const AbstractCover& a, const Code& d)
{
    const Code c = abstract_code(a);
    c.require_same_n(d);
    for (Codeword w : c)
        if (!d.contains(w))
            throw ExtensionError(w, "codeword of the cover missing from the target");
    const SimplicialComplex delta = simplicial_complex(c);
    for (Codeword w : d)
        if (!delta.contains(w))
            throw ExtensionError(w, "target codeword is not a face of the simplicial complex");
    const Code mc = maximal_codewords(c), md = maximal_codewords(d);
    if (!(mc == md)) {
        for (Codeword w : md)
            if (!mc.contains(w))
                throw ExtensionError(w, "maximal codewords differ");
        for (Codeword w : mc)
            if (!md.contains(w))
                throw ExtensionError(w, "maximal codewords differ");
    }

    std::vector<Codeword> todo;
    for (Codeword w : d)
        if (!c.contains(w))
            todo.push_back(w);
    std::stable_sort(todo.begin(), todo.end(), [](Codeword x, Codeword y) { return x.size() > y.size(); });

    AbstractCover out = a;
    for (Codeword sigma0 : todo) {
        const auto alpha = std::find_if(mc.begin(), mc.end(), [sigma0](Codeword m) { return sigma0.proper_subset_of(m); });
        if (alpha == mc.end())
            throw ExtensionError(sigma0, "no maximal codeword strictly contains");
        out.add_point("q" + to_string(sigma0) + "<" + to_string(*alpha), sigma0, true);
    }
    return out;
}

/// One labelled point per in-ambient cell of the decomposition.
inline AbstractCover abstract_from_cells(const CoverCode& cc, int n)
{
    AbstractCover a(n);
    for (std::size_t c = 0; c < cc.complex.cells().size(); ++c)
        if (cc.in_ambient[c])
            a.add_point("c" + std::to_string(c), cc.complex.cells()[c].codeword);
    return a;
}

/// U_i × ℝ: the same cover one dimension up (the extra coordinate is unconstrained).
inline PolyhedralCover lift_cover(const PolyhedralCover& p)
{
    PolyhedralCover out = p;
    out.dimension = p.dimension + 1;
    auto lift = [&](ConvexRegion& r) {
        r.dimension = out.dimension;
        for (auto& h : r.halfspaces)
            h.normal.push_back(0);
        if (r.ball)
            throw std::invalid_argument("cannot lift a ball constraint to a cylinder");
    };
    for (auto& r : out.regions)
        lift(r);
    if (out.ambient_region)
        lift(*out.ambient_region);
    return out;
}

} // namespace convex_codes

#endif
