#ifndef CONVEX_CODES_COVER_CODE_HPP
#define CONVEX_CODES_COVER_CODE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "convex_codes/arrangement.hpp"
#include "convex_codes/code.hpp"
#include "convex_codes/polyhedra.hpp"

namespace convex_codes {

/// The requested operation is outside what the exact engine supports (e.g. ball constraints).
class CapabilityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A region failed the full-dimensionality precondition; `certificate` is a Farkas certificate for its strict system.
class PreconditionError : public std::invalid_argument
{
public:
    PreconditionError(int region, std::vector<Rational> certificate, const std::string& what)
        : std::invalid_argument(what), region_(region), certificate_(std::move(certificate))
    {
    }
    int region() const { return region_; }
    const std::vector<Rational>& certificate() const { return certificate_; }

private:
    int region_;
    std::vector<Rational> certificate_;
};

namespace detail {

/// A half-space expressed against a normalized arrangement hyperplane.
struct PlacedHalfSpace
{
    std::size_t plane;
    int orientation; ///< sign of the normalization factor
    bool strict;
};

struct PlacedCover
{
    std::vector<std::vector<PlacedHalfSpace>> regions;
    std::vector<PlacedHalfSpace> ambient;
    std::vector<Hyperplane> planes;
};

inline PlacedCover place(const PolyhedralCover& p)
{
    PlacedCover out;
    auto put = [&](const HalfSpace& h) {
        const auto nh = normalize(h.normal, h.offset);
        auto it = std::find(out.planes.begin(), out.planes.end(), nh.plane);
        const std::size_t idx = static_cast<std::size_t>(it - out.planes.begin());
        if (it == out.planes.end())
            out.planes.push_back(nh.plane);
        return PlacedHalfSpace{idx, sign(nh.factor), h.strict};
    };
    for (const auto& r : p.regions) {
        out.regions.emplace_back();
        for (const auto& h : r.halfspaces)
            out.regions.back().push_back(put(h));
    }
    if (p.ambient_region)
        for (const auto& h : p.ambient_region->halfspaces)
            out.ambient.push_back(put(h));
    return out;
}

/// normal·x - offset = factor * (plane expression), so its sign is orientation * cell sign.
inline bool cell_in(const std::vector<PlacedHalfSpace>& hs, const std::vector<signed char>& signs)
{
    for (const auto& h : hs) {
        const int s = h.orientation * signs[h.plane];
        if (h.strict ? s >= 0 : s > 0)
            return false;
    }
    return true;
}

/// Same test with every relation read as weak (closure) or strict (interior).
inline bool cell_in_as(const std::vector<PlacedHalfSpace>& hs, const std::vector<signed char>& signs, bool strict)
{
    for (const auto& h : hs) {
        const int s = h.orientation * signs[h.plane];
        if (strict ? s >= 0 : s > 0)
            return false;
    }
    return true;
}

inline void require_polyhedral(const PolyhedralCover& p)
{
    if (p.has_balls())
        throw CapabilityError("cover has ball constraints; the exact engine handles polyhedra only (use sampling)");
}

} // namespace detail

/// code(U, X) with the underlying cell decomposition.
struct CoverCode
{
    Code code;
    CellComplex complex;
    std::vector<bool> in_ambient; ///< per cell
    std::map<Codeword, std::vector<std::size_t>> cells_of; ///< in-ambient cells by codeword
};

/**
 * Exact code of a polyhedral cover: every boundary hyperplane goes into one
 * arrangement, and each cell gets the codeword of the regions containing it.
 */
inline CoverCode code_of_cover(const PolyhedralCover& p, const ArrangementOptions& opt = {})
{
    p.validate();
    detail::require_polyhedral(p);
    const auto placed = detail::place(p);
    CoverCode out;
    out.complex = enumerate_cells(placed.planes, p.dimension, opt);
    // enumerate_cells keeps first-occurrence order, so plane indices carry over.
    std::vector<Codeword> words;
    for (std::size_t c = 0; c < out.complex.cells().size(); ++c) {
        Cell& cell = out.complex.cells()[c];
        Codeword w;
        for (int i = 0; i < p.n(); ++i)
            if (detail::cell_in(placed.regions[i], cell.signs))
                w = w.with(i + 1);
        cell.codeword = w;
        bool amb = true;
        if (p.ambient == AmbientKind::UnionOfSets)
            amb = !w.empty();
        else if (p.ambient == AmbientKind::ExplicitRegion)
            amb = detail::cell_in(placed.ambient, cell.signs);
        out.in_ambient.push_back(amb);
        if (amb) {
            words.push_back(w);
            out.cells_of[w].push_back(c);
        }
    }
    out.code = Code(p.n(), std::move(words));
    return out;
}

enum class TransformMode { Closure, Interior };

/**
 * Closure flips strict relations to weak, interior flips weak to strict. Both
 * require every region to be full-dimensional (its all-strict system
 * feasible) or empty even in its all-weak form; then the flips agree with the
 * topological operations.
 */
inline PolyhedralCover transform_cover(const PolyhedralCover& p, TransformMode mode)
{
    p.validate();
    detail::require_polyhedral(p);
    PolyhedralCover out = p;
    for (int i = 0; i < p.n(); ++i) {
        const auto& r = p.regions[i];
        const auto strict = r.strict_constraints();
        const auto res = feasible(strict, p.dimension, {std::max(8, p.dimension), true});
        if (!res && feasible(r.constraints(), p.dimension, {std::max(8, p.dimension), false}))
            throw PreconditionError(i + 1, res.multipliers,
                                    "region " + std::to_string(i + 1) + " is not full-dimensional");
        for (auto& h : out.regions[i].halfspaces)
            h.strict = mode == TransformMode::Interior;
    }
    return out;
}

struct NondegeneracyOffender
{
    int condition = 0; ///< 1 or 2
    Codeword sigma;
    std::size_t cell = 0;
};

struct NondegeneracyReport
{
    bool cond_i = true;
    bool cond_ii = true;
    std::vector<NondegeneracyOffender> offenders;
    CellComplex complex;
};

/**
 * Non-degeneracy read on the cell lattice of ℝ^d:
 * (i) each cell of an atom lies in the closure of a full-dimensional cell of the same atom;
 * (ii) each cell in ∩_{i∈σ} ∂U_i lies in ∂(∩_{i∈σ} U_i).
 * For (ii), a cell in cl(U_i) \ int(U_i) for all i ∈ σ is outside int(∩U_i),
 * and lies in cl(∩U_i) exactly when ∩U_i is non-empty (for non-empty
 * polyhedra the closure is the weak system).
 */
inline NondegeneracyReport check_nondegeneracy(const PolyhedralCover& p, const ArrangementOptions& opt = {})
{
    p.validate();
    detail::require_polyhedral(p);
    for (int i = 0; i < p.n(); ++i) {
        const auto& r = p.regions[i];
        if (!feasible(r.constraints(), p.dimension, {std::max(8, p.dimension), false}))
            continue;
        if (!feasible(r.strict_constraints(), p.dimension, {std::max(8, p.dimension), false}))
            throw PreconditionError(i + 1, {}, "region " + std::to_string(i + 1) +
                                                   " is neither empty nor full-dimensional");
    }
    PolyhedralCover whole = p;
    whole.ambient = AmbientKind::WholeSpace;
    whole.ambient_region.reset();
    const CoverCode cc = code_of_cover(whole, opt);
    const auto placed = detail::place(p);
    const auto& cells = cc.complex.cells();

    NondegeneracyReport rep;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].full_dim)
            continue;
        bool ok = false;
        for (std::size_t f : cc.cells_of.at(cells[c].codeword))
            if (cells[f].full_dim && CellComplex::is_face_of(cells[c], cells[f])) {
                ok = true;
                break;
            }
        if (!ok) {
            rep.cond_i = false;
            rep.offenders.push_back({1, cells[c].codeword, c});
        }
    }

    auto nonempty = [&](Codeword sigma) {
        for (const auto& [w, list] : cc.cells_of)
            if (sigma.subset_of(w))
                return true;
        return false;
    };
    for (std::size_t c = 0; c < cells.size(); ++c) {
        Codeword b;
        for (int i = 0; i < p.n(); ++i)
            if (detail::cell_in_as(placed.regions[i], cells[c].signs, false) &&
                !detail::cell_in_as(placed.regions[i], cells[c].signs, true))
                b = b.with(i + 1);
        if (b.empty() || nonempty(b))
            continue;
        // Shrink to an inclusion-minimal σ ⊆ B(c) with empty intersection.
        Codeword sigma = b;
        for (int i : b.neurons())
            if (!nonempty(sigma.without(i)) && !sigma.without(i).empty())
                sigma = sigma.without(i);
        rep.cond_ii = false;
        rep.offenders.push_back({2, sigma, c});
    }
    rep.complex = cc.complex;
    return rep;
}

struct InvarianceReport
{
    bool open = false; ///< true: compared against the closure; false: against the interior
    Code original;
    Code transformed;
    bool equal() const { return original == transformed; }
};

/**
 * Compares code(U, X) with the code of the closures (open covers) or of the
 * interiors (closed covers), both under the cover's own ambient mode.
 * Regions without constraints count as both open and closed.
 */
inline InvarianceReport verify_closure_interior_invariance(const PolyhedralCover& p, const ArrangementOptions& opt = {})
{
    bool any_strict = false, any_weak = false;
    for (const auto& r : p.regions)
        for (const auto& h : r.halfspaces)
            (h.strict ? any_strict : any_weak) = true;
    if (any_strict && any_weak)
        throw std::invalid_argument("cover mixes strict and weak relations; only all-open or all-closed covers");
    InvarianceReport rep;
    rep.open = !any_weak;
    rep.original = code_of_cover(p, opt).code;
    rep.transformed =
        code_of_cover(transform_cover(p, rep.open ? TransformMode::Closure : TransformMode::Interior), opt).code;
    return rep;
}

} // namespace convex_codes

#endif
