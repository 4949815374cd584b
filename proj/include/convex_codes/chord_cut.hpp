#ifndef CONVEX_CODES_CHORD_CUT_HPP
#define CONVEX_CODES_CHORD_CUT_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "convex_codes/cover_code.hpp"

namespace convex_codes {

/// No admissible cap was found; `witness` is a point of the target atom (empty if the atom misses the ball).
class ChordCutError : public std::runtime_error
{
public:
    ChordCutError(Vector witness, const std::string& what) : std::runtime_error(what), witness_(std::move(witness)) {}
    const Vector& witness() const { return witness_; }

private:
    Vector witness_;
};

struct ChordCutOptions
{
    int max_halvings = 16;
    ArrangementOptions arrangement;
};

struct ChordCutResult
{
    PolyhedralCover cover;
    HalfSpace cap;          ///< P^+ = {u·x >= t}, stored as -u·x <= -t
    Vector witness;         ///< a rational point of P^+ ∩ B, codeword σ0 in the new cover
    Vector atom_point;      ///< the starting point of the search, in A_α and inside B
    Rational height;        ///< cap height bound h
};

namespace detail {

inline std::vector<LinearConstraint> cell_constraints(const CellComplex& cx, const Cell& cell)
{
    std::vector<LinearConstraint> out;
    for (std::size_t j = 0; j < cx.hyperplanes().size(); ++j)
        out.push_back(sign_constraint(cx.hyperplanes()[j], cell.signs[j]));
    return out;
}

/// Sufficient test that {x ∈ B : u·x >= t} ⊆ {a·x < b}, where the cap has height at most h.
inline bool cap_below(const LinearConstraint& c, const Ball& ball, const Vector& u, const Rational& u_lo,
                      const Rational& u_hi, const Rational& h)
{
    // The cap lies in the ball of radius sqrt(2rh) around p* = center + r u/|u|.
    const Rational au = dot(c.normal, u);
    Rational bound = dot(c.normal, ball.center);
    bound += au >= 0 ? ball.radius * au / u_lo : ball.radius * au / u_hi;
    bound += sqrt_upper(dot(c.normal, c.normal)) * sqrt_upper(2 * ball.radius * h);
    return bound < c.offset;
}

} // namespace detail

/**
 * Carves a small closed cap P^+ ∩ B out of the atom A_α of an open
 * polyhedral cover restricted to the ball B, and removes it from every U_i
 * with i ∉ σ0. Points of the cap then carry exactly σ0, so the code becomes
 * code(U ∩ B) ∪ {σ0}. Regions may already carry the same ball B (repeated cuts).
 */
inline ChordCutResult chord_cut(const PolyhedralCover& p, const Ball& ball, Codeword sigma0, Codeword alpha,
                                const ChordCutOptions& opt = {})
{
    if (sigma0.empty())
        throw std::invalid_argument("chord cut needs a non-empty codeword to add");
    if (!sigma0.proper_subset_of(alpha))
        throw std::invalid_argument("chord cut needs σ0 ⊊ α, got σ0=" + to_string(sigma0) + " α=" + to_string(alpha));
    if (static_cast<int>(ball.center.size()) != p.dimension || ball.radius <= 0)
        throw std::invalid_argument("ball does not match the cover dimension");
    PolyhedralCover flat = p;
    for (auto& r : flat.regions) {
        if (r.ball && !(*r.ball == ball))
            throw std::invalid_argument("regions carry a ball different from B");
        r.ball.reset();
        if (!r.all_strict())
            throw std::invalid_argument("chord cut requires an open cover");
    }
    flat.ambient = AmbientKind::WholeSpace;
    flat.ambient_region.reset();

    const CoverCode cc = code_of_cover(flat, opt.arrangement);
    const int d = p.dimension;
    const Rational half_width = ball.radius / sqrt_upper(Rational(d));
    std::vector<LinearConstraint> box;
    for (int j = 0; j < d; ++j) {
        Vector e(d, Rational(0));
        e[j] = 1;
        box.push_back({e, ball.center[j] + half_width, Relation::Less});
        e[j] = -1;
        box.push_back({e, -(ball.center[j] - half_width), Relation::Less});
    }

    Vector last_witness;
    auto it = cc.cells_of.find(alpha);
    if (it == cc.cells_of.end())
        throw ChordCutError({}, "atom " + to_string(alpha) + " is empty");
    for (std::size_t ci : it->second) {
        const Cell& cell = cc.complex.cells()[ci];
        if (!cell.full_dim)
            continue;
        const auto cons = detail::cell_constraints(cc.complex, cell);
        auto sys = cons;
        sys.insert(sys.end(), box.begin(), box.end());
        const auto w0 = feasible(sys, d, {std::max(8, d), false}).witness;
        if (!w0)
            continue;
        last_witness = *w0;

        std::vector<Vector> dirs;
        Vector radial(d);
        for (int j = 0; j < d; ++j)
            radial[j] = (*w0)[j] - ball.center[j];
        if (!is_zero(radial))
            dirs.push_back(radial);
        for (int j = 0; j < d; ++j)
            for (int s : {1, -1}) {
                Vector e(d, Rational(0));
                e[j] = s;
                dirs.push_back(std::move(e));
            }

        for (const Vector& u : dirs) {
            const Rational uu = dot(u, u);
            const Rational u_lo = sqrt_lower(uu), u_hi = sqrt_upper(uu);
            const Rational uc = dot(u, ball.center);
            Rational h = ball.radius;
            for (int m = 1; m <= opt.max_halvings; ++m) {
                h /= 2;
                bool inside = true;
                for (const auto& c : cons)
                    if (!detail::cap_below(c, ball, u, u_lo, u_hi, h)) {
                        inside = false;
                        break;
                    }
                if (!inside)
                    continue;
                const Rational t = uc + (ball.radius - h) * u_hi;
                const Rational s = ((ball.radius - h) * u_hi / uu + ball.radius / u_hi) / 2;
                Vector w(d);
                for (int j = 0; j < d; ++j)
                    w[j] = ball.center[j] + s * u[j];
                bool cell_ok = true;
                for (const auto& c : cons)
                    cell_ok = cell_ok && c.satisfied_by(w);
                if (!(dot(u, w) >= t) || !ball.contains(w) || !cell_ok)
                    continue;

                ChordCutResult res;
                res.cap = HalfSpace(Vector(u), t, false);
                for (auto& x : res.cap.normal)
                    x = -x;
                res.cap.offset = -t;
                res.witness = std::move(w);
                res.atom_point = *w0;
                res.height = h;
                res.cover = p;
                for (int i = 0; i < p.n(); ++i) {
                    auto& r = res.cover.regions[i];
                    r.ball = ball;
                    if (!sigma0.contains(i + 1))
                        r.halfspaces.emplace_back(u, t, true);
                }
                if (p.ambient != AmbientKind::UnionOfSets) {
                    res.cover.ambient = AmbientKind::ExplicitRegion;
                    ConvexRegion x{d, {}, ball};
                    if (p.ambient_region)
                        x.halfspaces = p.ambient_region->halfspaces;
                    res.cover.ambient_region = std::move(x);
                }
                return res;
            }
        }
    }
    throw ChordCutError(last_witness, "no admissible cap inside atom " + to_string(alpha) + " within the ball");
}

} // namespace convex_codes

#endif
