#ifndef CONVEX_CODES_POLYHEDRA_HPP
#define CONVEX_CODES_POLYHEDRA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convex_codes/codeword.hpp"
#include "convex_codes/rational.hpp"

namespace convex_codes {

enum class Relation { Less, LessEqual, Equal };

/// normal · x (<, <=, =) offset
struct LinearConstraint
{
    Vector normal;
    Rational offset;
    Relation relation = Relation::LessEqual;

    bool satisfied_by(const Vector& x) const
    {
        const Rational lhs = dot(normal, x);
        switch (relation) {
        case Relation::Less:
            return lhs < offset;
        case Relation::LessEqual:
            return lhs <= offset;
        default:
            return lhs == offset;
        }
    }
};

/// {x : normal · x < offset} when strict, {x : normal · x <= offset} otherwise.
struct HalfSpace
{
    Vector normal;
    Rational offset;
    bool strict = true;

    HalfSpace() = default;
    HalfSpace(Vector n, Rational o, bool s) : normal(std::move(n)), offset(std::move(o)), strict(s)
    {
        if (is_zero(normal))
            throw std::invalid_argument("half-space normal must be non-zero");
    }

    bool contains(const Vector& x) const
    {
        const Rational lhs = dot(normal, x);
        return strict ? lhs < offset : lhs <= offset;
    }

    LinearConstraint as_constraint() const
    {
        return {normal, offset, strict ? Relation::Less : Relation::LessEqual};
    }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Euclidean ball |x - center| (<, <=) radius.
struct Ball
{
    Vector center;
    Rational radius;
    bool strict = true;

    bool contains(const Vector& x) const
    {
        Rational d2 = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const Rational t = x[i] - center[i];
            d2 += t * t;
        }
        const Rational r2 = radius * radius;
        return strict ? d2 < r2 : d2 <= r2;
    }

    friend bool operator==(const Ball&, const Ball&) = default;
};

/// Intersection of half-spaces, optionally with one ball. No half-spaces means all of R^d.
struct ConvexRegion
{
    int dimension = 0;
    std::vector<HalfSpace> halfspaces;
    std::optional<Ball> ball;

    bool contains(const Vector& x) const
    {
        for (const auto& h : halfspaces)
            if (!h.contains(x))
                return false;
        return !ball || ball->contains(x);
    }

    bool all_strict() const
    {
        for (const auto& h : halfspaces)
            if (!h.strict)
                return false;
        return true;
    }

    bool all_weak() const
    {
        for (const auto& h : halfspaces)
            if (h.strict)
                return false;
        return true;
    }

    std::vector<LinearConstraint> constraints() const
    {
        std::vector<LinearConstraint> out;
        for (const auto& h : halfspaces)
            out.push_back(h.as_constraint());
        return out;
    }

    /// Same half-spaces with every relation made strict (the candidate interior).
    std::vector<LinearConstraint> strict_constraints() const
    {
        std::vector<LinearConstraint> out;
        for (const auto& h : halfspaces)
            out.push_back({h.normal, h.offset, Relation::Less});
        return out;
    }

    friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;
};

enum class AmbientKind { WholeSpace, UnionOfSets, ExplicitRegion };

inline const char* to_string(AmbientKind a)
{
    switch (a) {
    case AmbientKind::WholeSpace:
        return "whole";
    case AmbientKind::UnionOfSets:
        return "union";
    default:
        return "region";
    }
}

/// A cover U = {U_1, ..., U_n} of an ambient X ⊆ R^d by convex regions.
struct PolyhedralCover
{
    int dimension = 0;
    std::vector<ConvexRegion> regions;
    AmbientKind ambient = AmbientKind::WholeSpace;
    std::optional<ConvexRegion> ambient_region; ///< set iff ambient == ExplicitRegion

    int n() const { return static_cast<int>(regions.size()); }

    bool has_balls() const
    {
        for (const auto& r : regions)
            if (r.ball)
                return true;
        return ambient_region && ambient_region->ball;
    }

    /// Codeword {i : x ∈ U_i}.
    Codeword codeword_at(const Vector& x) const
    {
        Codeword w;
        for (int i = 0; i < n(); ++i)
            if (regions[i].contains(x))
                w = w.with(i + 1);
        return w;
    }

    bool in_ambient(const Vector& x, Codeword w) const
    {
        switch (ambient) {
        case AmbientKind::WholeSpace:
            return true;
        case AmbientKind::UnionOfSets:
            return !w.empty();
        default:
            return ambient_region->contains(x);
        }
    }

    void validate() const
    {
        if (dimension < 1)
            throw std::invalid_argument("cover dimension must be positive");
        if (n() > kMaxNeurons)
            throw std::invalid_argument("at most 64 sets per cover");
        auto check = [&](const ConvexRegion& r) {
            if (r.dimension != dimension)
                throw std::invalid_argument("region dimension differs from cover dimension");
            for (const auto& h : r.halfspaces)
                if (static_cast<int>(h.normal.size()) != dimension)
                    throw std::invalid_argument("half-space normal has wrong length");
            if (r.ball && static_cast<int>(r.ball->center.size()) != dimension)
                throw std::invalid_argument("ball center has wrong length");
        };
        for (const auto& r : regions)
            check(r);
        if ((ambient == AmbientKind::ExplicitRegion) != ambient_region.has_value())
            throw std::invalid_argument("explicit ambient region must be given iff ambient=region");
        if (ambient_region)
            check(*ambient_region);
    }

    friend bool operator==(const PolyhedralCover&, const PolyhedralCover&) = default;
};

/// Convenience: the open or closed interval (lo, hi) / [lo, hi] in R^1.
inline ConvexRegion interval(const Rational& lo, const Rational& hi, bool open)
{
    ConvexRegion r;
    r.dimension = 1;
    r.halfspaces.emplace_back(Vector{-1}, -lo, open);
    r.halfspaces.emplace_back(Vector{1}, hi, open);
    return r;
}

} // namespace convex_codes

#endif
