#ifndef CONVEX_CODES_ARRANGEMENT_HPP
#define CONVEX_CODES_ARRANGEMENT_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convex_codes/feasibility.hpp"

namespace convex_codes {

/// The hyperplane {x : normal · x = offset}, normalized so the first non-zero normal entry is 1.
struct Hyperplane
{
    Vector normal;
    Rational offset;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Normalized hyperplane of (normal, offset) together with the factor f such that normal = f * h.normal.
struct NormalizedHyperplane
{
    Hyperplane plane;
    Rational factor;
};

inline NormalizedHyperplane normalize(const Vector& normal, const Rational& offset)
{
    auto it = std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; });
    if (it == normal.end())
        throw std::invalid_argument("hyperplane normal must be non-zero");
    const Rational f = *it;
    NormalizedHyperplane out{{normal, offset / f}, f};
    for (auto& x : out.plane.normal)
        x /= f;
    return out;
}

/// A relatively open cell: all x with sign(normal_j · x - offset_j) = signs[j] for every j.
struct Cell
{
    std::vector<signed char> signs;
    Vector witness;
    Codeword codeword;
    bool full_dim = false;
};

struct ArrangementOptions
{
    std::size_t max_hyperplanes = 14;
    int max_dimension = 8;
};

class CellComplex
{
public:
    CellComplex() = default;
    CellComplex(int dimension, std::vector<Hyperplane> planes, std::vector<Cell> cells)
        : dimension_(dimension), planes_(std::move(planes)), cells_(std::move(cells))
    {
    }

    int dimension() const { return dimension_; }
    const std::vector<Hyperplane>& hyperplanes() const { return planes_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::vector<Cell>& cells() { return cells_; }

    std::vector<signed char> sign_vector(const Vector& x) const
    {
        std::vector<signed char> s(planes_.size());
        for (std::size_t j = 0; j < planes_.size(); ++j)
            s[j] = static_cast<signed char>(sign(dot(planes_[j].normal, x) - planes_[j].offset));
        return s;
    }

    /// Index of the cell containing x. Cells are sorted by sign vector, so this is a binary search.
    std::size_t locate(const Vector& x) const
    {
        const auto s = sign_vector(x);
        auto it = std::lower_bound(cells_.begin(), cells_.end(), s,
                                   [](const Cell& c, const std::vector<signed char>& v) { return c.signs < v; });
        if (it == cells_.end() || it->signs != s)
            throw std::logic_error("point lies in no enumerated cell");
        return static_cast<std::size_t>(it - cells_.begin());
    }

    /// c' is a face of c (c' ⊆ cl(c)) iff every sign of c' is 0 or agrees with c.
    static bool is_face_of(const Cell& face, const Cell& c)
    {
        for (std::size_t j = 0; j < face.signs.size(); ++j)
            if (face.signs[j] != 0 && face.signs[j] != c.signs[j])
                return false;
        return true;
    }

private:
    int dimension_ = 0;
    std::vector<Hyperplane> planes_;
    std::vector<Cell> cells_;
};

namespace detail {

inline LinearConstraint sign_constraint(const Hyperplane& h, int s)
{
    if (s < 0)
        return {h.normal, h.offset, Relation::Less};
    if (s == 0)
        return {h.normal, h.offset, Relation::Equal};
    Vector neg = h.normal;
    for (auto& x : neg)
        x = -x;
    return {std::move(neg), -h.offset, Relation::Less};
}

} // namespace detail

/// Distinct normalized hyperplanes, first occurrence order.
inline std::vector<Hyperplane> deduplicate(const std::vector<Hyperplane>& planes)
{
    std::vector<Hyperplane> out;
    for (const auto& h : planes) {
        Hyperplane n = normalize(h.normal, h.offset).plane;
        if (std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(std::move(n));
    }
    return out;
}

/**
 * All feasible sign vectors of the arrangement, in lexicographic sign order
 * (− < 0 < +). A depth-first search over sign prefixes prunes infeasible
 * branches; the parent's witness is reused when it already satisfies the
 * child's extra constraint.
 */
inline CellComplex enumerate_cells(const std::vector<Hyperplane>& input, int dimension,
                                   const ArrangementOptions& opt = {})
{
    if (dimension < 1)
        throw std::invalid_argument("arrangement dimension must be positive");
    std::vector<Hyperplane> planes = deduplicate(input);
    for (const auto& h : planes)
        if (static_cast<int>(h.normal.size()) != dimension)
            throw std::invalid_argument("hyperplane normal has wrong length");
    if (planes.size() > opt.max_hyperplanes)
        throw std::length_error(std::to_string(planes.size()) + " distinct hyperplanes exceed the cap of " +
                                std::to_string(opt.max_hyperplanes));
    const FeasibilityOptions fopt{opt.max_dimension, false};
    const std::size_t m = planes.size();

    std::vector<Cell> cells;
    std::vector<LinearConstraint> prefix;
    std::vector<signed char> signs;

    auto recurse = [&](auto&& self, const Vector& witness) -> void {
        const std::size_t j = signs.size();
        if (j == m) {
            Cell c;
            c.signs = signs;
            c.witness = witness;
            c.full_dim = std::find(signs.begin(), signs.end(), 0) == signs.end();
            cells.push_back(std::move(c));
            return;
        }
        for (int s : {-1, 0, 1}) {
            LinearConstraint extra = detail::sign_constraint(planes[j], s);
            std::optional<Vector> w;
            if (extra.satisfied_by(witness)) {
                w = witness;
            } else {
                prefix.push_back(extra);
                w = feasible(prefix, dimension, fopt).witness;
                prefix.pop_back();
            }
            if (!w)
                continue;
            prefix.push_back(std::move(extra));
            signs.push_back(static_cast<signed char>(s));
            self(self, *w);
            signs.pop_back();
            prefix.pop_back();
        }
    };
    recurse(recurse, Vector(dimension, Rational(0)));
    return CellComplex(dimension, std::move(planes), std::move(cells));
}

} // namespace convex_codes

#endif
