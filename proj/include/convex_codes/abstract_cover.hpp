#ifndef CONVEX_CODES_ABSTRACT_COVER_HPP
#define CONVEX_CODES_ABSTRACT_COVER_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convex_codes/code.hpp"

namespace convex_codes {

/**
 * A cover of a finite point set by n subsets. Each point is labelled and
 * carries the codeword of sets containing it; the ambient space is either
 * every point or an explicit subset of them.
 */
class AbstractCover
{
public:
    AbstractCover() = default;
    explicit AbstractCover(int n) : n_(n) {}

    int n() const { return n_; }
    std::size_t num_points() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Codeword of point p, i.e. {i : p ∈ U_i}.
    Codeword membership_of(std::size_t p) const { return point_words_.at(p); }

    /// Points of U_i, in insertion order.
    std::vector<std::size_t> members(int i) const
    {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < point_words_.size(); ++p)
            if (point_words_[p].contains(i))
                out.push_back(p);
        return out;
    }

    /// Adds a point lying in exactly the sets of `word`; returns its index.
    std::size_t add_point(std::string label, Codeword word, bool in_ambient = true)
    {
        if (!word.subset_of(Codeword::full(n_)))
            throw std::invalid_argument("point membership exceeds n");
        labels_.push_back(std::move(label));
        point_words_.push_back(word);
        if (ambient_)
            if (in_ambient || !word.empty())
                ambient_->push_back(labels_.size() - 1);
        return labels_.size() - 1;
    }

    bool ambient_is_all_points() const { return !ambient_.has_value(); }

    /// Restricts the ambient space to an explicit subset; must contain every covered point.
    void set_explicit_ambient(std::vector<std::size_t> points)
    {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (std::size_t p = 0; p < point_words_.size(); ++p)
            if (!point_words_[p].empty() && !std::binary_search(points.begin(), points.end(), p))
                throw std::invalid_argument("ambient subset must contain every covered point");
        for (std::size_t p : points)
            if (p >= point_words_.size())
                throw std::out_of_range("ambient point index out of range");
        ambient_ = std::move(points);
    }

    /// X = ∪ U_i.
    void set_union_ambient()
    {
        std::vector<std::size_t> pts;
        for (std::size_t p = 0; p < point_words_.size(); ++p)
            if (!point_words_[p].empty())
                pts.push_back(p);
        ambient_ = std::move(pts);
    }

    void set_all_points_ambient() { ambient_.reset(); }

    std::vector<std::size_t> ambient_points() const
    {
        if (ambient_)
            return *ambient_;
        std::vector<std::size_t> all(point_words_.size());
        for (std::size_t p = 0; p < all.size(); ++p)
            all[p] = p;
        return all;
    }

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Codeword> point_words_;
    std::optional<std::vector<std::size_t>> ambient_;
};

/// code(U, X) of a finite cover.
inline Code abstract_code(const AbstractCover& a)
{
    std::vector<Codeword> ws;
    for (std::size_t p : a.ambient_points())
        ws.push_back(a.membership_of(p));
    return Code(a.n(), std::move(ws));
}

/// One point x_σ per codeword with U_i = {x_σ : i ∈ σ}; realizes C exactly.
inline AbstractCover finite_realization(const Code& c)
{
    AbstractCover a(c.n());
    for (Codeword w : c)
        a.add_point("x" + to_string(w), w);
    return a;
}

} // namespace convex_codes

#endif
