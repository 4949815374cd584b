#ifndef CONVEX_CODES_SAMPLING_HPP
#define CONVEX_CODES_SAMPLING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "convex_codes/cover_code.hpp"

namespace convex_codes {

/// Axis-aligned box ∏ [lo_j, hi_j].
struct Box
{
    Vector lo;
    Vector hi;
};

struct SampleReport
{
    Code observed;
    std::map<Codeword, std::uint64_t> counts;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::uint64_t in_ambient = 0;
    Box box;
};

/**
 * Bounding box of all balls, widened by 1, or (without balls) of the cell
 * witnesses of the cover's arrangement, widened by 1.
 */
inline Box derive_box(const PolyhedralCover& p)
{
    std::vector<Vector> pts;
    auto add_ball = [&](const Ball& b) {
        Vector lo = b.center, hi = b.center;
        for (std::size_t j = 0; j < lo.size(); ++j) {
            lo[j] -= b.radius;
            hi[j] += b.radius;
        }
        pts.push_back(lo);
        pts.push_back(hi);
    };
    for (const auto& r : p.regions)
        if (r.ball)
            add_ball(*r.ball);
    if (p.ambient_region && p.ambient_region->ball)
        add_ball(*p.ambient_region->ball);
    if (pts.empty()) {
        const auto cc = code_of_cover(p);
        for (const auto& c : cc.complex.cells())
            pts.push_back(c.witness);
    }
    Box b{pts.front(), pts.front()};
    for (const auto& x : pts)
        for (int j = 0; j < p.dimension; ++j) {
            b.lo[j] = std::min(b.lo[j], x[j]);
            b.hi[j] = std::max(b.hi[j], x[j]);
        }
    for (int j = 0; j < p.dimension; ++j) {
        b.lo[j] -= 1;
        b.hi[j] += 1;
    }
    return b;
}

/**
 * Monte Carlo estimate of code(U, X): `budget` points drawn from a 64-bit
 * Mersenne Twister, each coordinate lo + (hi - lo)(2k + 1)/2^33 with k the top
 * 32 bits of one draw. Membership is evaluated exactly, so every observed
 * codeword belongs to the true code.
 */
inline SampleReport sample_code(const PolyhedralCover& p, std::uint64_t budget, std::uint64_t seed,
                                std::optional<Box> box = std::nullopt)
{
    p.validate();
    SampleReport rep;
    rep.budget = budget;
    rep.seed = seed;
    rep.box = box ? *box : derive_box(p);
    if (static_cast<int>(rep.box.lo.size()) != p.dimension || static_cast<int>(rep.box.hi.size()) != p.dimension)
        throw std::invalid_argument("sampling box has wrong dimension");
    for (int j = 0; j < p.dimension; ++j)
        if (!(rep.box.lo[j] < rep.box.hi[j]))
            throw std::invalid_argument("sampling box has zero volume");

    std::mt19937_64 rng(seed);
    const Rational scale = Rational(1) / Rational(Integer(1) << 33);
    Vector width(p.dimension);
    for (int j = 0; j < p.dimension; ++j)
        width[j] = (rep.box.hi[j] - rep.box.lo[j]) * scale;
    Vector x(p.dimension);
    std::vector<Codeword> words;
    for (std::uint64_t s = 0; s < budget; ++s) {
        for (int j = 0; j < p.dimension; ++j) {
            const std::uint64_t k = rng() >> 32;
            x[j] = rep.box.lo[j] + width[j] * Rational(2 * k + 1);
        }
        const Codeword w = p.codeword_at(x);
        if (!p.in_ambient(x, w))
            continue;
        ++rep.in_ambient;
        if (rep.counts[w]++ == 0)
            words.push_back(w);
    }
    rep.observed = Code(p.n(), std::move(words));
    return rep;
}

/// Deterministic text rendering; identical inputs give byte-identical reports.
inline std::string format_sample_report(const SampleReport& r)
{
    std::ostringstream out;
    out << "budget=" << r.budget << " seed=" << r.seed << " in_ambient=" << r.in_ambient << '\n';
    out << "box=";
    for (std::size_t j = 0; j < r.box.lo.size(); ++j)
        out << (j ? " x " : "") << '[' << format_rational(r.box.lo[j]) << ", " << format_rational(r.box.hi[j]) << ']';
    out << '\n' << "observed=" << to_string(r.observed) << '\n';
    for (Codeword w : r.observed)
        out << "count " << to_string(w) << ' ' << r.counts.at(w) << '\n';
    return out.str();
}

} // namespace convex_codes

#endif
