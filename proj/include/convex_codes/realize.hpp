#ifndef CONVEX_CODES_REALIZE_HPP
#define CONVEX_CODES_REALIZE_HPP

#include <optional>
#include <string>

#include "convex_codes/chamber.hpp"
#include "convex_codes/monotone.hpp"
#include "convex_codes/potential.hpp"

namespace convex_codes {

struct RealizeOptions
{
    /// Chamber ambient; unset picks union when ∅ ∉ C and whole otherwise.
    std::optional<AmbientKind> ambient;
    ChamberOptions chamber;
};

struct Realization
{
    RealizationCertificate certificate;
    ChamberRealization chamber;
    AbstractCover cover; ///< the chamber points plus one point per monotone extension
};

/// Either a realization or the missing intersection of maximal codewords that rules the method out.
struct RealizeOutcome
{
    std::optional<Realization> realization;
    std::optional<MissingIntersection> not_applicable;

    bool applicable() const { return realization.has_value(); }
};

/**
 * Realizes a max intersection-complete code: chambers for M̂(M(C)), then
 * monotone extension to the rest of C. The certified dimension is
 * max(2, k - 1) with k = |M(C)|. Forcing the ambient changes the target
 * accordingly (whole may add ∅, union drops it).
 */
inline RealizeOutcome realize(const Code& c, const RealizeOptions& opt = {})
{
    RealizeOutcome out;
    // A missing ∅ only matters when ∅ is a codeword; otherwise the union ambient absorbs it.
    if (auto miss = missing_max_intersection(c); miss && !(miss->target.empty() && !c.contains_empty())) {
        out.not_applicable = std::move(miss);
        return out;
    }
    const AmbientKind ambient =
        opt.ambient ? *opt.ambient : (c.contains_empty() ? AmbientKind::WholeSpace : AmbientKind::UnionOfSets);
    auto [chamber, chamber_cert] = max_int_realization(c, ambient, opt.chamber);

    Code target = c;
    if (ambient == AmbientKind::UnionOfSets)
        target = target.without(Codeword{});
    else if (chamber_cert.achieved.contains_empty())
        target = target.with(Codeword{});

    Realization r;
    r.cover = monotone_extend(chamber.abstract, target);
    RealizationCertificate& cert = r.certificate;
    cert.target = target;
    cert.achieved = abstract_code(r.cover);
    cert.dimension = chamber_cert.dimension;
    cert.ambient = ambient;
    const bool extended = r.cover.num_points() != chamber.abstract.num_points();
    cert.method = extended ? RealizationMethod::ChamberPlusMonotone : RealizationMethod::Chamber;
    for (auto& ch : chamber_cert.checks) {
        ch.name = "chamber:" + ch.name;
        cert.checks.push_back(std::move(ch));
    }
    cert.check("monotone:extension-count",
               r.cover.num_points() - chamber.abstract.num_points() == target.size() - chamber_cert.achieved.size(),
               "points added: " + std::to_string(r.cover.num_points() - chamber.abstract.num_points()));
    cert.check("achieved-equals-target", cert.achieved == cert.target,
               "achieved " + to_string(cert.achieved) + ", target " + to_string(cert.target));
    r.chamber = std::move(chamber);
    out.realization = std::move(r);
    return out;
}

/// Independent re-check of a certificate against the cover it describes.
inline bool replay(const RealizationCertificate& cert, const AbstractCover& cover)
{
    if (!cert.valid())
        return false;
    if (!(abstract_code(cover) == cert.achieved))
        return false;
    if (cert.method != RealizationMethod::PotentialCover) {
        const int k = static_cast<int>(maximal_codewords(cert.target).size());
        if (cert.dimension != std::max(2, k - 1))
            return false;
    }
    return true;
}

} // namespace convex_codes

#endif
