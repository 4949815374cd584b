#ifndef CONVEX_CODES_CERTIFICATE_HPP
#define CONVEX_CODES_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "convex_codes/code.hpp"
#include "convex_codes/polyhedra.hpp"

namespace convex_codes {

enum class RealizationMethod { Chamber, ChamberPlusMonotone, PotentialCover };

inline const char* to_string(RealizationMethod m)
{
    switch (m) {
    case RealizationMethod::Chamber:
        return "chamber";
    case RealizationMethod::ChamberPlusMonotone:
        return "chamber+monotone";
    default:
        return "potential";
    }
}

struct CheckResult
{
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

/// A realization claim: a cover of dimension `dimension` whose code under `ambient` is `achieved`.
struct RealizationCertificate
{
    Code target;
    Code achieved;
    RealizationMethod method = RealizationMethod::Chamber;
    int dimension = 0;
    AmbientKind ambient = AmbientKind::WholeSpace;
    std::vector<CheckResult> checks;

    bool valid() const
    {
        if (!(achieved == target))
            return false;
        for (const auto& c : checks)
            if (!c.skipped && !c.passed)
                return false;
        return true;
    }

    void check(std::string name, bool passed, std::string detail = {})
    {
        checks.push_back({std::move(name), passed, false, std::move(detail)});
    }

    void skip(std::string name, std::string detail)
    {
        checks.push_back({std::move(name), false, true, std::move(detail)});
    }
};

} // namespace convex_codes

#endif
