#ifndef CONVEX_CODES_POTENTIAL_HPP
#define CONVEX_CODES_POTENTIAL_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convex_codes/certificate.hpp"
#include "convex_codes/code.hpp"
#include "convex_codes/cover_code.hpp"

namespace convex_codes {

/**
 * V_i = conv{e_τ : τ ∈ C, τ ∋ i} in ℝ^{|C|} inside X = conv{e_τ : τ ∈ C}.
 */
struct PotentialCoverRealization
{
    int n = 0;
    std::vector<Codeword> basis;                       ///< τ ↦ coordinate position
    std::vector<std::vector<std::size_t>> vertices;    ///< vertices[i-1] = positions of τ ∋ i
    std::vector<std::pair<Codeword, Vector>> witnesses;

    int dimension() const { return static_cast<int>(basis.size()); }

    bool in_simplex(const Vector& x) const
    {
        if (static_cast<int>(x.size()) != dimension())
            return false;
        Rational s = 0;
        for (const auto& v : x) {
            if (v < 0)
                return false;
            s += v;
        }
        return s == 1;
    }

    /// x ∈ V_i iff x ∈ X and its support uses only vertices of V_i.
    bool in_set(int i, const Vector& x) const
    {
        if (!in_simplex(x))
            return false;
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (x[t] != 0 && !basis[t].contains(i))
                return false;
        return true;
    }

    Codeword codeword_at(const Vector& x) const
    {
        Codeword w;
        for (int i = 1; i <= n; ++i)
            if (in_set(i, x))
                w = w.with(i);
        return w;
    }

    /// The same cover as half-spaces: x >= 0, Σx = 1, and x_τ <= 0 for τ ∌ i; ambient region X.
    PolyhedralCover as_polyhedral() const
    {
        const int d = dimension();
        auto simplex = [&]() {
            ConvexRegion r{d, {}, {}};
            for (int t = 0; t < d; ++t) {
                Vector e(d, Rational(0));
                e[t] = -1;
                r.halfspaces.emplace_back(std::move(e), Rational(0), false);
            }
            r.halfspaces.emplace_back(Vector(d, Rational(1)), Rational(1), false);
            r.halfspaces.emplace_back(Vector(d, Rational(-1)), Rational(-1), false);
            return r;
        };
        PolyhedralCover p;
        p.dimension = d;
        p.ambient = AmbientKind::ExplicitRegion;
        p.ambient_region = simplex();
        for (int i = 1; i <= n; ++i) {
            ConvexRegion r = simplex();
            for (int t = 0; t < d; ++t)
                if (!basis[t].contains(i)) {
                    Vector e(d, Rational(0));
                    e[t] = 1;
                    r.halfspaces.emplace_back(std::move(e), Rational(0), false);
                }
            p.regions.push_back(std::move(r));
        }
        return p;
    }
};

struct PotentialOptions
{
    /// Cross-check with the exact polyhedral engine when |C'| is at most this.
    int geometric_check_max = 5;
    std::size_t face_budget = std::size_t{1} << 20;
};

/// The code realized by the potential cover: Ĉ.
inline Code potential_target(const Code& c)
{
    return intersection_completion(c);
}

inline std::pair<PotentialCoverRealization, RealizationCertificate> potential_cover(const Code& c,
                                                                                     const PotentialOptions& opt = {})
{
    PotentialCoverRealization pc;
    pc.n = c.n();
    // e_∅ lies in no V_i, so keeping it in the basis puts ∅ in the code whenever ∅ ∈ C.
    for (Codeword w : c)
        pc.basis.push_back(w);
    if (pc.basis.empty())
        throw std::invalid_argument("potential cover needs at least one codeword");
    const std::size_t k = pc.basis.size();
    pc.vertices.resize(c.n());
    for (int i = 1; i <= c.n(); ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (pc.basis[t].contains(i))
                pc.vertices[i - 1].push_back(t);

    auto average = [&](auto pick) {
        Vector x(k, Rational(0));
        std::size_t count = 0;
        for (std::size_t t = 0; t < k; ++t)
            if (pick(pc.basis[t])) {
                x[t] = 1;
                ++count;
            }
        for (auto& v : x)
            v /= count;
        return x;
    };

    // Non-empty σ is achieved iff σ equals the intersection of the codewords containing it.
    std::vector<Codeword> achieved;
    const Code c_nonempty = c.without(Codeword{});
    const auto faces = c_nonempty.empty() ? std::vector<Codeword>{} : simplicial_complex(c_nonempty).faces(opt.face_budget);
    for (Codeword sigma : faces) {
        if (sigma.empty())
            continue;
        Codeword meet = Codeword::full(c.n());
        for (Codeword t : pc.basis)
            if (sigma.subset_of(t))
                meet = meet & t;
        if (meet == sigma) {
            achieved.push_back(sigma);
            pc.witnesses.emplace_back(sigma, average([sigma](Codeword t) { return sigma.subset_of(t); }));
        }
    }
    Codeword common = Codeword::full(c.n());
    for (Codeword t : pc.basis)
        common = common & t;
    if (common.empty()) {
        achieved.push_back(Codeword{});
        pc.witnesses.emplace_back(Codeword{}, average([](Codeword) { return true; }));
    }

    RealizationCertificate cert;
    cert.method = RealizationMethod::PotentialCover;
    cert.dimension = static_cast<int>(k);
    cert.ambient = AmbientKind::ExplicitRegion;
    cert.target = potential_target(c);
    cert.achieved = Code(c.n(), std::move(achieved));
    bool witnesses_ok = true;
    std::string bad;
    for (const auto& [sigma, x] : pc.witnesses)
        if (!pc.in_simplex(x) || pc.codeword_at(x) != sigma) {
            witnesses_ok = false;
            bad = "witness for " + to_string(sigma);
            break;
        }
    cert.check("witness-membership", witnesses_ok, bad);
    cert.check("achieved-equals-target", cert.achieved == cert.target,
               "achieved " + to_string(cert.achieved) + ", target " + to_string(cert.target));
    if (static_cast<int>(k) <= opt.geometric_check_max) {
        const Code geo = code_of_cover(pc.as_polyhedral()).code;
        cert.check("geometric-code-equals-achieved", geo == cert.achieved, "half-space cover code " + to_string(geo));
    } else {
        cert.skip("geometric-code-equals-achieved", std::to_string(k) + " basis vectors above the geometric check cap");
    }
    return {std::move(pc), std::move(cert)};
}

} // namespace convex_codes

#endif
