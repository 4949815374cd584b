#ifndef CONVEX_CODES_CHAMBER_HPP
#define CONVEX_CODES_CHAMBER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "convex_codes/abstract_cover.hpp"
#include "convex_codes/certificate.hpp"
#include "convex_codes/code.hpp"
#include "convex_codes/cover_code.hpp"

namespace convex_codes {

namespace detail {

/// Inverse of a square rational matrix by Gauss–Jordan; throws if singular.
inline std::vector<Vector> invert(std::vector<Vector> a)
{
    const std::size_t n = a.size();
    std::vector<Vector> inv(n, Vector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::invalid_argument("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational s = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= s;
            inv[col][j] /= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace detail

/**
 * Barycentric coordinates with respect to a simplex with K rational vertices
 * in ℝ^{K-1}: λ_b(x) = coef[b] · x + constant[b], Σ_b λ_b = 1.
 */
struct Barycentric
{
    std::vector<Vector> vertices;
    std::vector<Vector> coef;
    Vector constant;

    explicit Barycentric(std::vector<Vector> verts) : vertices(std::move(verts))
    {
        const std::size_t k = vertices.size();
        std::vector<Vector> m(k, Vector(k));
        for (std::size_t a = 0; a < k; ++a) {
            if (vertices[a].size() + 1 != k)
                throw std::invalid_argument("simplex needs K vertices in dimension K-1");
            for (std::size_t j = 0; j + 1 < k; ++j)
                m[j][a] = vertices[a][j];
            m[k - 1][a] = 1;
        }
        const auto inv = detail::invert(std::move(m));
        for (std::size_t b = 0; b < k; ++b) {
            coef.emplace_back(inv[b].begin(), inv[b].end() - 1);
            constant.push_back(inv[b].back());
        }
    }

    Rational lambda(std::size_t b, const Vector& x) const { return dot(coef[b], x) + constant[b]; }
};

/// Vertices e_1, ..., e_{K-1} and -(1, ..., 1): affinely independent with small rational entries.
inline std::vector<Vector> default_simplex(int k)
{
    const int d = k - 1;
    std::vector<Vector> v;
    for (int a = 0; a < d; ++a) {
        Vector e(d, Rational(0));
        e[a] = 1;
        v.push_back(std::move(e));
    }
    v.emplace_back(d, Rational(-1));
    return v;
}

struct ChamberRealization
{
    int k = 0;                        ///< after padding
    int padding_count = 0;
    std::vector<Codeword> maximal;    ///< σ_1, ..., σ_k (padding words are empty)
    std::vector<Codeword> rho;        ///< rho[i-1] = ρ(i) ⊆ [k]
    AbstractCover abstract;           ///< points: non-empty ρ ⊆ [k]
    PolyhedralCover geometric;        ///< dimension k - 1, U_i = ∩_{b∉ρ(i)} {λ_b < 0}
    std::vector<Vector> simplex;
};

struct ChamberOptions
{
    /// Cross-check the half-space cover with the exact engine when k (after padding) is at most this.
    int geometric_check_max_k = 7;
    ArrangementOptions arrangement;
};

/// σ(ρ) = ∩_{a∈ρ} σ_a = {i : ρ ⊆ ρ(i)}.
inline Codeword chamber_word(const std::vector<Codeword>& rho, Codeword r)
{
    Codeword w;
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (r.subset_of(rho[i]))
            w = w.with(static_cast<int>(i) + 1);
    return w;
}

/// M̂ adjusted for the ambient mode and padding.
inline Code chamber_target(const Code& c, AmbientKind ambient)
{
    const Code m = maximal_codewords(c);
    Code target = intersection_completion(m);
    if (ambient == AmbientKind::UnionOfSets)
        return target.without(Codeword{});
    if (m.size() < 3)
        return target.with(Codeword{});
    return target;
}

/**
 * Realizes M̂(M(C)) by the chambers of a simplex: with M(C) = {σ_1..σ_k}
 * padded to k >= 3 by empty words, U_i is the union of chambers H_ρ with
 * ρ ⊆ ρ(i). The abstract R_i system carries the exact code; the half-space
 * cover is checked against it with the polyhedral engine.
 */
inline std::pair<ChamberRealization, RealizationCertificate>
max_int_realization(const Code& c, AmbientKind ambient, const ChamberOptions& opt = {})
{
    if (ambient == AmbientKind::ExplicitRegion)
        throw std::invalid_argument("chamber realization supports whole or union ambient only");
    const int n = c.n();
    ChamberRealization ch;
    ch.maximal = maximal_codewords(c).words();
    const int k0 = static_cast<int>(ch.maximal.size());
    ch.padding_count = std::max(0, 3 - k0);
    ch.maximal.resize(k0 + ch.padding_count, Codeword{});
    ch.k = static_cast<int>(ch.maximal.size());
    if (ch.k > kMaxNeurons)
        throw std::length_error("too many maximal codewords for the chamber construction");

    ch.rho.assign(n, Codeword{});
    for (int i = 1; i <= n; ++i)
        for (int a = 0; a < ch.k; ++a)
            if (ch.maximal[a].contains(i))
                ch.rho[i - 1] = ch.rho[i - 1].with(a + 1);

    ch.abstract = AbstractCover(n);
    const std::uint64_t limit = std::uint64_t{1} << ch.k;
    if (ch.k > 24)
        throw std::length_error("chamber abstract cover would have 2^k points");
    for (std::uint64_t r = 1; r < limit; ++r) {
        const Codeword rw(r);
        ch.abstract.add_point("H" + to_string(rw), chamber_word(ch.rho, rw));
    }
    if (ambient == AmbientKind::UnionOfSets)
        ch.abstract.set_union_ambient();

    const int d = ch.k - 1;
    ch.simplex = default_simplex(ch.k);
    const Barycentric bary(ch.simplex);
    ch.geometric.dimension = d;
    ch.geometric.ambient = ambient;
    for (int i = 1; i <= n; ++i) {
        ConvexRegion r{d, {}, {}};
        for (int b = 0; b < ch.k; ++b)
            if (!ch.rho[i - 1].contains(b + 1)) {
                Vector normal = bary.coef[b];
                r.halfspaces.emplace_back(std::move(normal), -bary.constant[b], true);
            }
        ch.geometric.regions.push_back(std::move(r));
    }

    RealizationCertificate cert;
    cert.method = RealizationMethod::Chamber;
    cert.dimension = std::max(2, k0 - 1);
    cert.ambient = ambient;
    cert.target = chamber_target(c, ambient);
    cert.achieved = abstract_code(ch.abstract);
    cert.check("abstract-code-equals-target", cert.achieved == cert.target,
               "achieved " + to_string(cert.achieved) + ", target " + to_string(cert.target));
    cert.check("dimension-bound", d == cert.dimension,
               "cover lives in dimension " + std::to_string(d));

    if (ch.k <= opt.geometric_check_max_k) {
        const CoverCode cc = code_of_cover(ch.geometric, opt.arrangement);
        cert.check("geometric-code-equals-abstract", cc.code == cert.achieved,
                   "half-space cover code " + to_string(cc.code));
        bool cells_ok = true;
        std::string bad;
        for (const auto& cell : cc.complex.cells()) {
            Codeword r;
            for (int b = 0; b < ch.k; ++b)
                if (bary.lambda(b, cell.witness) >= 0)
                    r = r.with(b + 1);
            if (cell.codeword != chamber_word(ch.rho, r)) {
                cells_ok = false;
                bad = "cell at " + format_vector(cell.witness);
                break;
            }
        }
        cert.check("cells-match-chambers", cells_ok, bad);
    } else {
        cert.skip("geometric-code-equals-abstract", "k=" + std::to_string(ch.k) + " above the geometric check cap");
    }
    return {std::move(ch), std::move(cert)};
}

} // namespace convex_codes

#endif
