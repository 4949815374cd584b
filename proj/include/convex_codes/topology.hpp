#ifndef CONVEX_CODES_TOPOLOGY_HPP
#define CONVEX_CODES_TOPOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "convex_codes/code.hpp"

namespace convex_codes {

/**
 * Reduced Betti numbers over GF(2). `reduced[k]` is β̃_k with trailing zeros
 * trimmed; `empty_face_class` records β̃_{-1} = 1, which only happens for the
 * complex {∅}.
 */
struct BettiProfile
{
    std::vector<std::size_t> reduced;
    bool empty_face_class = false;

    bool all_zero() const { return reduced.empty() && !empty_face_class; }
    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

inline std::string to_string(const BettiProfile& b)
{
    std::string s = "(";
    if (b.empty_face_class)
        s += "-1:1";
    for (std::size_t k = 0; k < b.reduced.size(); ++k)
        s += (k || b.empty_face_class ? "," : "") + std::to_string(b.reduced[k]);
    return s + ")";
}

namespace detail {

/// Rank over GF(2) of a matrix given as columns of sorted row indices.
inline std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns)
{
    std::unordered_map<std::uint32_t, std::size_t> pivot_of_low;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            auto it = pivot_of_low.find(col.back());
            if (it == pivot_of_low.end())
                break;
            const auto& other = columns[it->second];
            std::vector<std::uint32_t> sum;
            sum.reserve(col.size() + other.size());
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(sum));
            col = std::move(sum);
        }
        if (!col.empty()) {
            pivot_of_low.emplace(col.back(), j);
            ++rank;
        }
    }
    return rank;
}

} // namespace detail

/// Reduced mod-2 homology from boundary-matrix ranks.
inline BettiProfile reduced_betti(const SimplicialComplex& k, std::size_t face_budget = std::size_t{1} << 20)
{
    BettiProfile out;
    if (k.is_void())
        return out;
    const int dim = k.dimension();
    if (dim < 0) {
        out.empty_face_class = true;
        return out;
    }
    std::vector<std::vector<Codeword>> by_dim(dim + 1);
    for (Codeword f : k.faces(face_budget))
        if (!f.empty())
            by_dim[f.size() - 1].push_back(f);

    std::vector<std::unordered_map<Codeword, std::uint32_t>> index(dim + 1);
    for (int d = 0; d <= dim; ++d)
        for (std::uint32_t j = 0; j < by_dim[d].size(); ++j)
            index[d].emplace(by_dim[d][j], j);

    // rank of the boundary map out of dimension d; the augmentation gives rank 1 at d = 0
    std::vector<std::size_t> rank(dim + 2, 0);
    rank[0] = 1;
    for (int d = 1; d <= dim; ++d) {
        std::vector<std::vector<std::uint32_t>> cols;
        cols.reserve(by_dim[d].size());
        for (Codeword f : by_dim[d]) {
            std::vector<std::uint32_t> col;
            for (int v : f.neurons())
                col.push_back(index[d - 1].at(f.without(v)));
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        rank[d] = detail::gf2_rank(std::move(cols));
    }
    out.reduced.resize(dim + 1);
    for (int d = 0; d <= dim; ++d)
        out.reduced[d] = by_dim[d].size() - rank[d] - rank[d + 1];
    while (!out.reduced.empty() && out.reduced.back() == 0)
        out.reduced.pop_back();
    return out;
}

enum class Contractibility { Contractible, NotContractible, Unknown };

inline const char* to_string(Contractibility c)
{
    switch (c) {
    case Contractibility::Contractible:
        return "contractible";
    case Contractibility::NotContractible:
        return "not-contractible";
    default:
        return "unknown";
    }
}

/// An elementary collapse removing a free face together with its unique coface.
struct Collapse
{
    Codeword free_face;
    Codeword coface;
    friend bool operator==(const Collapse&, const Collapse&) = default;
};

/**
 * Three-valued contractibility verdict. Exactly one certificate is populated:
 * a cone apex or collapse sequence for Contractible, a non-zero reduced Betti
 * number (degree -1 denotes the empty-face class) for NotContractible.
 */
struct ContractibilityVerdict
{
    Contractibility kind = Contractibility::Unknown;
    int cone_apex = 0;
    std::vector<Collapse> collapses;
    int betti_degree = 0;
    std::size_t betti_value = 0;
};

struct ContractibilityOptions
{
    int restarts = 32;
    std::uint64_t seed = 0x5eed'c0de'2017ULL;
    std::size_t face_budget = std::size_t{1} << 20;
};

namespace detail {

inline std::vector<Collapse> free_pairs(const std::unordered_set<Codeword>& faces, Codeword universe)
{
    std::vector<Collapse> out;
    const auto vs = universe.neurons();
    auto coface_count = [&](Codeword t) {
        int c = 0;
        for (int v : vs)
            if (!t.contains(v) && faces.count(t.with(v)))
                ++c;
        return c;
    };
    for (Codeword s : faces) {
        if (s.size() < 2 || coface_count(s) != 0)
            continue;
        for (int v : s.neurons()) {
            const Codeword t = s.without(v);
            if (coface_count(t) == 1)
                out.push_back({t, s});
        }
    }
    std::sort(out.begin(), out.end(), [](const Collapse& a, const Collapse& b) {
        return a.coface != b.coface ? a.coface < b.coface : a.free_face < b.free_face;
    });
    return out;
}

} // namespace detail

/// Replays a collapse sequence; true iff every step is a valid elementary collapse and a single vertex remains.
inline bool replay_collapses(const SimplicialComplex& k, const std::vector<Collapse>& seq)
{
    std::unordered_set<Codeword> faces;
    for (Codeword f : k.faces())
        if (!f.empty())
            faces.insert(f);
    const Codeword universe = k.vertex_set();
    for (const Collapse& c : seq) {
        const auto pairs = detail::free_pairs(faces, universe);
        if (std::find(pairs.begin(), pairs.end(), c) == pairs.end())
            return false;
        faces.erase(c.free_face);
        faces.erase(c.coface);
    }
    return faces.size() == 1;
}

inline bool is_cone_with_apex(const SimplicialComplex& k, int apex)
{
    return !k.is_void() && std::all_of(k.facets().begin(), k.facets().end(),
                                       [apex](Codeword f) { return f.contains(apex); });
}

/// Re-checks whichever certificate the verdict carries.
inline bool replay(const SimplicialComplex& k, const ContractibilityVerdict& v)
{
    switch (v.kind) {
    case Contractibility::Contractible:
        if (v.cone_apex != 0)
            return is_cone_with_apex(k, v.cone_apex);
        return replay_collapses(k, v.collapses);
    case Contractibility::NotContractible: {
        const auto b = reduced_betti(k);
        if (v.betti_degree == -1)
            return b.empty_face_class && v.betti_value == 1;
        return v.betti_degree >= 0 && static_cast<std::size_t>(v.betti_degree) < b.reduced.size() &&
               b.reduced[v.betti_degree] == v.betti_value && v.betti_value != 0;
    }
    default:
        return true;
    }
}

/**
 * Contractibility of a non-empty complex: homology first (a non-zero reduced
 * Betti number settles NotContractible), then a cone test, then greedy
 * elementary collapses with seeded random restarts. Unknown otherwise.
 */
inline ContractibilityVerdict contractibility(const SimplicialComplex& k, const ContractibilityOptions& opt = {})
{
    if (k.is_void())
        throw std::invalid_argument("contractibility of the void complex is undefined");
    ContractibilityVerdict out;
    const BettiProfile b = reduced_betti(k, opt.face_budget);
    if (b.empty_face_class) {
        out.kind = Contractibility::NotContractible;
        out.betti_degree = -1;
        out.betti_value = 1;
        return out;
    }
    for (std::size_t d = 0; d < b.reduced.size(); ++d)
        if (b.reduced[d] != 0) {
            out.kind = Contractibility::NotContractible;
            out.betti_degree = static_cast<int>(d);
            out.betti_value = b.reduced[d];
            return out;
        }
    for (int v : k.vertex_set().neurons())
        if (is_cone_with_apex(k, v)) {
            out.kind = Contractibility::Contractible;
            out.cone_apex = v;
            return out;
        }

    std::unordered_set<Codeword> initial;
    for (Codeword f : k.faces(opt.face_budget))
        if (!f.empty())
            initial.insert(f);
    const Codeword universe = k.vertex_set();
    std::mt19937_64 rng(opt.seed);
    for (int attempt = 0; attempt < std::max(1, opt.restarts); ++attempt) {
        auto faces = initial;
        std::vector<Collapse> seq;
        while (true) {
            const auto pairs = detail::free_pairs(faces, universe);
            if (pairs.empty())
                break;
            // the first attempt is deterministic, later ones pick uniformly
            const std::size_t pick = attempt == 0 ? 0 : rng() % pairs.size();
            faces.erase(pairs[pick].free_face);
            faces.erase(pairs[pick].coface);
            seq.push_back(pairs[pick]);
        }
        if (faces.size() == 1) {
            out.kind = Contractibility::Contractible;
            out.collapses = std::move(seq);
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Obstructions

enum class ObstructionKind { Local, NonLocal };

/**
 * Local(σ): σ is a simplicial violator whose link complex is not contractible.
 * NonLocal(σ1, σ2): both cover the code but Δ(C ∩ σ1) and Δ(C ∩ σ2) have
 * different reduced Betti numbers.
 */
struct Obstruction
{
    ObstructionKind kind = ObstructionKind::Local;
    Codeword sigma;
    Codeword sigma2;
    SimplicialComplex link_complex;
    ContractibilityVerdict verdict;
    BettiProfile profile1;
    BettiProfile profile2;
};

struct LocalObstructionReport
{
    std::vector<Obstruction> obstructions;
    std::vector<Codeword> unknown;

    /// True when the search proves there are no local obstructions.
    bool certified_free() const { return obstructions.empty() && unknown.empty(); }
};

inline LocalObstructionReport local_obstructions(const Code& c, const ContractibilityOptions& opt = {})
{
    LocalObstructionReport out;
    for (Codeword sigma : simplicial_violators(c)) {
        if (sigma.empty())
            continue;
        SimplicialComplex lk = simplicial_complex(link(c, sigma));
        ContractibilityVerdict v = contractibility(lk, opt);
        if (v.kind == Contractibility::NotContractible)
            out.obstructions.push_back({ObstructionKind::Local, sigma, {}, std::move(lk), std::move(v), {}, {}});
        else if (v.kind == Contractibility::Unknown)
            out.unknown.push_back(sigma);
    }
    return out;
}

/**
 * Minimal hitting sets of C (Berge's incremental algorithm). Empty when some
 * codeword is empty, since then nothing covers C.
 */
inline std::vector<Codeword> minimal_hitting_sets(const Code& c)
{
    if (c.contains_empty())
        return {};
    std::vector<Codeword> hs{Codeword{}};
    for (Codeword w : c) {
        std::vector<Codeword> next;
        for (Codeword h : hs) {
            if (h.meets(w)) {
                next.push_back(h);
                continue;
            }
            for (int v : w.neurons())
                next.push_back(h.with(v));
        }
        std::vector<Codeword> minimal;
        for (Codeword a : next) {
            bool keep = true;
            for (Codeword b : next)
                if (b.proper_subset_of(a)) {
                    keep = false;
                    break;
                }
            if (keep)
                minimal.push_back(a);
        }
        std::sort(minimal.begin(), minimal.end());
        minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
        hs = std::move(minimal);
    }
    return hs;
}

/**
 * Every covering set contained in the support of C, generated by expanding
 * minimal hitting sets one vertex at a time. Canonical order; at most `limit`.
 */
inline std::vector<Codeword> covering_sets(const Code& c, std::size_t limit = std::size_t{1} << 16)
{
    Codeword support;
    for (Codeword w : c)
        support = support | w;
    std::unordered_set<Codeword> seen;
    std::vector<Codeword> frontier = minimal_hitting_sets(c);
    for (Codeword h : frontier)
        seen.insert(h);
    while (!frontier.empty() && seen.size() < limit) {
        std::vector<Codeword> next;
        for (Codeword h : frontier)
            for (int v : (support - h).neurons()) {
                const Codeword g = h.with(v);
                if (seen.insert(g).second)
                    next.push_back(g);
            }
        frontier = std::move(next);
    }
    std::vector<Codeword> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    if (out.size() > limit)
        out.resize(limit);
    return out;
}

struct NonlocalSearch
{
    std::vector<Obstruction> obstructions;
    std::size_t pairs_examined = 0;
    bool exhausted = true; ///< false if the pair budget cut the search short
};

/**
 * Pairs of covering sets whose restricted complexes differ in mod-2 reduced
 * homology, visited by increasing |σ1| + |σ2| and then canonical order.
 */
inline NonlocalSearch nonlocal_obstructions(const Code& c, std::size_t max_pair_budget = 1'000'000)
{
    NonlocalSearch out;
    const auto cands = covering_sets(c);
    if (cands.size() < 2)
        return out;
    std::unordered_map<Codeword, BettiProfile> profile;
    auto profile_of = [&](Codeword s) -> const BettiProfile& {
        auto it = profile.find(s);
        if (it == profile.end())
            it = profile.emplace(s, reduced_betti(simplicial_complex(restrict(c, s)))).first;
        return it->second;
    };
    const int max_size = cands.back().size();
    for (int total = 2; total <= 2 * max_size; ++total) {
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const int si = cands[i].size();
            if (2 * si > total)
                break;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                const int sj = cands[j].size();
                if (si + sj < total)
                    continue;
                if (si + sj > total)
                    break;
                if (out.pairs_examined >= max_pair_budget) {
                    out.exhausted = false;
                    return out;
                }
                ++out.pairs_examined;
                const BettiProfile& p1 = profile_of(cands[i]);
                const BettiProfile& p2 = profile_of(cands[j]);
                if (!(p1 == p2))
                    out.obstructions.push_back(
                        {ObstructionKind::NonLocal, cands[i], cands[j], {}, {}, p1, p2});
            }
        }
    }
    return out;
}

/// One line per obstruction, stable across runs.
inline std::string format_obstruction(const Obstruction& o)
{
    if (o.kind == ObstructionKind::Local) {
        std::string cert;
        if (o.verdict.betti_degree == -1)
            cert = "betti[-1]=1";
        else
            cert = "betti[" + std::to_string(o.verdict.betti_degree) + "]=" + std::to_string(o.verdict.betti_value);
        std::string facets;
        for (std::size_t k = 0; k < o.link_complex.facets().size(); ++k)
            facets += (k ? "," : "") + to_string(o.link_complex.facets()[k]);
        return "local sigma=" + to_string(o.sigma) + " link_facets={" + facets + "} verdict=" +
               to_string(o.verdict.kind) + " certificate=" + cert;
    }
    return "nonlocal sigma1=" + to_string(o.sigma) + " sigma2=" + to_string(o.sigma2) +
           " profile1=" + to_string(o.profile1) + " profile2=" + to_string(o.profile2);
}

} // namespace convex_codes

#endif
