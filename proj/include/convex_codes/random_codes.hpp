#ifndef CONVEX_CODES_RANDOM_CODES_HPP
#define CONVEX_CODES_RANDOM_CODES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "convex_codes/code.hpp"

namespace convex_codes {

/**
 * Seeded generators for random codes. Draws use raw 64-bit outputs reduced
 * modulo the range, so sequences are identical on every platform.
 */
class CodeGenerator
{
public:
    explicit CodeGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    bool coin(int percent) { return static_cast<int>(rng_() % 100) < percent; }

    /// Uniformly random non-empty subset of [n].
    Codeword nonempty_word(int n)
    {
        const std::uint64_t mask = Codeword::full(n).bits();
        std::uint64_t b = 0;
        while (b == 0)
            b = rng_() & mask;
        return Codeword(b);
    }

    /// Random code on n neurons with at most max_words words; ∅ included with the given percentage.
    Code code(int n, int max_words, int empty_percent = 30)
    {
        std::vector<Codeword> ws;
        const int count = uniform(1, max_words);
        for (int i = 0; i < count; ++i)
            ws.push_back(nonempty_word(n));
        if (coin(empty_percent))
            ws.push_back(Codeword{});
        return Code(n, std::move(ws));
    }

    /// An antichain of at most k non-empty words (comparable draws are discarded).
    std::vector<Codeword> antichain(int n, int k)
    {
        std::vector<Codeword> out;
        for (int tries = 0; static_cast<int>(out.size()) < k && tries < 8 * k; ++tries) {
            const Codeword w = nonempty_word(n);
            bool ok = true;
            for (Codeword v : out)
                if (w.subset_of(v) || v.subset_of(w))
                    ok = false;
            if (ok)
                out.push_back(w);
        }
        return out;
    }

    /// Random subset of the faces of Δ(C) added to C, keeping M(C) fixed.
    Code extension(const Code& c, int percent)
    {
        std::vector<Codeword> ws = c.words();
        for (Codeword f : simplicial_complex(c).faces())
            if (!c.contains(f) && coin(percent))
                ws.push_back(f);
        return Code(c.n(), std::move(ws));
    }

    /// A max intersection-complete code: M̂ of a random antichain plus random faces.
    Code max_intersection_complete(int n, int k, int extra_percent = 25)
    {
        const Code m(n, antichain(n, k));
        Code base = intersection_completion(m);
        if (!base.contains_empty() && coin(30))
            base = base.with(Codeword{});
        return extension(base, extra_percent);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace convex_codes

#endif
