#ifndef CONVEX_CODES_CODEWORD_HPP
#define CONVEX_CODES_CODEWORD_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace convex_codes {

/// Largest neuron count representable in a single codeword.
inline constexpr int kMaxNeurons = 64;

/**
 * A subset of the neurons [n] = {1, ..., n}, stored as a bit mask where
 * neuron i occupies bit i - 1. The empty set is a valid codeword.
 */
class Codeword
{
public:
    constexpr Codeword() = default;
    constexpr explicit Codeword(std::uint64_t bits) : bits_(bits) {}

    /// Builds a codeword from 1-based neuron indices.
    static Codeword of(std::initializer_list<int> neurons)
    {
        Codeword w;
        for (int i : neurons)
            w = w.with(i);
        return w;
    }

    static Codeword of(const std::vector<int>& neurons)
    {
        Codeword w;
        for (int i : neurons)
            w = w.with(i);
        return w;
    }

    /// All of [n].
    static constexpr Codeword full(int n)
    {
        return Codeword(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    /// Membership of the 1-based neuron i.
    constexpr bool contains(int i) const
    {
        return i >= 1 && i <= kMaxNeurons && ((bits_ >> (i - 1)) & 1U);
    }

    Codeword with(int i) const
    {
        if (i < 1 || i > kMaxNeurons)
            throw std::out_of_range("neuron index out of range: " + std::to_string(i));
        return Codeword(bits_ | (std::uint64_t{1} << (i - 1)));
    }

    constexpr Codeword without(int i) const
    {
        return Codeword(bits_ & ~(std::uint64_t{1} << (i - 1)));
    }

    constexpr bool subset_of(Codeword other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(Codeword other) const
    {
        return subset_of(other) && bits_ != other.bits_;
    }
    constexpr bool meets(Codeword other) const { return (bits_ & other.bits_) != 0; }

    /// Largest neuron index present, 0 for the empty word.
    constexpr int max_neuron() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    /// 1-based neuron indices in increasing order.
    std::vector<int> neurons() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr Codeword operator&(Codeword a, Codeword b) { return Codeword(a.bits_ & b.bits_); }
    friend constexpr Codeword operator|(Codeword a, Codeword b) { return Codeword(a.bits_ | b.bits_); }
    /// Set difference.
    friend constexpr Codeword operator-(Codeword a, Codeword b) { return Codeword(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Codeword a, Codeword b) = default;

    /**
     * Canonical order: by cardinality, then lexicographically on the sorted
     * neuron lists, so that 1 < 2 < 12 < 13 < 23 < 123.
     */
    friend constexpr std::strong_ordering operator<=>(Codeword a, Codeword b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            int i = std::countr_zero(x), j = std::countr_zero(y);
            if (i != j)
                return i <=> j;
            x &= x - 1;
            y &= y - 1;
        }
        return std::strong_ordering::equal;
    }

private:
    std::uint64_t bits_ = 0;
};

/**
 * Compact notation used throughout the tooling: "123" for {1,2,3} when all
 * indices are single digits, "1,10,12" otherwise, and "0" for the empty set.
 */
inline std::string to_string(Codeword w)
{
    if (w.empty())
        return "0";
    const auto ns = w.neurons();
    const bool compact = ns.back() <= 9;
    std::string s;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (!compact && k > 0)
            s += ',';
        s += std::to_string(ns[k]);
    }
    return s;
}

/// Inverse of the compact notation for single-digit neurons ("123", "0").
inline Codeword parse_compact(const std::string& s)
{
    if (s == "0" || s.empty())
        return Codeword{};
    Codeword w;
    if (s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find(',', pos);
            if (next == std::string::npos)
                next = s.size();
            w = w.with(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return w;
    }
    for (char c : s) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("bad codeword literal: " + s);
        w = w.with(c - '0');
    }
    return w;
}

} // namespace convex_codes

template <>
struct std::hash<convex_codes::Codeword>
{
    std::size_t operator()(convex_codes::Codeword w) const noexcept
    {
        return std::hash<std::uint64_t>{}(w.bits());
    }
};

#endif
