#ifndef CONVEX_CODES_FEASIBILITY_HPP
#define CONVEX_CODES_FEASIBILITY_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "convex_codes/polyhedra.hpp"

namespace convex_codes {

struct FeasibilityOptions
{
    int max_dimension = 8;
    bool want_certificate = false;
};

/**
 * Outcome of an exact feasibility test. A feasible system carries a rational
 * witness; an infeasible one, when requested, carries Farkas multipliers y
 * (one per input constraint, y_i >= 0 for inequalities) with Σ y_i a_i = 0
 * and either Σ y_i b_i < 0, or Σ y_i b_i = 0 with a positive weight on some
 * strict constraint.
 */
struct FeasibilityResult
{
    std::optional<Vector> witness;
    std::vector<Rational> multipliers;

    explicit operator bool() const { return witness.has_value(); }
};

namespace detail {

struct FmRow
{
    Vector a;
    Rational b;
    bool strict = false;
    std::vector<Rational> mult;
};

inline bool row_is_zero(const FmRow& r)
{
    return is_zero(r.a);
}

/// A constant row 0 (<, <=) b is violated.
inline bool row_contradicts(const FmRow& r)
{
    return r.strict ? !(0 < r.b) : !(0 <= r.b);
}

/// Scales so the first non-zero coefficient has magnitude one; keeps the tightest row per direction.
inline std::vector<FmRow> normalize_rows(std::vector<FmRow> rows)
{
    std::map<std::vector<std::string>, std::size_t> best;
    std::vector<FmRow> out;
    for (auto& r : rows) {
        if (row_is_zero(r)) {
            out.push_back(std::move(r));
            continue;
        }
        Rational s = 0;
        for (const auto& x : r.a)
            if (x != 0) {
                s = abs(x);
                break;
            }
        if (s != 1) {
            for (auto& x : r.a)
                x /= s;
            r.b /= s;
            for (auto& m : r.mult)
                m /= s;
        }
        std::vector<std::string> key;
        key.reserve(r.a.size());
        for (const auto& x : r.a)
            key.push_back(x.str());
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(std::move(key), out.size());
            out.push_back(std::move(r));
            continue;
        }
        FmRow& cur = out[it->second];
        if (r.b < cur.b || (r.b == cur.b && r.strict && !cur.strict))
            cur = std::move(r);
    }
    return out;
}

struct Bound
{
    std::optional<Rational> value;
    bool strict = false;
};

} // namespace detail

/**
 * Exact feasibility of a system of linear (in)equalities with mixed strict
 * and weak relations. Equalities are eliminated by substitution, the rest by
 * Fourier–Motzkin; a witness is rebuilt by back-substitution.
 */
inline FeasibilityResult feasible(std::span<const LinearConstraint> constraints, int dimension,
                                  const FeasibilityOptions& opt = {})
{
    using detail::FmRow;
    if (dimension > opt.max_dimension)
        throw std::length_error("dimension " + std::to_string(dimension) + " exceeds the configured cap of " +
                                std::to_string(opt.max_dimension));
    const std::size_t m = constraints.size();
    std::vector<FmRow> eqs, rows;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        if (static_cast<int>(c.normal.size()) != dimension)
            throw std::invalid_argument("constraint dimension mismatch");
        FmRow r{c.normal, c.offset, c.relation == Relation::Less, {}};
        if (opt.want_certificate) {
            r.mult.assign(m, Rational(0));
            r.mult[i] = 1;
        }
        (c.relation == Relation::Equal ? eqs : rows).push_back(std::move(r));
    }

    FeasibilityResult result;
    auto fail = [&](const FmRow& r) {
        result.witness.reset();
        result.multipliers = r.mult;
        return result;
    };

    // Substitute away equalities: each records (row, pivot variable).
    std::vector<std::pair<FmRow, int>> substitutions;
    while (!eqs.empty()) {
        FmRow e = std::move(eqs.back());
        eqs.pop_back();
        int pivot = -1;
        for (int j = dimension - 1; j >= 0; --j)
            if (e.a[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) {
            if (e.b != 0) {
                if (e.b > 0) // flip so the certificate reads 0 = b < 0 with sign-free weights
                    for (auto& x : e.mult)
                        x = -x;
                return fail(e);
            }
            continue;
        }
        auto eliminate = [&](FmRow& r) {
            if (r.a[pivot] == 0)
                return;
            const Rational f = r.a[pivot] / e.a[pivot];
            for (int j = 0; j < dimension; ++j)
                r.a[j] -= f * e.a[j];
            r.b -= f * e.b;
            for (std::size_t k = 0; k < r.mult.size(); ++k)
                r.mult[k] -= f * e.mult[k];
        };
        for (auto& r : eqs)
            eliminate(r);
        for (auto& r : rows)
            eliminate(r);
        substitutions.emplace_back(std::move(e), pivot);
    }

    std::vector<bool> pivoted(dimension, false);
    for (const auto& s : substitutions)
        pivoted[s.second] = true;

    // Fourier–Motzkin, highest free variable first; stage[j] holds the rows before eliminating j.
    std::vector<std::vector<FmRow>> stage(dimension);
    rows = detail::normalize_rows(std::move(rows));
    for (int j = dimension - 1; j >= 0; --j) {
        for (const auto& r : rows)
            if (row_is_zero(r) && detail::row_contradicts(r))
                return fail(r);
        if (pivoted[j])
            continue;
        stage[j] = rows;
        std::vector<FmRow> pos, neg, next;
        for (auto& r : rows) {
            const int s = sign(r.a[j]);
            (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                const Rational lp = -q.a[j], lq = p.a[j];
                FmRow c;
                c.a.resize(dimension);
                for (int k = 0; k < dimension; ++k)
                    c.a[k] = lp * p.a[k] + lq * q.a[k];
                c.a[j] = 0;
                c.b = lp * p.b + lq * q.b;
                c.strict = p.strict || q.strict;
                if (!p.mult.empty()) {
                    c.mult.resize(m);
                    for (std::size_t k = 0; k < m; ++k)
                        c.mult[k] = lp * p.mult[k] + lq * q.mult[k];
                }
                next.push_back(std::move(c));
            }
        rows = detail::normalize_rows(std::move(next));
    }
    for (const auto& r : rows)
        if (detail::row_contradicts(r))
            return fail(r);

    // Back-substitution.
    Vector x(dimension, Rational(0));
    for (int j = 0; j < dimension; ++j) {
        if (pivoted[j])
            continue;
        detail::Bound lo, hi;
        for (const auto& r : stage[j]) {
            if (r.a[j] == 0)
                continue;
            Rational rest = r.b;
            for (int k = 0; k < j; ++k)
                rest -= r.a[k] * x[k];
            const Rational v = rest / r.a[j];
            if (r.a[j] > 0) {
                if (!hi.value || v < *hi.value || (v == *hi.value && r.strict))
                    hi = {v, r.strict || (hi.value && v == *hi.value && hi.strict)};
            } else {
                if (!lo.value || v > *lo.value || (v == *lo.value && r.strict))
                    lo = {v, r.strict || (lo.value && v == *lo.value && lo.strict)};
            }
        }
        auto admissible = [&](const Rational& t) {
            if (lo.value && (lo.strict ? !(t > *lo.value) : !(t >= *lo.value)))
                return false;
            if (hi.value && (hi.strict ? !(t < *hi.value) : !(t <= *hi.value)))
                return false;
            return true;
        };
        if (admissible(Rational(0)))
            x[j] = 0;
        else if (lo.value && hi.value)
            x[j] = *lo.value == *hi.value ? *lo.value : (*lo.value + *hi.value) / 2;
        else if (lo.value)
            x[j] = *lo.value + 1;
        else
            x[j] = *hi.value - 1;
    }
    for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
        const auto& [e, pivot] = *it;
        Rational rest = e.b;
        for (int k = 0; k < dimension; ++k)
            if (k != pivot)
                rest -= e.a[k] * x[k];
        x[pivot] = rest / e.a[pivot];
    }
    for (const auto& c : constraints)
        if (!c.satisfied_by(x))
            throw std::logic_error("feasibility witness failed verification");
    result.witness = std::move(x);
    return result;
}

inline FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints, int dimension,
                                  const FeasibilityOptions& opt = {})
{
    return feasible(std::span<const LinearConstraint>(constraints), dimension, opt);
}

/// Checks a Farkas certificate produced by feasible().
inline bool verify_infeasibility(std::span<const LinearConstraint> constraints, const std::vector<Rational>& y)
{
    if (y.size() != constraints.size() || constraints.empty())
        return false;
    const std::size_t d = constraints[0].normal.size();
    Vector combo(d, Rational(0));
    Rational rhs = 0;
    bool strict_used = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto& c = constraints[i];
        if (c.relation != Relation::Equal && y[i] < 0)
            return false;
        for (std::size_t k = 0; k < d; ++k)
            combo[k] += y[i] * c.normal[k];
        rhs += y[i] * c.offset;
        if (c.relation == Relation::Less && y[i] > 0)
            strict_used = true;
    }
    if (!is_zero(combo))
        return false;
    return rhs < 0 || (rhs == 0 && strict_used);
}

} // namespace convex_codes

#endif
