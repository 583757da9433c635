#pragma once

#include "skewnorm/ore_ring.hpp"
#include "skewnorm/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace skewnorm {

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_weight(const Exponents &e);

// Graded-lexicographic order, largest first.
struct GradedLexGreater {
    bool operator()(const Exponents &a, const Exponents &b) const;
};

/// Degree of a polynomial: a natural number or minus infinity (zero
/// polynomial). Never converts silently to an integer.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    static Degree of(std::uint64_t d) { return Degree(d); }

    bool is_minus_infinity() const noexcept { return !value_.has_value(); }
    std::uint64_t value() const;

    friend bool operator==(const Degree &, const Degree &) = default;
    friend std::strong_ordering operator<=>(const Degree &a, const Degree &b);
    friend Degree operator+(const Degree &a, const Degree &b);

    std::string to_string() const;

private:
    Degree() = default;
    explicit Degree(std::uint64_t d) : value_(d) {}
    std::optional<std::uint64_t> value_;
};

/// Element of an Ore ring in its normal form: the left-coefficient expansion
/// sum b_I t1^i1 ... tn^in. Zero coefficients are never stored.
class SkewPoly {
public:
    using TermMap = std::map<Exponents, Scalar, GradedLexGreater>;

    explicit SkewPoly(RingPtr ring);
    SkewPoly(RingPtr ring, TermMap terms);

    static SkewPoly constant(RingPtr ring, const Scalar &r);
    static SkewPoly variable(RingPtr ring, std::size_t index);
    static SkewPoly monomial(RingPtr ring, const Exponents &e, const Scalar &coeff);

    const RingPtr &ring() const noexcept { return ring_; }
    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    // Coefficient at `e` (zero if absent).
    Scalar coeff(const Exponents &e) const;
    // True for the zero polynomial and for constants.
    bool is_constant() const;
    Scalar constant_term() const;

    SkewPoly operator-() const;
    friend SkewPoly operator+(const SkewPoly &f, const SkewPoly &g);
    friend SkewPoly operator-(const SkewPoly &f, const SkewPoly &g);
    friend SkewPoly operator*(const SkewPoly &f, const SkewPoly &g);
    SkewPoly &operator+=(const SkewPoly &g) { return *this = *this + g; }
    SkewPoly &operator-=(const SkewPoly &g) { return *this = *this - g; }
    SkewPoly &operator*=(const SkewPoly &g) { return *this = *this * g; }

    // Same ring and same terms.
    friend bool operator==(const SkewPoly &f, const SkewPoly &g);
    // Same terms, regardless of the ring object.
    bool same_terms(const SkewPoly &g) const;

private:
    RingPtr ring_;
    TermMap terms_;
};

SkewPoly add(const SkewPoly &f, const SkewPoly &g);
SkewPoly left_scale(const Scalar &c, const SkewPoly &f);
SkewPoly mul(const SkewPoly &f, const SkewPoly &g);
SkewPoly power(const SkewPoly &f, unsigned k);

// Normal form of t_i^k * r.
SkewPoly var_power_times_scalar(const RingPtr &ring, std::size_t i, unsigned k, const Scalar &r);
// Normal form of t1^i1 ... tn^in * r.
SkewPoly monomial_times_scalar(const RingPtr &ring, const Exponents &e, const Scalar &r);
// Normal form of (r t_j)^m, m >= 1.
SkewPoly scalar_var_power(const RingPtr &ring, const Scalar &r, std::size_t j, unsigned m);

Degree total_degree(const SkewPoly &f);
Degree degree_in(const SkewPoly &f, std::size_t var);

/// Top homogeneous part of f with the excluded variable dropped:
/// h = sum over |I| = deg f of b_I times the monomial in the remaining
/// variables. h lives in a commutative ring with trivial twists whose
/// variables are the remaining ones, in order.
SkewPoly leading_form(const SkewPoly &f, std::size_t excluded);

// Moves terms into another ring with the same coefficient ring and arity.
SkewPoly reinterpret(const SkewPoly &f, const RingPtr &ring);
// Drops trailing variables (which must not occur).
SkewPoly restrict_to_prefix(const SkewPoly &f, const RingPtr &prefix_ring);
// Inserts trailing variables with exponent zero.
SkewPoly extend_to(const SkewPoly &f, const RingPtr &bigger);

// Throws IncompatibleMaps when the ring's certificate failed.
void require_certified(const OreRing &ring);

} // namespace skewnorm
