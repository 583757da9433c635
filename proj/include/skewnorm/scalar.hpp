#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace skewnorm {

using Rational = mpq_class;

// The three supported division rings: Q, Q(x) and the rational quaternions
// (-1,-1 / Q).
enum class RingKind { Q, Qx, HQ };

const char *ring_kind_name(RingKind kind) noexcept;
RingKind ring_kind_from_name(const std::string &name);

std::string rational_to_string(const Rational &q);

/// Dense univariate polynomial over Q in the indeterminate x. Coefficients are
/// stored low degree first with no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rational constant);
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly x();

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &lead() const { return coeffs_.back(); }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

    UPoly operator-() const;
    UPoly &operator+=(const UPoly &o);
    UPoly &operator-=(const UPoly &o);
    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator*(const UPoly &a, const UPoly &b);
    UPoly scaled(const Rational &c) const;
    bool operator==(const UPoly &o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const UPoly &a, const UPoly &b, UPoly &quot, UPoly &rem);
    // Monic gcd (zero iff both inputs are zero).
    static UPoly gcd(UPoly a, UPoly b);

    UPoly monic() const;
    UPoly derivative() const;
    // f(q*x)
    UPoly dilated(const Rational &q) const;

    bool is_single_term() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Element of Q(x): reduced fraction with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    explicit RatFunc(const Rational &c) : num_(c), den_(Rational(1)) {}
    RatFunc(UPoly num, UPoly den);

    static RatFunc x() { return RatFunc(UPoly::x(), UPoly(Rational(1))); }

    const UPoly &num() const noexcept { return num_; }
    const UPoly &den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_, canonical_tag{}); }
    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    RatFunc inverse() const;
    bool operator==(const RatFunc &o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc derivative() const;
    RatFunc dilated(const Rational &q) const;

    std::string to_string() const;

private:
    struct canonical_tag {};
    RatFunc(UPoly num, UPoly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}
    UPoly num_;
    UPoly den_;
};

/// w + a*i + b*j + c*k with rational components, i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
    Rational w, a, b, c;

    bool is_zero() const { return sgn(w) == 0 && sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0; }
    bool is_central() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0; }
    Rational trace() const { return 2 * w; }
    Rational norm() const { return w * w + a * a + b * b + c * c; }
    Quaternion conjugate() const { return {w, -a, -b, -c}; }

    friend Quaternion operator+(const Quaternion &x, const Quaternion &y);
    friend Quaternion operator-(const Quaternion &x, const Quaternion &y);
    friend Quaternion operator*(const Quaternion &x, const Quaternion &y);
    Quaternion operator-() const { return {-w, -a, -b, -c}; }
    Quaternion inverse() const;
    bool operator==(const Quaternion &o) const { return w == o.w && a == o.a && b == o.b && c == o.c; }

    std::string to_string() const;
};

/// An element of the active division ring. Arithmetic between different
/// variants throws VariantMismatch.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    explicit Scalar(Rational q) : value_(canonical(std::move(q))) {}
    explicit Scalar(RatFunc f) : value_(std::move(f)) {}
    explicit Scalar(Quaternion h) : value_(std::move(h)) {}

    static Scalar zero(RingKind kind) { return from_rational(kind, Rational(0)); }
    static Scalar one(RingKind kind) { return from_rational(kind, Rational(1)); }
    static Scalar from_int(RingKind kind, long n) { return from_rational(kind, Rational(n)); }
    static Scalar from_rational(RingKind kind, const Rational &q);
    static Scalar indeterminate(); // x in Q(x)
    static Scalar unit_i();
    static Scalar unit_j();
    static Scalar unit_k();

    RingKind kind() const noexcept { return static_cast<RingKind>(value_.index()); }
    bool is_zero() const;
    bool is_one() const;
    // Central in the active ring (every element of a field is).
    bool is_central() const;
    // Lies in the prime subfield Q.
    bool is_rational() const;
    Rational as_rational() const;

    const Rational &rational() const { return std::get<Rational>(value_); }
    const RatFunc &ratfunc() const { return std::get<RatFunc>(value_); }
    const Quaternion &quaternion() const { return std::get<Quaternion>(value_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a, const Scalar &b);
    friend Scalar operator*(const Scalar &a, const Scalar &b);
    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }
    Scalar inverse() const;
    Scalar pow(unsigned k) const;

    friend bool operator==(const Scalar &a, const Scalar &b);
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    std::string to_string() const;

private:
    // mpq_class(4, 2) stays 4/2 until told otherwise.
    static Rational canonical(Rational q)
    {
        q.canonicalize();
        return q;
    }

    std::variant<Rational, RatFunc, Quaternion> value_;
};

// Deterministic sample of small elements, used by the sampled law checks.
Scalar random_scalar(RingKind kind, std::mt19937_64 &rng);

// True iff the canonical text of a scalar has a top-level '+' or '-' and
// therefore needs parentheses when used as a factor.
bool needs_parentheses(const std::string &text);

} // namespace skewnorm
