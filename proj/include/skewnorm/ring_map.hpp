#pragma once

#include "skewnorm/scalar.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace skewnorm {

/// Symbolic descriptor of an automorphism or a twisted derivation of the
/// active division ring. The family is closed so that application is exact
/// and map laws can be certified per constructor.
///
/// Every derivation carries the automorphism it is twisted by:
///   delta(a*b) = aut(a)*delta(b) + delta(a)*b.
class RingMap {
public:
    enum class Kind {
        Identity,
        InnerAut,   // r -> c r c^-1
        QShift,     // f(x) -> f(q x), Q(x) only
        ZeroDer,
        Ddx,        // d/dx, Q(x) only, twisted by the identity
        InnerDer,   // r -> c r - aut(r) c
        QDiff,      // f -> (f(qx) - f(x)) / (qx - x), twisted by QShift(q)
        LinComb,    // sum of central multiples of derivations sharing one twist
    };

    struct Term {
        Scalar coeff;
        std::shared_ptr<const RingMap> der;
    };

    static RingMap identity();
    static RingMap inner_aut(const Scalar &c);
    static RingMap qshift(const Rational &q);
    static RingMap zero_der(const RingMap &aut);
    static RingMap ddx();
    static RingMap inner_der(const Scalar &c, const RingMap &aut);
    static RingMap qdiff(const Rational &q);
    static RingMap lin_comb(const RingMap &aut, const std::vector<std::pair<Scalar, RingMap>> &terms);

    Kind kind() const noexcept { return kind_; }
    bool is_automorphism() const noexcept;
    bool is_derivation() const noexcept { return !is_automorphism(); }

    // The twisting automorphism of a derivation.
    const RingMap &paired_automorphism() const;

    const Scalar &element() const { return element_; } // c of InnerAut / InnerDer
    const Rational &q() const { return q_; }           // q of QShift / QDiff
    const std::vector<Term> &terms() const { return terms_; }

    Scalar apply(const Scalar &r) const;
    Scalar operator()(const Scalar &r) const { return apply(r); }

    // Inverse of an automorphism descriptor.
    RingMap inverse() const;

    // Flattens and merges linear combinations, drops zero terms and rewrites
    // inner automorphisms by central elements as the identity.
    RingMap canonical() const;

    // Structural equality of descriptors.
    bool operator==(const RingMap &o) const;
    bool operator!=(const RingMap &o) const { return !(*this == o); }

    std::string describe() const;
    nlohmann::ordered_json to_json() const;
    // `default_aut` twists derivations whose descriptor omits "aut".
    static RingMap from_json(const nlohmann::json &j, RingKind kind, const RingMap *default_aut = nullptr);

private:
    RingMap() = default;
    Kind kind_ = Kind::Identity;
    Scalar element_;
    Rational q_{1};
    std::shared_ptr<const RingMap> aut_;
    std::vector<Term> terms_;
};

} // namespace skewnorm
