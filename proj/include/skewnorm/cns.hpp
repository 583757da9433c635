#pragma once

#include "skewnorm/scalar.hpp"
#include "skewnorm/skew_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewnorm {

/// sum b_I a1^i1 ... an^in by plain scalar arithmetic. The twists of f's
/// ring play no part, so this is not a ring homomorphism: f(a) g(a) and
/// (fg)(a) differ in general. See evaluate() for the homomorphism.
Scalar formal_substitute(const SkewPoly &f, const std::vector<Scalar> &point);

/// Finite set of pairwise non-conjugate, distinct scalars.
struct EvaluationSet {
    std::vector<Scalar> elements;
    // Offending pairs; empty when the set is valid.
    std::vector<std::string> failures;

    static EvaluationSet make(std::vector<Scalar> elements);
    bool ok() const noexcept { return failures.empty(); }
    std::size_t size() const noexcept { return elements.size(); }
};

// Every set is certified and has more than m elements.
bool validate_sets(const std::vector<EvaluationSet> &sets, std::uint64_t m);

struct Witness {
    std::vector<Scalar> point;
    Scalar value;
    // Points examined, the witness included.
    std::uint64_t scanned = 0;
};

/// First point of A1 x ... x An in lexicographic order (last coordinate
/// fastest) with a nonzero formal value. Throws PreconditionFailed when the
/// sets do not satisfy validate_sets(sets, deg f) and NoWitnessFound if the
/// scan comes back empty.
Witness cns_witness(const SkewPoly &f, const std::vector<EvaluationSet> &sets);

struct ConjugacyClass {
    std::vector<Scalar> members;
    // Reduced trace and norm (quaternions only).
    std::optional<std::pair<Rational, Rational>> trace_norm;
};

struct RootClassReport {
    std::vector<ConjugacyClass> classes;
    std::uint64_t degree = 0;
};

/// Partitions verified roots of a univariate polynomial with trivial twists
/// into conjugacy classes and checks that there are at most deg f of them.
/// Throws TwistMismatch, NotARoot or BoundViolated.
RootClassReport gordon_motzkin_check(const SkewPoly &f, const std::vector<Scalar> &roots);

} // namespace skewnorm
