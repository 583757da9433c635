#include "skewnorm/cns.hpp"

#include "skewnorm/coeff_rings.hpp"
#include "skewnorm/error.hpp"

#include <algorithm>

namespace skewnorm {

Scalar formal_substitute(const SkewPoly &f, const std::vector<Scalar> &point)
{
    const OreRing &ring = *f.ring();
    if (point.size() != ring.size())
        fail(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                           std::to_string(ring.size()) + " variables");
    Scalar sum = Scalar::zero(ring.kind());
    for (const auto &[e, c] : f.terms()) {
        Scalar term = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term *= point[v].pow(e[v]);
        sum += term;
    }
    return sum;
}

EvaluationSet EvaluationSet::make(std::vector<Scalar> elements)
{
    EvaluationSet set;
    set.elements = std::move(elements);
    for (std::size_t i = 0; i < set.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < set.elements.size(); ++j) {
            const Scalar &a = set.elements[i];
            const Scalar &b = set.elements[j];
            if (a == b)
                set.failures.push_back(a.to_string() + " occurs twice");
            else if (are_conjugate(a, b))
                set.failures.push_back(a.to_string() + " and " + b.to_string() + " are conjugate");
        }
    }
    return set;
}

bool validate_sets(const std::vector<EvaluationSet> &sets, std::uint64_t m)
{
    for (const auto &s : sets)
        if (!s.ok() || s.size() <= m) return false;
    return true;
}

Witness cns_witness(const SkewPoly &f, const std::vector<EvaluationSet> &sets)
{
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no witness");
    const std::size_t n = f.ring()->size();
    if (sets.size() != n)
        fail(ErrorCode::ArityMismatch, "need " + std::to_string(n) + " evaluation sets, got " +
                                           std::to_string(sets.size()));
    const std::uint64_t m = total_degree(f).value();
    if (!validate_sets(sets, m))
        fail(ErrorCode::PreconditionFailed,
             "every set must be pairwise non-conjugate with more than " + std::to_string(m) + " elements");

    Witness w;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Scalar> point;
        for (std::size_t v = 0; v < n; ++v) point.push_back(sets[v].elements[idx[v]]);
        ++w.scanned;
        Scalar value = formal_substitute(f, point);
        if (!value.is_zero()) {
            w.point = std::move(point);
            w.value = std::move(value);
            return w;
        }
        std::size_t v = n;
        while (v > 0) {
            --v;
            if (++idx[v] < sets[v].size()) break;
            idx[v] = 0;
            if (v == 0) fail(ErrorCode::NoWitnessFound, "every point of the product vanishes");
        }
        if (n == 0) fail(ErrorCode::NoWitnessFound, "constant zero");
    }
}

RootClassReport gordon_motzkin_check(const SkewPoly &f, const std::vector<Scalar> &roots)
{
    const OreRing &ring = *f.ring();
    if (ring.size() != 1) fail(ErrorCode::ArityMismatch, "Gordon-Motzkin check needs a univariate polynomial");
    const Variable &v = ring.variable(0);
    if (v.aut.canonical().kind() != RingMap::Kind::Identity || v.der.canonical().kind() != RingMap::Kind::ZeroDer)
        fail(ErrorCode::TwistMismatch, "Gordon-Motzkin check needs trivial twists, got (" + v.aut.describe() + ", " +
                                           v.der.describe() + ")");
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "every element is a root of zero");

    RootClassReport report;
    report.degree = total_degree(f).value();
    for (const auto &r : roots) {
        if (!formal_substitute(f, {r}).is_zero()) fail(ErrorCode::NotARoot, r.to_string());
        bool placed = false;
        for (auto &cls : report.classes) {
            if (are_conjugate(cls.members.front(), r)) {
                if (std::find(cls.members.begin(), cls.members.end(), r) == cls.members.end())
                    cls.members.push_back(r);
                placed = true;
                break;
            }
        }
        if (placed) continue;
        ConjugacyClass cls{{r}, std::nullopt};
        if (r.kind() == RingKind::HQ) cls.trace_norm = {r.quaternion().trace(), r.quaternion().norm()};
        report.classes.push_back(std::move(cls));
    }
    if (report.classes.size() > report.degree)
        fail(ErrorCode::BoundViolated, std::to_string(report.classes.size()) + " root classes exceed degree " +
                                           std::to_string(report.degree));
    return report;
}

} // namespace skewnorm
