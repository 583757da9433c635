#pragma once

#include "skewnorm/coeff_rings.hpp"
#include "skewnorm/ore_ring.hpp"
#include "skewnorm/skew_poly.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace skewnorm {

struct LawReport {
    std::string law;
    int samples = 0;
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
};

struct Certificate {
    std::vector<LawReport> laws;
    // Set when the laws hold by construction (the ring's own variables).
    bool analytic = false;
    bool ok() const noexcept;
    nlohmann::ordered_json to_json() const;
};

struct Twist {
    RingMap aut;
    RingMap der;
};

/// Elements s1..sn of an ambient ring S with claimed twists: each
/// s_i r = w_i(r) s_i + d_i(r) and the s_i pairwise commute.
struct AutomorphicTuple {
    RingPtr ambient;
    std::vector<SkewPoly> elements;
    std::vector<Twist> twists;
    Certificate certificate;
};

// s r == w(r) s + d(r) for every sampled scalar r.
bool is_automorphic(const SkewPoly &s, const RingMap &aut, const RingMap &der, CheckOptions opts = {});

Certificate certify_tuple(const RingPtr &ambient, const std::vector<SkewPoly> &elements,
                          const std::vector<Twist> &twists, CheckOptions opts = {});
// Builds and certifies; check `certificate.ok()` before use.
AutomorphicTuple make_tuple(const RingPtr &ambient, std::vector<SkewPoly> elements, std::vector<Twist> twists,
                            CheckOptions opts = {});
// (t1, ..., tn) of the ring itself.
AutomorphicTuple variables_tuple(const RingPtr &ring);

/// sum b_I s1^i1 ... sn^in, powers multiplied left to right.
/// Throws CertificateFailed, ArityMismatch, RingMismatch or TwistMismatch.
SkewPoly evaluate(const SkewPoly &f, const AutomorphicTuple &tuple);

struct MixedDerivations {
    std::vector<RingMap> ders;
    Certificate certificate;
};

/// d_i = d_i + a_i d_n for i < n, d_n unchanged. Every a_i must lie in F
/// (NotInF). The returned certificate covers the Leibniz rule, commutation
/// with the automorphism and pairwise commutation.
MixedDerivations mix_derivations(RingKind kind, const RingMap &aut, const std::vector<RingMap> &ders,
                                 const std::vector<Scalar> &coeffs, CheckOptions opts = {});

/// u_i = s_i + a_i s_n for i < n, u_n = s_n, with the mixed twists.
/// Throws CertificateFailed when the input or output tuple is not certified.
AutomorphicTuple mix_elements(const AutomorphicTuple &tuple, const std::vector<Scalar> &coeffs,
                              CheckOptions opts = {});

} // namespace skewnorm
