#pragma once

#include "skewnorm/ring_map.hpp"
#include "skewnorm/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace skewnorm {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr int kDefaultSamples = 64;

struct CheckOptions {
    int samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
};

using MapFn = std::function<Scalar(const Scalar &)>;

// Sampled checks of the twisted Leibniz rule and additivity on seeded
// pseudo-random pairs. The RingMap overloads additionally consult the
// constructor-level certificate, which can only veto.
bool check_derivation(RingKind kind, const MapFn &aut, const MapFn &der, CheckOptions opts = {});
bool check_derivation(RingKind kind, const RingMap &aut, const RingMap &der, CheckOptions opts = {});

// Multiplicativity, additivity, unit and invertibility on samples.
bool check_automorphism(RingKind kind, const RingMap &aut, CheckOptions opts = {});

// Every pair (f, g) satisfies f(g(r)) == g(f(r)) on samples.
bool check_commutation(RingKind kind, std::span<const std::pair<RingMap, RingMap>> pairs, CheckOptions opts = {});
bool check_commutation(RingKind kind, std::span<const std::pair<MapFn, MapFn>> pairs, CheckOptions opts = {});

// Analytic verdict for a known constructor family: true/false when decided,
// nullopt when only sampling can tell.
std::optional<bool> certify_derivation(const RingMap &aut, const RingMap &der);
std::optional<bool> certify_commutation(const RingMap &f, const RingMap &g);

// Two descriptors denote the same map: equal canonical forms, or agreement on
// samples.
bool maps_agree(RingKind kind, const RingMap &f, const RingMap &g, CheckOptions opts = {});

/// Conjugacy in the active ring. For fields this is equality. For the rational
/// quaternions two elements are conjugate iff they have the same minimal
/// polynomial over Q: central elements only to themselves, non-central ones
/// iff reduced trace and reduced norm agree (Skolem-Noether).
bool are_conjugate(const Scalar &a, const Scalar &b);

// Exact membership in Z(D) ∩ D_aut ∩ Ker(der) for every map given:
// central, fixed by every automorphism and killed by every derivation.
bool in_central_fixed(const Scalar &e, std::span<const RingMap> maps);

/// Deterministic stream 0, 1, -1, 2, -2, ... of prime-subfield elements that
/// pass in_central_fixed for the given maps.
class CentralFixedStream {
public:
    CentralFixedStream(RingKind kind, std::vector<RingMap> maps);

    Scalar next();
    std::vector<Scalar> take(std::size_t count);
    RingKind kind() const noexcept { return kind_; }
    const std::vector<RingMap> &maps() const noexcept { return maps_; }

    // Candidates rejected in a row before giving up.
    static constexpr std::size_t kMaxRejections = 4096;

private:
    Rational candidate(std::size_t index) const;
    RingKind kind_;
    std::vector<RingMap> maps_;
    std::size_t index_ = 0;
};

} // namespace skewnorm
