#pragma once

#include "skewnorm/coeff_rings.hpp"
#include "skewnorm/ring_map.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewnorm {

struct Variable {
    std::string name;
    RingMap aut;
    RingMap der;
};

// Tower: D[t1; w1, d1]...[tn; wn, dn] with the twists extended to earlier
// variables by w(tj) = tj, d(tj) = 0.
// Commuting: D[t1, ..., tn; (w1, d1), ..., (wn, dn)] with commuting variables.
// With scalar-level descriptors both flavors share one multiplication; they
// differ in how they are reported and converted.
enum class Flavor { Tower, Commuting };

const char *flavor_name(Flavor f) noexcept;

/// Compatibility certificate of a ring's twists: per variable Leibniz and
/// automorphism checks, and for every pair i != j the commutation of
/// wi/wj, wi/dj and di/dj.
struct CompatibilityCertificate {
    std::vector<std::string> failures;
    int samples = 0;
    std::uint64_t seed = 0;
    bool ok() const noexcept { return failures.empty(); }
};

class OreRing;
using RingPtr = std::shared_ptr<const OreRing>;

class OreRing {
public:
    static RingPtr create(RingKind kind, std::vector<Variable> vars, Flavor flavor = Flavor::Commuting,
                          CheckOptions opts = {});

    RingKind kind() const noexcept { return kind_; }
    Flavor flavor() const noexcept { return flavor_; }
    std::size_t size() const noexcept { return vars_.size(); }
    const std::vector<Variable> &variables() const noexcept { return vars_; }
    const Variable &variable(std::size_t i) const { return vars_.at(i); }
    std::optional<std::size_t> index_of(const std::string &name) const;
    const CompatibilityCertificate &certificate() const noexcept { return certificate_; }
    const CheckOptions &check_options() const noexcept { return opts_; }

    // All twisting maps, automorphisms first (used for the F-stream).
    std::vector<RingMap> all_maps() const;
    // True when every variable shares one automorphism.
    bool shares_automorphism() const;

    // Same coefficient ring and options, new variable list.
    RingPtr with_variables(std::vector<Variable> vars) const;
    // Ring of the first `count` variables.
    RingPtr prefix(std::size_t count) const;

    nlohmann::ordered_json to_json() const;

private:
    OreRing() = default;
    RingKind kind_ = RingKind::Q;
    Flavor flavor_ = Flavor::Commuting;
    std::vector<Variable> vars_;
    CompatibilityCertificate certificate_;
    CheckOptions opts_;
};

// Identifiers that are scalar literals in some ring and cannot name variables.
bool is_reserved_name(const std::string &name);

// Tower ring with the same twists; products agree with the source ring.
RingPtr convert_commuting_to_tower(const RingPtr &ring);

RingPtr ring_from_json(const nlohmann::json &config, CheckOptions opts = {});
RingPtr ring_from_file(const std::string &path, CheckOptions opts = {});

// Commutative polynomial ring D[x1..xn] with trivial twists.
RingPtr plain_ring(RingKind kind, const std::vector<std::string> &names);

} // namespace skewnorm
