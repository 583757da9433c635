#include "skewnorm/ore_ring.hpp"

#include "skewnorm/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

namespace skewnorm {

const char *flavor_name(Flavor f) noexcept { return f == Flavor::Tower ? "tower" : "commuting"; }

bool is_reserved_name(const std::string &name)
{
    return name == "x" || name == "i" || name == "j" || name == "k";
}

namespace {

bool valid_identifier(const std::string &name)
{
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

CompatibilityCertificate certify(RingKind kind, const std::vector<Variable> &vars, CheckOptions opts)
{
    CompatibilityCertificate cert;
    cert.samples = opts.samples;
    cert.seed = opts.seed;
    for (const auto &v : vars) {
        if (!check_automorphism(kind, v.aut, opts))
            cert.failures.push_back(v.name + ": " + v.aut.describe() + " is not an automorphism");
        if (!check_derivation(kind, v.aut, v.der, opts))
            cert.failures.push_back(v.name + ": " + v.der.describe() + " is not a " + v.aut.describe() +
                                    "-derivation");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (i == j) continue;
            const auto &a = vars[i];
            const auto &b = vars[j];
            std::vector<std::pair<RingMap, RingMap>> pairs;
            if (i < j) {
                pairs = {{a.aut, b.aut}, {a.der, b.der}};
                if (!check_commutation(kind, std::span<const std::pair<RingMap, RingMap>>(pairs.data(), 1), opts))
                    cert.failures.push_back(a.name + "/" + b.name + ": automorphisms do not commute");
                if (!check_commutation(kind, std::span<const std::pair<RingMap, RingMap>>(pairs.data() + 1, 1), opts))
                    cert.failures.push_back(a.name + "/" + b.name + ": derivations do not commute");
            }
            pairs = {{a.aut, b.der}};
            if (!check_commutation(kind, std::span<const std::pair<RingMap, RingMap>>(pairs), opts))
                cert.failures.push_back(a.name + "/" + b.name + ": automorphism of " + a.name +
                                        " does not commute with derivation of " + b.name);
        }
    }
    return cert;
}

} // namespace

RingPtr OreRing::create(RingKind kind, std::vector<Variable> vars, Flavor flavor, CheckOptions opts)
{
    std::set<std::string> seen;
    for (const auto &v : vars) {
        if (!valid_identifier(v.name)) fail(ErrorCode::ConfigError, "invalid variable name '" + v.name + "'");
        if (is_reserved_name(v.name))
            fail(ErrorCode::ConfigError, "variable name '" + v.name + "' is reserved for a scalar literal");
        if (!seen.insert(v.name).second) fail(ErrorCode::ConfigError, "duplicate variable name '" + v.name + "'");
        if (!v.aut.is_automorphism())
            fail(ErrorCode::ConfigError, "twist of " + v.name + " must be an automorphism descriptor");
        if (!v.der.is_derivation())
            fail(ErrorCode::ConfigError, "derivation of " + v.name + " must be a derivation descriptor");
    }
    auto ring = std::shared_ptr<OreRing>(new OreRing());
    ring->kind_ = kind;
    ring->flavor_ = flavor;
    ring->opts_ = opts;
    ring->certificate_ = certify(kind, vars, opts);
    ring->vars_ = std::move(vars);
    return ring;
}

std::optional<std::size_t> OreRing::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

std::vector<RingMap> OreRing::all_maps() const
{
    std::vector<RingMap> maps;
    for (const auto &v : vars_) maps.push_back(v.aut);
    for (const auto &v : vars_) maps.push_back(v.der);
    return maps;
}

bool OreRing::shares_automorphism() const
{
    for (std::size_t i = 1; i < vars_.size(); ++i)
        if (!maps_agree(kind_, vars_[0].aut, vars_[i].aut, opts_)) return false;
    return true;
}

RingPtr OreRing::with_variables(std::vector<Variable> vars) const { return create(kind_, std::move(vars), flavor_, opts_); }

RingPtr OreRing::prefix(std::size_t count) const
{
    if (count > vars_.size()) fail(ErrorCode::ArityMismatch, "prefix longer than the variable list");
    return with_variables(std::vector<Variable>(vars_.begin(), vars_.begin() + static_cast<std::ptrdiff_t>(count)));
}

nlohmann::ordered_json OreRing::to_json() const
{
    nlohmann::ordered_json j;
    j["ring"] = ring_kind_name(kind_);
    j["flavor"] = flavor_name(flavor_);
    auto vars = nlohmann::ordered_json::array();
    for (const auto &v : vars_) {
        nlohmann::ordered_json entry;
        entry["name"] = v.name;
        entry["aut"] = v.aut.to_json();
        entry["der"] = v.der.to_json();
        vars.push_back(std::move(entry));
    }
    j["vars"] = std::move(vars);
    return j;
}

RingPtr convert_commuting_to_tower(const RingPtr &ring)
{
    if (!ring->certificate().ok())
        fail(ErrorCode::IncompatibleMaps, "cannot convert: " + ring->certificate().failures.front());
    return OreRing::create(ring->kind(), ring->variables(), Flavor::Tower, ring->check_options());
}

RingPtr ring_from_json(const nlohmann::json &config, CheckOptions opts)
{
    if (!config.is_object()) fail(ErrorCode::ConfigError, "ring configuration must be a JSON object");
    if (!config.contains("ring") || !config.at("ring").is_string())
        fail(ErrorCode::ConfigError, "ring configuration needs a string field 'ring'");
    const RingKind kind = ring_kind_from_name(config.at("ring").get<std::string>());
    Flavor flavor = Flavor::Commuting;
    if (config.contains("flavor")) {
        const std::string f = config.at("flavor").get<std::string>();
        if (f == "tower")
            flavor = Flavor::Tower;
        else if (f != "commuting")
            fail(ErrorCode::ConfigError, "unknown flavor '" + f + "'");
    }
    std::vector<Variable> vars;
    if (config.contains("vars")) {
        if (!config.at("vars").is_array()) fail(ErrorCode::ConfigError, "'vars' must be an array");
        for (const auto &entry : config.at("vars")) {
            if (!entry.contains("name") || !entry.at("name").is_string())
                fail(ErrorCode::ConfigError, "every variable needs a string 'name'");
            Variable v{entry.at("name").get<std::string>(), RingMap::identity(), RingMap::zero_der(RingMap::identity())};
            if (entry.contains("aut")) v.aut = RingMap::from_json(entry.at("aut"), kind);
            v.der = entry.contains("der") ? RingMap::from_json(entry.at("der"), kind, &v.aut) : RingMap::zero_der(v.aut);
            vars.push_back(std::move(v));
        }
    }
    return OreRing::create(kind, std::move(vars), flavor, opts);
}

RingPtr ring_from_file(const std::string &path, CheckOptions opts)
{
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ConfigError, "cannot open ring configuration '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::ConfigError, "malformed JSON in '" + path + "': " + e.what());
    }
    return ring_from_json(j, opts);
}

RingPtr plain_ring(RingKind kind, const std::vector<std::string> &names)
{
    std::vector<Variable> vars;
    for (const auto &n : names) vars.push_back({n, RingMap::identity(), RingMap::zero_der(RingMap::identity())});
    return OreRing::create(kind, std::move(vars), Flavor::Commuting, CheckOptions{0, kDefaultSeed});
}

} // namespace skewnorm
