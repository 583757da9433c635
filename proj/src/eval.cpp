#include "skewnorm/eval.hpp"

#include "skewnorm/error.hpp"

#include <random>

namespace skewnorm {

bool Certificate::ok() const noexcept
{
    for (const auto &l : laws)
        if (!l.ok()) return false;
    return true;
}

nlohmann::ordered_json Certificate::to_json() const
{
    nlohmann::ordered_json j;
    j["ok"] = ok();
    j["analytic"] = analytic;
    auto arr = nlohmann::ordered_json::array();
    for (const auto &l : laws) {
        nlohmann::ordered_json e;
        e["law"] = l.law;
        e["samples"] = l.samples;
        e["failures"] = l.failures;
        arr.push_back(std::move(e));
    }
    j["laws"] = std::move(arr);
    return j;
}

namespace {

// Failing sample values for s r = w(r) s + d(r).
std::vector<std::string> automorphic_failures(const SkewPoly &s, const RingMap &aut, const RingMap &der,
                                              CheckOptions opts)
{
    std::vector<std::string> failures;
    const RingPtr &ring = s.ring();
    std::mt19937_64 rng(opts.seed);
    for (int n = 0; n < opts.samples; ++n) {
        const Scalar r = random_scalar(ring->kind(), rng);
        try {
            const SkewPoly lhs = s * SkewPoly::constant(ring, r);
            const SkewPoly rhs = SkewPoly::constant(ring, aut.apply(r)) * s + SkewPoly::constant(ring, der.apply(r));
            if (!lhs.same_terms(rhs)) failures.push_back("r = " + r.to_string());
        } catch (const Error &e) {
            failures.push_back("r = " + r.to_string() + ": " + e.what());
        }
    }
    return failures;
}

std::string index_label(const std::string &law, std::size_t i) { return law + "[" + std::to_string(i + 1) + "]"; }

std::string pair_label(const std::string &law, std::size_t i, std::size_t j)
{
    return law + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

void check_same_automorphism(RingKind kind, const std::vector<Twist> &twists, CheckOptions opts)
{
    for (std::size_t i = 1; i < twists.size(); ++i)
        if (!maps_agree(kind, twists[0].aut, twists[i].aut, opts))
            fail(ErrorCode::IncompatibleMaps, "mixing needs one shared automorphism; " + twists[0].aut.describe() +
                                                  " differs from " + twists[i].aut.describe());
}

} // namespace

bool is_automorphic(const SkewPoly &s, const RingMap &aut, const RingMap &der, CheckOptions opts)
{
    return automorphic_failures(s, aut, der, opts).empty();
}

Certificate certify_tuple(const RingPtr &ambient, const std::vector<SkewPoly> &elements,
                          const std::vector<Twist> &twists, CheckOptions opts)
{
    if (elements.size() != twists.size())
        fail(ErrorCode::ArityMismatch, "tuple has " + std::to_string(elements.size()) + " elements but " +
                                           std::to_string(twists.size()) + " twists");
    Certificate cert;
    if (!ambient->certificate().ok())
        cert.laws.push_back({"ambient-ring", ambient->certificate().samples, ambient->certificate().failures});
    for (const auto &s : elements)
        if (s.ring() != ambient) fail(ErrorCode::RingMismatch, "tuple element outside the ambient ring");
    if (!cert.ok()) return cert;
    for (std::size_t i = 0; i < elements.size(); ++i)
        cert.laws.push_back({index_label("automorphic", i), opts.samples,
                             automorphic_failures(elements[i], twists[i].aut, twists[i].der, opts)});
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            LawReport law{pair_label("commute", i, j), 1, {}};
            if (!(elements[i] * elements[j]).same_terms(elements[j] * elements[i]))
                law.failures.push_back("s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) + " != s" +
                                       std::to_string(j + 1) + " s" + std::to_string(i + 1));
            cert.laws.push_back(std::move(law));
        }
    }
    return cert;
}

AutomorphicTuple make_tuple(const RingPtr &ambient, std::vector<SkewPoly> elements, std::vector<Twist> twists,
                            CheckOptions opts)
{
    Certificate cert = certify_tuple(ambient, elements, twists, opts);
    return {ambient, std::move(elements), std::move(twists), std::move(cert)};
}

AutomorphicTuple variables_tuple(const RingPtr &ring)
{
    AutomorphicTuple t;
    t.ambient = ring;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        t.elements.push_back(SkewPoly::variable(ring, i));
        t.twists.push_back({ring->variable(i).aut, ring->variable(i).der});
    }
    if (!ring->certificate().ok())
        t.certificate.laws.push_back({"ambient-ring", ring->certificate().samples, ring->certificate().failures});
    t.certificate.analytic = true;
    return t;
}

SkewPoly evaluate(const SkewPoly &f, const AutomorphicTuple &tuple)
{
    if (!tuple.certificate.ok()) fail(ErrorCode::CertificateFailed, "evaluation tuple is not certified");
    const OreRing &source = *f.ring();
    if (source.size() != tuple.elements.size())
        fail(ErrorCode::ArityMismatch, "polynomial has " + std::to_string(source.size()) + " variables, tuple has " +
                                           std::to_string(tuple.elements.size()));
    if (source.kind() != tuple.ambient->kind())
        fail(ErrorCode::RingMismatch, "coefficient rings differ");
    const CheckOptions opts = tuple.ambient->check_options();
    for (std::size_t i = 0; i < source.size(); ++i) {
        const Variable &v = source.variable(i);
        if (!maps_agree(source.kind(), v.aut, tuple.twists[i].aut, opts) ||
            !maps_agree(source.kind(), v.der, tuple.twists[i].der, opts))
            fail(ErrorCode::TwistMismatch, "variable " + v.name + " is twisted by (" + v.aut.describe() + ", " +
                                               v.der.describe() + ") but the tuple claims (" +
                                               tuple.twists[i].aut.describe() + ", " +
                                               tuple.twists[i].der.describe() + ")");
    }

    const RingPtr &target = tuple.ambient;
    std::vector<std::vector<SkewPoly>> powers(source.size());
    auto power_of = [&](std::size_t v, std::uint32_t k) -> const SkewPoly & {
        auto &cache = powers[v];
        if (cache.empty()) cache.push_back(SkewPoly::constant(target, Scalar::one(target->kind())));
        while (cache.size() <= k) cache.push_back(cache.back() * tuple.elements[v]);
        return cache[k];
    };

    SkewPoly out(target);
    for (const auto &[e, c] : f.terms()) {
        SkewPoly term = SkewPoly::constant(target, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * power_of(v, e[v]);
        out += term;
    }
    return out;
}

MixedDerivations mix_derivations(RingKind kind, const RingMap &aut, const std::vector<RingMap> &ders,
                                 const std::vector<Scalar> &coeffs, CheckOptions opts)
{
    MixedDerivations out;
    if (ders.empty()) {
        if (!coeffs.empty()) fail(ErrorCode::ArityMismatch, "no derivations to mix");
        return out;
    }
    const std::size_t n = ders.size();
    if (coeffs.size() != n - 1)
        fail(ErrorCode::ArityMismatch, "expected " + std::to_string(n - 1) + " mixing coefficients, got " +
                                           std::to_string(coeffs.size()));
    std::vector<RingMap> maps{aut};
    maps.insert(maps.end(), ders.begin(), ders.end());
    for (const auto &a : coeffs) {
        if (a.kind() != kind) fail(ErrorCode::VariantMismatch, "mixing coefficient from another ring");
        if (!in_central_fixed(a, maps)) fail(ErrorCode::NotInF, a.to_string() + " is not in the central fixed field");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!maps_agree(kind, ders[i].paired_automorphism(), aut, opts))
            fail(ErrorCode::IncompatibleMaps, ders[i].describe() + " is not twisted by " + aut.describe());
    }
    const RingMap twist = aut.canonical();
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.ders.push_back(
            RingMap::lin_comb(twist, {{Scalar::one(kind), ders[i]}, {coeffs[i], ders[n - 1]}}).canonical());
    out.ders.push_back(ders[n - 1]);

    for (std::size_t i = 0; i < n; ++i) {
        LawReport leibniz{index_label("leibniz", i), opts.samples, {}};
        if (!check_derivation(kind, twist, out.ders[i], opts))
            leibniz.failures.push_back(out.ders[i].describe() + " fails the twisted Leibniz rule");
        out.certificate.laws.push_back(std::move(leibniz));
        const std::pair<RingMap, RingMap> with_aut[] = {{twist, out.ders[i]}};
        LawReport aut_law{index_label("aut-commute", i), opts.samples, {}};
        if (!check_commutation(kind, with_aut, opts))
            aut_law.failures.push_back(out.ders[i].describe() + " does not commute with " + twist.describe());
        out.certificate.laws.push_back(std::move(aut_law));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::pair<RingMap, RingMap> pair[] = {{out.ders[i], out.ders[j]}};
            LawReport law{pair_label("der-commute", i, j), opts.samples, {}};
            if (!check_commutation(kind, pair, opts))
                law.failures.push_back(out.ders[i].describe() + " and " + out.ders[j].describe() + " do not commute");
            out.certificate.laws.push_back(std::move(law));
        }
    }
    return out;
}

AutomorphicTuple mix_elements(const AutomorphicTuple &tuple, const std::vector<Scalar> &coeffs, CheckOptions opts)
{
    if (!tuple.certificate.ok()) fail(ErrorCode::CertificateFailed, "input tuple is not certified");
    const std::size_t n = tuple.elements.size();
    if (n == 0) {
        if (!coeffs.empty()) fail(ErrorCode::ArityMismatch, "no elements to mix");
        return tuple;
    }
    const RingKind kind = tuple.ambient->kind();
    check_same_automorphism(kind, tuple.twists, opts);
    std::vector<RingMap> ders;
    for (const auto &t : tuple.twists) ders.push_back(t.der);
    MixedDerivations mixed = mix_derivations(kind, tuple.twists[0].aut, ders, coeffs, opts);

    std::vector<SkewPoly> elements;
    std::vector<Twist> twists;
    const SkewPoly &last = tuple.elements[n - 1];
    for (std::size_t i = 0; i < n; ++i) {
        elements.push_back(i + 1 < n ? tuple.elements[i] + left_scale(coeffs[i], last) : last);
        twists.push_back({tuple.twists[i].aut, mixed.ders[i]});
    }
    AutomorphicTuple out = make_tuple(tuple.ambient, std::move(elements), std::move(twists), opts);
    out.certificate.laws.insert(out.certificate.laws.begin(), mixed.certificate.laws.begin(),
                                mixed.certificate.laws.end());
    if (!out.certificate.ok()) fail(ErrorCode::CertificateFailed, "mixed tuple fails its certificate");
    return out;
}

} // namespace skewnorm
