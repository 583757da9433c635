#include "skewnorm/coeff_rings.hpp"

#include "skewnorm/error.hpp"

namespace skewnorm {

namespace {

// Runs `law` on `samples` seeded pairs; a map that throws on the active ring
// fails the law.
template <typename Law>
bool holds_on_samples(RingKind kind, CheckOptions opts, Law law)
{
    std::mt19937_64 rng(opts.seed);
    try {
        for (int s = 0; s < opts.samples; ++s) {
            const Scalar a = random_scalar(kind, rng);
            const Scalar b = random_scalar(kind, rng);
            if (!law(a, b)) return false;
        }
    } catch (const Error &) {
        return false;
    }
    return true;
}

} // namespace

bool check_derivation(RingKind kind, const MapFn &aut, const MapFn &der, CheckOptions opts)
{
    return holds_on_samples(kind, opts, [&](const Scalar &a, const Scalar &b) {
        return der(a * b) == aut(a) * der(b) + der(a) * b && der(a + b) == der(a) + der(b);
    });
}

bool check_derivation(RingKind kind, const RingMap &aut, const RingMap &der, CheckOptions opts)
{
    if (!aut.is_automorphism() || !der.is_derivation()) return false;
    if (certify_derivation(aut, der) == false) return false;
    return check_derivation(kind, MapFn(aut), MapFn(der), opts);
}

bool check_automorphism(RingKind kind, const RingMap &aut, CheckOptions opts)
{
    if (!aut.is_automorphism()) return false;
    const RingMap inv = aut.inverse();
    try {
        if (!aut.apply(Scalar::one(kind)).is_one()) return false;
    } catch (const Error &) {
        return false;
    }
    return holds_on_samples(kind, opts, [&](const Scalar &a, const Scalar &b) {
        return aut(a * b) == aut(a) * aut(b) && aut(a + b) == aut(a) + aut(b) && inv(aut(a)) == a;
    });
}

bool check_commutation(RingKind kind, std::span<const std::pair<MapFn, MapFn>> pairs, CheckOptions opts)
{
    for (const auto &[f, g] : pairs) {
        const bool ok = holds_on_samples(kind, opts, [&](const Scalar &a, const Scalar &b) {
            return f(g(a)) == g(f(a)) && f(g(b)) == g(f(b));
        });
        if (!ok) return false;
    }
    return true;
}

bool check_commutation(RingKind kind, std::span<const std::pair<RingMap, RingMap>> pairs, CheckOptions opts)
{
    std::vector<std::pair<MapFn, MapFn>> fns;
    for (const auto &[f, g] : pairs) {
        if (certify_commutation(f, g) == false) return false;
        fns.emplace_back(MapFn(f), MapFn(g));
    }
    return check_commutation(kind, std::span<const std::pair<MapFn, MapFn>>(fns), opts);
}

std::optional<bool> certify_derivation(const RingMap &aut_in, const RingMap &der_in)
{
    using K = RingMap::Kind;
    if (!aut_in.is_automorphism() || !der_in.is_derivation()) return false;
    const RingMap aut = aut_in.canonical();
    const RingMap der = der_in.canonical();
    switch (der.kind()) {
    case K::ZeroDer: return true;
    case K::Ddx:
        if (aut.kind() == K::Identity) return true;
        if (aut.kind() == K::QShift) return false;
        return std::nullopt;
    case K::QDiff:
        if (aut == RingMap::qshift(der.q())) return true;
        if (aut.kind() == K::Identity || aut.kind() == K::QShift) return false;
        return std::nullopt;
    case K::InnerDer:
        if (der.paired_automorphism() == aut) return true;
        return std::nullopt;
    case K::LinComb: {
        for (const auto &t : der.terms()) {
            if (certify_derivation(aut, *t.der) != true) return std::nullopt;
        }
        return true;
    }
    default: return std::nullopt;
    }
}

std::optional<bool> certify_commutation(const RingMap &f_in, const RingMap &g_in)
{
    using K = RingMap::Kind;
    const RingMap f = f_in.canonical();
    const RingMap g = g_in.canonical();
    if (f.kind() == K::Identity || g.kind() == K::Identity) return true;
    if (f.kind() == K::ZeroDer || g.kind() == K::ZeroDer) return true;
    if (f == g) return true;
    if (f.kind() == K::QShift && g.kind() == K::QShift) return true;
    if ((f.kind() == K::Ddx && g.kind() == K::QShift) || (f.kind() == K::QShift && g.kind() == K::Ddx)) return false;
    if (f.kind() == K::InnerAut && g.kind() == K::InnerAut) {
        const Scalar &a = f.element();
        const Scalar &b = g.element();
        if (a.kind() != b.kind()) return std::nullopt;
        return (a * b * a.inverse() * b.inverse()).is_central();
    }
    if (f.kind() == K::LinComb || g.kind() == K::LinComb) {
        const RingMap &comb = f.kind() == K::LinComb ? f : g;
        const RingMap &other = f.kind() == K::LinComb ? g : f;
        for (const auto &t : comb.terms()) {
            if (certify_commutation(*t.der, other) != true) return std::nullopt;
        }
        return true;
    }
    return std::nullopt;
}

bool maps_agree(RingKind kind, const RingMap &f, const RingMap &g, CheckOptions opts)
{
    if (f.canonical() == g.canonical()) return true;
    return holds_on_samples(kind, opts, [&](const Scalar &a, const Scalar &b) { return f(a) == g(a) && f(b) == g(b); });
}

bool are_conjugate(const Scalar &a, const Scalar &b)
{
    if (a.kind() != b.kind())
        fail(ErrorCode::VariantMismatch, "conjugacy test across different rings");
    if (a.kind() != RingKind::HQ) return a == b;
    const Quaternion &x = a.quaternion();
    const Quaternion &y = b.quaternion();
    if (x.is_central() || y.is_central()) return x == y;
    return x.trace() == y.trace() && x.norm() == y.norm();
}

bool in_central_fixed(const Scalar &e, std::span<const RingMap> maps)
{
    if (!e.is_central()) return false;
    try {
        for (const auto &m : maps) {
            const Scalar image = m.apply(e);
            if (m.is_automorphism() ? image != e : !image.is_zero()) return false;
        }
    } catch (const Error &) {
        return false;
    }
    return true;
}

CentralFixedStream::CentralFixedStream(RingKind kind, std::vector<RingMap> maps) : kind_(kind), maps_(std::move(maps))
{
}

Rational CentralFixedStream::candidate(std::size_t index) const
{
    if (index == 0) return Rational(0);
    const long magnitude = static_cast<long>((index + 1) / 2);
    return Rational(index % 2 == 1 ? magnitude : -magnitude);
}

Scalar CentralFixedStream::next()
{
    for (std::size_t rejected = 0; rejected < kMaxRejections; ++rejected) {
        const Scalar e = Scalar::from_rational(kind_, candidate(index_++));
        if (in_central_fixed(e, maps_)) return e;
    }
    fail(ErrorCode::ExhaustedCandidates,
         "no element of the prime subfield is central, fixed and killed by the given maps");
}

std::vector<Scalar> CentralFixedStream::take(std::size_t count)
{
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(next());
    return out;
}

} // namespace skewnorm
