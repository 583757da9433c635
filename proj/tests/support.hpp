#pragma once

// Shared fixtures for the unit and acceptance tests: ring builders, random
// generators and oracles that do not go through the library's mul.

#include "skewnorm/coeff_rings.hpp"
#include "skewnorm/ore_ring.hpp"
#include "skewnorm/skew_poly.hpp"
#include "skewnorm/text.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace skewnorm;

inline Scalar S(const std::string &text, RingKind kind) { return parse_scalar(text, kind); }
inline Scalar Q(const std::string &text) { return parse_scalar(text, RingKind::Q); }
inline Scalar X(const std::string &text) { return parse_scalar(text, RingKind::Qx); }
inline Scalar H(const std::string &text) { return parse_scalar(text, RingKind::HQ); }

inline std::string var_name(std::size_t i) { return "t" + std::to_string(i + 1); }

// n copies of (aut, der) named t1..tn (or t when n == 1 and `single` is set).
inline RingPtr uniform_ring(RingKind kind, std::size_t n, const RingMap &aut, const RingMap &der,
                            bool single_name = false)
{
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back({single_name && n == 1 ? std::string("t") : var_name(i), aut, der});
    return OreRing::create(kind, std::move(vars));
}

inline RingPtr weyl(std::size_t n = 1)
{
    return uniform_ring(RingKind::Qx, n, RingMap::identity(), RingMap::ddx(), true);
}

inline RingPtr trivial(RingKind kind, std::size_t n)
{
    return uniform_ring(kind, n, RingMap::identity(), RingMap::zero_der(RingMap::identity()), true);
}

inline SkewPoly P(const std::string &src, const RingPtr &ring) { return parse_expr(src, ring); }

// Certified ring of the given kind and size with seeded random twists.
inline RingPtr random_ring(RingKind kind, std::size_t n, std::mt19937_64 &rng)
{
    std::vector<Variable> vars;
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> small(-3, 3);
    auto nonzero = [&] {
        int v = 0;
        while (v == 0) v = small(rng);
        return v;
    };
    const RingMap id = RingMap::identity();
    switch (kind) {
    case RingKind::Q:
        for (std::size_t i = 0; i < n; ++i) vars.push_back({var_name(i), id, RingMap::zero_der(id)});
        break;
    case RingKind::Qx: {
        const int mode = n == 1 ? pick(rng) : pick(rng) % 2;
        if (mode == 2) {
            const int q = nonzero();
            const Rational qq(q == 1 ? 2 : q);
            vars.push_back({var_name(0), RingMap::qshift(qq), RingMap::qdiff(qq)});
        } else if (mode == 1) {
            const RingMap sh = RingMap::qshift(Rational(nonzero() == 1 ? 3 : 2, 1));
            for (std::size_t i = 0; i < n; ++i) vars.push_back({var_name(i), sh, RingMap::zero_der(sh)});
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const int which = pick(rng);
                RingMap der = RingMap::ddx();
                if (which == 1)
                    der = RingMap::lin_comb(id, {{Scalar::from_int(RingKind::Qx, nonzero()), RingMap::ddx()}});
                else if (which == 2)
                    der = RingMap::zero_der(id);
                vars.push_back({var_name(i), id, der});
            }
        }
        break;
    }
    case RingKind::HQ: {
        if (pick(rng) < 2) {
            const RingMap w = RingMap::inner_aut(Scalar::unit_i());
            for (std::size_t i = 0; i < n; ++i) {
                const Scalar e = Scalar::from_int(RingKind::HQ, small(rng)) +
                                 Scalar::from_int(RingKind::HQ, small(rng)) * Scalar::unit_i();
                vars.push_back({var_name(i), w, RingMap::inner_der(e, w)});
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const RingMap w = RingMap::inner_aut(i % 2 == 0 ? Scalar::unit_i() : Scalar::unit_j());
                vars.push_back({var_name(i), w, RingMap::zero_der(w)});
            }
        }
        break;
    }
    }
    return OreRing::create(kind, std::move(vars));
}

// random_ring restricted to rings whose variables share one automorphism, as
// mixing and monicization require.
inline RingPtr random_shared_ring(RingKind kind, std::size_t n, std::mt19937_64 &rng)
{
    while (true) {
        RingPtr ring = random_ring(kind, n, rng);
        bool shared = true;
        for (const auto &v : ring->variables()) shared = shared && maps_agree(kind, v.aut, ring->variable(0).aut);
        if (shared) return ring;
    }
}

inline Scalar nonzero_scalar(RingKind kind, std::mt19937_64 &rng)
{
    Scalar s = random_scalar(kind, rng);
    while (s.is_zero()) s = random_scalar(kind, rng);
    return s;
}

inline Exponents random_exponents(std::size_t n, unsigned max_degree, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    unsigned budget = deg(rng);
    Exponents e(n, 0);
    std::uniform_int_distribution<std::size_t> var(0, n == 0 ? 0 : n - 1);
    for (unsigned k = 0; k < budget && n > 0; ++k) ++e[var(rng)];
    return e;
}

inline SkewPoly random_poly(const RingPtr &ring, std::mt19937_64 &rng, unsigned max_degree = 3,
                            unsigned max_terms = 4)
{
    std::uniform_int_distribution<unsigned> terms(1, max_terms);
    SkewPoly f(ring);
    const unsigned count = terms(rng);
    for (unsigned k = 0; k < count; ++k)
        f += SkewPoly::monomial(ring, random_exponents(ring->size(), max_degree, rng),
                                nonzero_scalar(ring->kind(), rng));
    return f;
}

// ---------------------------------------------------------------------------
// Oracles.

// Coefficients of t^k r for a single variable with twist (w, d), found by
// summing every word in {w, d}^k applied to r: a word with j letters w
// contributes to t^j.
inline std::vector<Scalar> word_oracle(const RingMap &w, const RingMap &d, unsigned k, const Scalar &r)
{
    std::vector<Scalar> out(k + 1, Scalar::zero(r.kind()));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Scalar v = r;
        unsigned ws = 0;
        for (unsigned bit = 0; bit < k; ++bit) {
            if (mask >> bit & 1) {
                v = w.apply(v);
                ++ws;
            } else {
                v = d.apply(v);
            }
        }
        out[ws] += v;
    }
    return out;
}

// t1^i1 ... tn^in r via the word oracle, rightmost variable first.
inline SkewPoly monomial_oracle(const RingPtr &ring, const Exponents &e, const Scalar &r)
{
    const std::size_t n = ring->size();
    std::map<Exponents, Scalar> acc{{Exponents(n, 0), r}};
    for (std::size_t v = n; v-- > 0;) {
        std::map<Exponents, Scalar> next;
        for (const auto &[k, c] : acc) {
            const auto coeffs = word_oracle(ring->variable(v).aut, ring->variable(v).der, e[v], c);
            for (unsigned j = 0; j < coeffs.size(); ++j) {
                if (coeffs[j].is_zero()) continue;
                Exponents kk = k;
                kk[v] = j;
                auto it = next.find(kk);
                if (it == next.end())
                    next.emplace(kk, coeffs[j]);
                else
                    it->second += coeffs[j];
            }
        }
        acc = std::move(next);
    }
    SkewPoly out(ring);
    for (const auto &[k, c] : acc) out += SkewPoly::monomial(ring, k, c);
    return out;
}

// (r t)^m for a single-variable ring, by repeated left multiplication with
// r t on a coefficient vector: (r t) sum c_k t^k = sum r w(c_k) t^(k+1) + r d(c_k) t^k.
inline std::vector<Scalar> scalar_power_oracle(const RingMap &w, const RingMap &d, const Scalar &r, unsigned m)
{
    std::vector<Scalar> v{Scalar::zero(r.kind()), r};
    for (unsigned step = 1; step < m; ++step) {
        std::vector<Scalar> next(v.size() + 1, Scalar::zero(r.kind()));
        for (std::size_t k = 0; k < v.size(); ++k) {
            next[k + 1] += r * w.apply(v[k]);
            next[k] += r * d.apply(v[k]);
        }
        v = std::move(next);
    }
    return v;
}

} // namespace testsupport
