#include "skewnorm/normalize.hpp"

#include "skewnorm/cns.hpp"
#include "skewnorm/error.hpp"
#include "skewnorm/text.hpp"

namespace skewnorm {

namespace {

// Indices other than `pivot`, then `pivot`.
std::vector<std::size_t> pivot_last_order(std::size_t n, std::size_t pivot)
{
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
        if (i != pivot) order.push_back(i);
    order.push_back(pivot);
    return order;
}

// mix_elements with an arbitrary pivot; shifts are listed in index order
// skipping the pivot.
AutomorphicTuple mix_about(const AutomorphicTuple &t, std::size_t pivot, const std::vector<Scalar> &shifts)
{
    const std::size_t n = t.elements.size();
    if (pivot + 1 == n) return mix_elements(t, shifts, t.ambient->check_options());
    const auto order = pivot_last_order(n, pivot);
    AutomorphicTuple permuted{t.ambient, {}, {}, t.certificate};
    for (auto i : order) {
        permuted.elements.push_back(t.elements[i]);
        permuted.twists.push_back(t.twists[i]);
    }
    AutomorphicTuple mixed = mix_elements(permuted, shifts, t.ambient->check_options());
    AutomorphicTuple out{t.ambient, t.elements, t.twists, mixed.certificate};
    for (std::size_t k = 0; k < n; ++k) {
        out.elements[order[k]] = mixed.elements[k];
        out.twists[order[k]] = mixed.twists[k];
    }
    return out;
}

// Ring with derivations d_i - u_i d_pivot for i != pivot.
RingPtr mixed_ring(const RingPtr &ring, std::size_t pivot, const std::vector<Scalar> &shifts)
{
    const std::size_t n = ring->size();
    const auto order = pivot_last_order(n, pivot);
    std::vector<RingMap> ders;
    for (auto i : order) ders.push_back(ring->variable(i).der);
    std::vector<Scalar> neg;
    for (const auto &u : shifts) neg.push_back(-u);
    MixedDerivations mixed =
        mix_derivations(ring->kind(), ring->variable(pivot).aut, ders, neg, ring->check_options());
    if (!mixed.certificate.ok()) fail(ErrorCode::CertificateFailed, "mixed derivations fail their certificate");
    std::vector<Variable> vars = ring->variables();
    for (std::size_t k = 0; k < n; ++k) vars[order[k]].der = mixed.ders[k];
    RingPtr out = ring->with_variables(std::move(vars));
    if (!out->certificate().ok())
        fail(ErrorCode::CertificateFailed, "mixed ring fails compatibility: " + out->certificate().failures.front());
    return out;
}

// h with its first variable replaced by the central scalar c.
SkewPoly specialize_first(const SkewPoly &h, const Scalar &c)
{
    const OreRing &ring = *h.ring();
    std::vector<std::string> names;
    for (std::size_t v = 1; v < ring.size(); ++v) names.push_back(ring.variable(v).name);
    const RingPtr rest = plain_ring(ring.kind(), names);
    SkewPoly out(rest);
    for (const auto &[e, coeff] : h.terms()) {
        const Exponents tail(e.begin() + 1, e.end());
        out += SkewPoly::monomial(rest, tail, coeff * c.pow(e[0]));
    }
    return out;
}

NonvanishingPoint search(const SkewPoly &h, const std::vector<Scalar> &candidates, std::uint64_t &count)
{
    if (h.ring()->size() == 0) {
        if (h.is_zero()) fail(ErrorCode::SearchExhausted, "specialization vanished");
        return {{}, count};
    }
    for (const auto &c : candidates) {
        const SkewPoly q = specialize_first(h, c);
        ++count;
        if (q.is_zero()) continue;
        NonvanishingPoint rest = search(q, candidates, count);
        rest.point.insert(rest.point.begin(), c);
        rest.specializations = count;
        return rest;
    }
    fail(ErrorCode::SearchExhausted, "no candidate keeps " + to_string(h) + " nonzero");
}

Exponents with_power(Exponents e, std::size_t var, std::uint32_t k)
{
    e[var] = k;
    return e;
}

} // namespace

SkewPoly MonicRelation::polynomial() const
{
    const std::size_t n = ring->size();
    SkewPoly out = SkewPoly::monomial(ring, with_power(Exponents(n, 0), var, degree), Scalar::one(ring->kind()));
    for (std::uint32_t k = 1; k <= degree; ++k)
        for (const auto &[e, c] : eps[k - 1].terms()) out += SkewPoly::monomial(ring, with_power(e, var, degree - k), c);
    return out;
}

MonicRelation MonicRelation::from_poly(const SkewPoly &g, std::size_t var)
{
    MonicRelation rel;
    rel.ring = g.ring();
    rel.var = var;
    const auto d = degree_in(g, var).value();
    if (d == 0) fail(ErrorCode::InvariantViolated, "relation does not involve " + g.ring()->variable(var).name);
    rel.degree = static_cast<std::uint32_t>(d);
    rel.eps.assign(rel.degree, SkewPoly(g.ring()));
    for (const auto &[e, c] : g.terms()) {
        if (e[var] == rel.degree) {
            if (total_weight(e) != rel.degree || !c.is_one())
                fail(ErrorCode::InvariantViolated, "relation is not monic in " + g.ring()->variable(var).name);
            continue;
        }
        rel.eps[rel.degree - e[var] - 1] += SkewPoly::monomial(g.ring(), with_power(e, var, 0), c);
    }
    return rel;
}

NonvanishingPoint find_nonvanishing_point(const SkewPoly &h, CentralFixedStream stream, std::uint64_t bound)
{
    if (h.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial vanishes everywhere");
    std::vector<Scalar> candidates;
    if (h.ring()->size() > 0) candidates = stream.take(bound + 1);
    std::uint64_t count = 0;
    NonvanishingPoint p = search(h, candidates, count);
    p.specializations = count;
    return p;
}

MonicizeResult monicize(const SkewPoly &f, std::size_t target)
{
    const RingPtr &ring = f.ring();
    if (target >= ring->size())
        fail(ErrorCode::ArityMismatch, "variable index " + std::to_string(target + 1) + " out of range");
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot monicize the zero polynomial");
    const std::uint64_t N = total_degree(f).value();
    if (N == 0) fail(ErrorCode::PreconditionFailed, "a nonzero constant has no monic form");
    require_certified(*ring);
    if (!ring->shares_automorphism())
        fail(ErrorCode::IncompatibleMaps, "monicization needs one automorphism shared by every variable");

    MonicizeResult out{Substitution{target, {}, Scalar::one(ring->kind()), leading_form(f, target), 0}, ring,
                       SkewPoly(ring)};
    Substitution &sub = out.substitution;
    NonvanishingPoint p = find_nonvanishing_point(sub.leading_form, CentralFixedStream(ring->kind(), ring->all_maps()), N);
    sub.shifts = std::move(p.point);
    sub.specializations = p.specializations;
    sub.scale = formal_substitute(sub.leading_form, sub.shifts).inverse();

    out.ring = ring->size() > 1 ? mixed_ring(ring, target, sub.shifts) : ring;
    const AutomorphicTuple tuple =
        ring->size() > 1 ? mix_about(variables_tuple(out.ring), target, sub.shifts) : variables_tuple(out.ring);
    out.g = left_scale(sub.scale, evaluate(f, tuple));

    Exponents top(ring->size(), 0);
    top[target] = static_cast<std::uint32_t>(N);
    if (degree_in(out.g, target) != Degree::of(N) || !out.g.coeff(top).is_one())
        fail(ErrorCode::InvariantViolated, "monicized polynomial " + to_string(out.g) + " is not monic");
    return out;
}

bool replay_step(const NormalizationStep &step)
{
    std::vector<Scalar> neg;
    for (const auto &s : step.substitution.shifts) neg.push_back(-s);
    const AutomorphicTuple tuple =
        mix_elements(variables_tuple(step.before), neg, step.before->check_options());
    const SkewPoly lhs = evaluate(step.relation.polynomial(), tuple);
    return lhs.same_terms(left_scale(step.substitution.scale, step.input));
}

NormalizationStep normalize_step(const SkewPoly &f)
{
    const RingPtr &ring = f.ring();
    if (ring->size() == 0) fail(ErrorCode::ArityMismatch, "no variable left to eliminate");
    const std::size_t last = ring->size() - 1;
    MonicizeResult m = monicize(f, last);
    NormalizationStep step{ring, m.ring, f, std::move(m.substitution), MonicRelation::from_poly(m.g, last), false};
    step.replay_ok = replay_step(step);
    if (!step.replay_ok) fail(ErrorCode::InvariantViolated, "replay of " + to_string(f) + " does not give a*f");
    return step;
}

NormalizationResult normalize(const RingPtr &ring, const std::vector<SkewPoly> &relations)
{
    NormalizationResult result;
    result.ring = ring;
    RingPtr current = ring;
    for (std::size_t r = 0; r < relations.size(); ++r) {
        SkewPoly expr = relations[r];
        if (expr.ring() != ring) fail(ErrorCode::RingMismatch, "relation " + std::to_string(r + 1) + " is not in the input ring");
        for (const auto &step : result.steps) {
            const AutomorphicTuple back =
                mix_elements(variables_tuple(step.after), step.substitution.shifts, step.after->check_options());
            expr = reduce_by_monic(evaluate(expr, back), step.relation).remainder;
            if (degree_in(expr, step.relation.var) > Degree::of(0))
                fail(ErrorCode::RelationNotInSubring,
                     "relation " + std::to_string(r + 1) + " still involves " +
                         step.after->variable(step.relation.var).name + " after reduction: " + to_string(expr));
            // The ring the next step (or the next relation) starts from.
            const auto idx = static_cast<std::size_t>(&step - result.steps.data());
            const RingPtr &next = idx + 1 < result.steps.size() ? result.steps[idx + 1].before : current;
            expr = restrict_to_prefix(expr, next);
        }
        if (expr.is_zero()) {
            result.events.push_back("RelationBecameZero: relation " + std::to_string(r + 1) +
                                    " vanished after re-expression");
            continue;
        }
        NormalizationStep step = normalize_step(expr);
        current = step.after->prefix(step.relation.var);
        result.steps.push_back(std::move(step));
    }
    result.remaining = current->size();
    return result;
}

bool NormalizationResult::replay() const
{
    for (const auto &s : steps)
        if (!replay_step(s)) return false;
    return true;
}

nlohmann::ordered_json NormalizationResult::to_json() const
{
    nlohmann::ordered_json j;
    j["ring"] = ring->to_json();
    auto arr = nlohmann::ordered_json::array();
    auto bounds = nlohmann::ordered_json::array();
    for (const auto &s : steps) {
        nlohmann::ordered_json e;
        const std::string var = s.after->variable(s.relation.var).name;
        e["eliminated"] = var;
        e["input"] = to_string(s.input);
        auto shifts = nlohmann::ordered_json::array();
        for (const auto &u : s.substitution.shifts) shifts.push_back(u.to_string());
        e["shifts"] = std::move(shifts);
        e["scale"] = s.substitution.scale.to_string();
        e["leading_form"] = to_string(s.substitution.leading_form);
        e["specializations"] = s.substitution.specializations;
        auto tower = nlohmann::ordered_json::array();
        for (const auto &v : s.after->variables()) tower.push_back(v.der.describe());
        e["mixed_derivations"] = std::move(tower);
        nlohmann::ordered_json rel;
        rel["variable"] = var;
        rel["degree"] = s.relation.degree;
        auto eps = nlohmann::ordered_json::array();
        for (const auto &c : s.relation.eps) eps.push_back(to_string(c));
        rel["eps"] = std::move(eps);
        rel["polynomial"] = to_string(s.relation.polynomial());
        e["relation"] = std::move(rel);
        e["replay"] = s.replay_ok;
        e["before"] = s.before->to_json();
        e["after"] = s.after->to_json();
        arr.push_back(std::move(e));
        nlohmann::ordered_json b;
        b["variable"] = var;
        b["bound"] = s.relation.degree;
        bounds.push_back(std::move(b));
    }
    j["steps"] = std::move(arr);
    j["remaining_variables"] = remaining;
    j["generator_bounds"] = std::move(bounds);
    j["events"] = events;
    return j;
}

bool replay_report(const nlohmann::json &report)
{
    if (!report.contains("steps")) fail(ErrorCode::ConfigError, "report has no 'steps'");
    for (const auto &s : report.at("steps")) {
        const RingPtr before = ring_from_json(s.at("before"));
        const RingPtr after = ring_from_json(s.at("after"));
        const SkewPoly f = parse_expr(s.at("input").get<std::string>(), before);
        const SkewPoly g = parse_expr(s.at("relation").at("polynomial").get<std::string>(), after);
        std::vector<Scalar> neg;
        for (const auto &u : s.at("shifts")) neg.push_back(-parse_scalar(u.get<std::string>(), before->kind()));
        const Scalar a = parse_scalar(s.at("scale").get<std::string>(), before->kind());
        const AutomorphicTuple tuple = mix_elements(variables_tuple(before), neg, before->check_options());
        if (!evaluate(g, tuple).same_terms(left_scale(a, f))) return false;
    }
    return true;
}

Division reduce_by_monic(const SkewPoly &e, const MonicRelation &rel)
{
    if (e.ring() != rel.ring) fail(ErrorCode::RingMismatch, "element and relation live in different rings");
    const SkewPoly p = rel.polynomial();
    Division out{SkewPoly(e.ring()), e};
    while (true) {
        const Degree d = degree_in(out.remainder, rel.var);
        if (d < Degree::of(rel.degree)) break;
        const auto top = static_cast<std::uint32_t>(d.value());
        for (const auto &[exp, c] : out.remainder.terms()) {
            if (exp[rel.var] != top) continue;
            const SkewPoly q = SkewPoly::monomial(e.ring(), with_power(exp, rel.var, top - rel.degree), c);
            out.quotient += q;
            out.remainder -= q * p;
            break;
        }
    }
    return out;
}

} // namespace skewnorm
