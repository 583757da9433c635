#include "skewnorm/skew_poly.hpp"

#include "skewnorm/error.hpp"

#include <numeric>

namespace skewnorm {

std::uint64_t total_weight(const Exponents &e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

bool GradedLexGreater::operator()(const Exponents &a, const Exponents &b) const
{
    const auto wa = total_weight(a);
    const auto wb = total_weight(b);
    if (wa != wb) return wa > wb;
    return a > b;
}

std::uint64_t Degree::value() const
{
    if (!value_) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial is minus infinity");
    return *value_;
}

std::strong_ordering operator<=>(const Degree &a, const Degree &b)
{
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
}

Degree operator+(const Degree &a, const Degree &b)
{
    if (!a.value_ || !b.value_) return Degree();
    return Degree(*a.value_ + *b.value_);
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

// ---------------------------------------------------------------------------

namespace {

void accumulate(SkewPoly::TermMap &terms, const Exponents &e, const Scalar &c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void require_same_ring(const SkewPoly &f, const SkewPoly &g)
{
    if (f.ring() != g.ring()) fail(ErrorCode::RingMismatch, "operands live in different rings");
}

void require_kind(const OreRing &ring, const Scalar &r)
{
    if (r.kind() != ring.kind())
        fail(ErrorCode::VariantMismatch, std::string("scalar from ") + ring_kind_name(r.kind()) + " used in a " +
                                             ring_kind_name(ring.kind()) + " ring");
}

// Coefficients c_0..c_k of t^k r = sum_j c_j t^j, via t (a t^j) = w(a) t^(j+1) + d(a) t^j.
std::vector<Scalar> power_coefficients(const Variable &v, unsigned k, const Scalar &r)
{
    std::vector<Scalar> row{r};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Scalar> next(row.size() + 1, Scalar::zero(r.kind()));
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            next[j + 1] += v.aut.apply(row[j]);
            next[j] += v.der.apply(row[j]);
        }
        row = std::move(next);
    }
    return row;
}

SkewPoly::TermMap monomial_times_scalar_terms(const OreRing &ring, const Exponents &e, const Scalar &r)
{
    const std::size_t n = ring.size();
    SkewPoly::TermMap current;
    accumulate(current, Exponents(n, 0), r);
    for (std::size_t idx = n; idx-- > 0;) {
        if (e[idx] == 0) continue;
        SkewPoly::TermMap next;
        for (const auto &[exps, coeff] : current) {
            const auto row = power_coefficients(ring.variable(idx), e[idx], coeff);
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j].is_zero()) continue;
                Exponents shifted = exps;
                shifted[idx] += static_cast<std::uint32_t>(j);
                accumulate(next, shifted, row[j]);
            }
        }
        current = std::move(next);
    }
    return current;
}

} // namespace

void require_certified(const OreRing &ring)
{
    if (!ring.certificate().ok())
        fail(ErrorCode::IncompatibleMaps, "ring twists failed certification: " + ring.certificate().failures.front());
}

SkewPoly::SkewPoly(RingPtr ring) : ring_(std::move(ring)) {}

SkewPoly::SkewPoly(RingPtr ring, TermMap terms) : ring_(std::move(ring))
{
    for (auto &[e, c] : terms) {
        if (e.size() != ring_->size()) fail(ErrorCode::ArityMismatch, "exponent vector has the wrong length");
        require_kind(*ring_, c);
        if (!c.is_zero()) terms_.emplace(e, c);
    }
}

SkewPoly SkewPoly::constant(RingPtr ring, const Scalar &r)
{
    SkewPoly p(std::move(ring));
    require_kind(*p.ring_, r);
    accumulate(p.terms_, Exponents(p.ring_->size(), 0), r);
    return p;
}

SkewPoly SkewPoly::variable(RingPtr ring, std::size_t index)
{
    if (index >= ring->size()) fail(ErrorCode::ArityMismatch, "variable index out of range");
    Exponents e(ring->size(), 0);
    e[index] = 1;
    const Scalar one = Scalar::one(ring->kind());
    return monomial(std::move(ring), e, one);
}

SkewPoly SkewPoly::monomial(RingPtr ring, const Exponents &e, const Scalar &coeff)
{
    SkewPoly p(std::move(ring));
    if (e.size() != p.ring_->size()) fail(ErrorCode::ArityMismatch, "exponent vector has the wrong length");
    require_kind(*p.ring_, coeff);
    accumulate(p.terms_, e, coeff);
    return p;
}

Scalar SkewPoly::coeff(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(ring_->kind()) : it->second;
}

bool SkewPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_weight(terms_.begin()->first) == 0);
}

Scalar SkewPoly::constant_term() const { return coeff(Exponents(ring_->size(), 0)); }

SkewPoly SkewPoly::operator-() const
{
    SkewPoly r(ring_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SkewPoly operator+(const SkewPoly &f, const SkewPoly &g)
{
    require_same_ring(f, g);
    SkewPoly r = f;
    for (const auto &[e, c] : g.terms_) accumulate(r.terms_, e, c);
    return r;
}

SkewPoly operator-(const SkewPoly &f, const SkewPoly &g)
{
    require_same_ring(f, g);
    SkewPoly r = f;
    for (const auto &[e, c] : g.terms_) accumulate(r.terms_, e, -c);
    return r;
}

SkewPoly operator*(const SkewPoly &f, const SkewPoly &g)
{
    require_same_ring(f, g);
    require_certified(*f.ring_);
    SkewPoly r(f.ring_);
    for (const auto &[eg, cg] : g.terms_) {
        for (const auto &[ef, cf] : f.terms_) {
            // b t^I * c t^J = b (t^I c) t^J; variables commute among themselves.
            for (const auto &[ek, ck] : monomial_times_scalar_terms(*f.ring_, ef, cg)) {
                Exponents e = ek;
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += eg[v];
                accumulate(r.terms_, e, cf * ck);
            }
        }
    }
    return r;
}

bool operator==(const SkewPoly &f, const SkewPoly &g) { return f.ring_ == g.ring_ && f.terms_ == g.terms_; }

bool SkewPoly::same_terms(const SkewPoly &g) const
{
    if (ring_->kind() != g.ring_->kind() || ring_->size() != g.ring_->size()) return false;
    return terms_ == g.terms_;
}

SkewPoly add(const SkewPoly &f, const SkewPoly &g) { return f + g; }

SkewPoly left_scale(const Scalar &c, const SkewPoly &f)
{
    require_kind(*f.ring(), c);
    SkewPoly::TermMap terms;
    for (const auto &[e, b] : f.terms()) accumulate(terms, e, c * b);
    return SkewPoly(f.ring(), std::move(terms));
}

SkewPoly mul(const SkewPoly &f, const SkewPoly &g) { return f * g; }

SkewPoly power(const SkewPoly &f, unsigned k)
{
    SkewPoly result = SkewPoly::constant(f.ring(), Scalar::one(f.ring()->kind()));
    for (unsigned s = 0; s < k; ++s) result = result * f;
    return result;
}

SkewPoly var_power_times_scalar(const RingPtr &ring, std::size_t i, unsigned k, const Scalar &r)
{
    if (i >= ring->size()) fail(ErrorCode::ArityMismatch, "variable index out of range");
    require_kind(*ring, r);
    require_certified(*ring);
    const auto row = power_coefficients(ring->variable(i), k, r);
    SkewPoly::TermMap terms;
    for (std::size_t j = 0; j < row.size(); ++j) {
        Exponents e(ring->size(), 0);
        e[i] = static_cast<std::uint32_t>(j);
        accumulate(terms, e, row[j]);
    }
    return SkewPoly(ring, std::move(terms));
}

SkewPoly monomial_times_scalar(const RingPtr &ring, const Exponents &e, const Scalar &r)
{
    if (e.size() != ring->size()) fail(ErrorCode::ArityMismatch, "exponent vector has the wrong length");
    require_kind(*ring, r);
    require_certified(*ring);
    return SkewPoly(ring, monomial_times_scalar_terms(*ring, e, r));
}

SkewPoly scalar_var_power(const RingPtr &ring, const Scalar &r, std::size_t j, unsigned m)
{
    if (m == 0) fail(ErrorCode::PreconditionFailed, "(r t_j)^m needs m >= 1");
    Exponents e(ring->size(), 0);
    if (j >= ring->size()) fail(ErrorCode::ArityMismatch, "variable index out of range");
    e[j] = 1;
    const SkewPoly base = SkewPoly::monomial(ring, e, r);
    SkewPoly result = base;
    for (unsigned s = 1; s < m; ++s) result = result * base;
    return result;
}

Degree total_degree(const SkewPoly &f)
{
    if (f.is_zero()) return Degree::minus_infinity();
    return Degree::of(total_weight(f.terms().begin()->first));
}

Degree degree_in(const SkewPoly &f, std::size_t var)
{
    if (var >= f.ring()->size()) fail(ErrorCode::ArityMismatch, "variable index out of range");
    if (f.is_zero()) return Degree::minus_infinity();
    std::uint64_t best = 0;
    for (const auto &[e, c] : f.terms()) best = std::max<std::uint64_t>(best, e[var]);
    return Degree::of(best);
}

SkewPoly leading_form(const SkewPoly &f, std::size_t excluded)
{
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "leading form of the zero polynomial");
    const auto &ring = *f.ring();
    if (excluded >= ring.size()) fail(ErrorCode::ArityMismatch, "excluded variable out of range");
    std::vector<std::string> names;
    for (std::size_t v = 0; v < ring.size(); ++v)
        if (v != excluded) names.push_back("x" + std::to_string(v + 1));
    RingPtr target = plain_ring(ring.kind(), names);
    const std::uint64_t top = total_degree(f).value();
    SkewPoly::TermMap terms;
    for (const auto &[e, c] : f.terms()) {
        if (total_weight(e) != top) continue;
        Exponents reduced;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (v != excluded) reduced.push_back(e[v]);
        accumulate(terms, reduced, c);
    }
    return SkewPoly(target, std::move(terms));
}

SkewPoly reinterpret(const SkewPoly &f, const RingPtr &ring)
{
    if (ring->kind() != f.ring()->kind() || ring->size() != f.ring()->size())
        fail(ErrorCode::RingMismatch, "cannot move a polynomial between rings of different shape");
    return SkewPoly(ring, f.terms());
}

SkewPoly restrict_to_prefix(const SkewPoly &f, const RingPtr &prefix_ring)
{
    const std::size_t keep = prefix_ring->size();
    if (prefix_ring->kind() != f.ring()->kind() || keep > f.ring()->size())
        fail(ErrorCode::RingMismatch, "target ring is not a prefix of the source ring");
    SkewPoly::TermMap terms;
    for (const auto &[e, c] : f.terms()) {
        for (std::size_t v = keep; v < e.size(); ++v)
            if (e[v] != 0)
                fail(ErrorCode::RelationNotInSubring,
                     "polynomial involves variable " + f.ring()->variable(v).name + " outside the prefix");
        accumulate(terms, Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(keep)), c);
    }
    return SkewPoly(prefix_ring, std::move(terms));
}

SkewPoly extend_to(const SkewPoly &f, const RingPtr &bigger)
{
    if (bigger->kind() != f.ring()->kind() || bigger->size() < f.ring()->size())
        fail(ErrorCode::RingMismatch, "target ring is smaller than the source ring");
    SkewPoly::TermMap terms;
    for (const auto &[e, c] : f.terms()) {
        Exponents wide = e;
        wide.resize(bigger->size(), 0);
        accumulate(terms, wide, c);
    }
    return SkewPoly(bigger, std::move(terms));
}

} // namespace skewnorm
