#include "skewnorm/scalar.hpp"

#include "skewnorm/error.hpp"

#include <algorithm>
#include <utility>

namespace skewnorm {

const char *ring_kind_name(RingKind kind) noexcept
{
    switch (kind) {
    case RingKind::Q: return "Q";
    case RingKind::Qx: return "Qx";
    case RingKind::HQ: return "HQ";
    }
    return "?";
}

RingKind ring_kind_from_name(const std::string &name)
{
    if (name == "Q") return RingKind::Q;
    if (name == "Qx") return RingKind::Qx;
    if (name == "HQ") return RingKind::HQ;
    fail(ErrorCode::ConfigError, "unknown ring '" + name + "' (expected Q, Qx or HQ)");
}

std::string rational_to_string(const Rational &q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(Rational constant)
{
    if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

UPoly &UPoly::operator+=(const UPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly &a, const UPoly &b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rational &c) const
{
    if (sgn(c) == 0) return {};
    UPoly r = *this;
    for (auto &v : r.coeffs_) v *= c;
    return r;
}

void UPoly::divmod(const UPoly &a, const UPoly &b, UPoly &quot, UPoly &rem)
{
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    rem = a;
    std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    const Rational lead_inv = 1 / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        Rational factor = rem.lead() * lead_inv;
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) rem.coeffs_[k + shift] -= factor * b.coeffs_[k];
        q[shift] = factor;
        rem.trim();
    }
    quot = UPoly(std::move(q));
}

UPoly UPoly::gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::monic() const
{
    if (is_zero()) return {};
    return scaled(1 / lead());
}

UPoly UPoly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UPoly(std::move(d));
}

UPoly UPoly::dilated(const Rational &q) const
{
    UPoly r = *this;
    Rational power(1);
    for (auto &c : r.coeffs_) {
        c *= power;
        power *= q;
    }
    r.trim();
    return r;
}

bool UPoly::is_single_term() const
{
    return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return sgn(c) != 0; }) <= 1;
}

std::string UPoly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational &c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string monomial = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (k == 0)
            out += rational_to_string(mag);
        else if (mag == 1)
            out += monomial;
        else
            out += rational_to_string(mag) + "*" + monomial;
    }
    return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(UPoly num, UPoly den)
{
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UPoly();
        den_ = UPoly(Rational(1));
        return;
    }
    UPoly g = UPoly::gcd(num, den);
    UPoly r;
    UPoly::divmod(num, g, num_, r);
    UPoly::divmod(den, g, den_, r);
    const Rational lc = den_.lead();
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
}

RatFunc operator+(const RatFunc &a, const RatFunc &b)
{
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc operator*(const RatFunc &a, const RatFunc &b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(x)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::dilated(const Rational &q) const { return RatFunc(num_.dilated(q), den_.dilated(q)); }

std::string RatFunc::to_string() const
{
    if (den_.degree() == 0) return num_.to_string();
    std::string n = num_.to_string();
    if (!num_.is_single_term()) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (!den_.is_single_term()) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Quaternion

Quaternion operator+(const Quaternion &x, const Quaternion &y)
{
    return {x.w + y.w, x.a + y.a, x.b + y.b, x.c + y.c};
}

Quaternion operator-(const Quaternion &x, const Quaternion &y)
{
    return {x.w - y.w, x.a - y.a, x.b - y.b, x.c - y.c};
}

Quaternion operator*(const Quaternion &x, const Quaternion &y)
{
    return {x.w * y.w - x.a * y.a - x.b * y.b - x.c * y.c,
            x.w * y.a + x.a * y.w + x.b * y.c - x.c * y.b,
            x.w * y.b - x.a * y.c + x.b * y.w + x.c * y.a,
            x.w * y.c + x.a * y.b - x.b * y.a + x.c * y.w};
}

Quaternion Quaternion::inverse() const
{
    const Rational n = norm();
    if (sgn(n) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero quaternion");
    return {w / n, -a / n, -b / n, -c / n};
}

std::string Quaternion::to_string() const
{
    std::string out;
    auto part = [&](const Rational &v, const char *unit) {
        if (sgn(v) == 0) return;
        const bool negative = sgn(v) < 0;
        const Rational mag = abs(v);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (*unit == '\0')
            out += rational_to_string(mag);
        else if (mag == 1)
            out += unit;
        else
            out += rational_to_string(mag) + "*" + unit;
    };
    part(w, "");
    part(a, "i");
    part(b, "j");
    part(c, "k");
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

[[noreturn]] void mismatch(const Scalar &a, const Scalar &b)
{
    fail(ErrorCode::VariantMismatch, std::string("cannot combine scalars of ") + ring_kind_name(a.kind()) +
                                         " and " + ring_kind_name(b.kind()));
}

template <typename Op>
Scalar combine(const Scalar &a, const Scalar &b, Op op)
{
    if (a.kind() != b.kind()) mismatch(a, b);
    switch (a.kind()) {
    case RingKind::Q: return Scalar(Rational(op(a.rational(), b.rational())));
    case RingKind::Qx: return Scalar(RatFunc(op(a.ratfunc(), b.ratfunc())));
    case RingKind::HQ: return Scalar(Quaternion(op(a.quaternion(), b.quaternion())));
    }
    fail(ErrorCode::UnsupportedRing, "unknown ring");
}

} // namespace

Scalar Scalar::from_rational(RingKind kind, const Rational &raw)
{
    const Rational q = canonical(raw);
    switch (kind) {
    case RingKind::Q: return Scalar(q);
    case RingKind::Qx: return Scalar(RatFunc(q));
    case RingKind::HQ: return Scalar(Quaternion{q, 0, 0, 0});
    }
    fail(ErrorCode::UnsupportedRing, "unknown ring");
}

Scalar Scalar::indeterminate() { return Scalar(RatFunc::x()); }
Scalar Scalar::unit_i() { return Scalar(Quaternion{0, 1, 0, 0}); }
Scalar Scalar::unit_j() { return Scalar(Quaternion{0, 0, 1, 0}); }
Scalar Scalar::unit_k() { return Scalar(Quaternion{0, 0, 0, 1}); }

bool Scalar::is_zero() const
{
    switch (kind()) {
    case RingKind::Q: return sgn(rational()) == 0;
    case RingKind::Qx: return ratfunc().is_zero();
    case RingKind::HQ: return quaternion().is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(kind()); }

bool Scalar::is_central() const { return kind() != RingKind::HQ || quaternion().is_central(); }

bool Scalar::is_rational() const
{
    switch (kind()) {
    case RingKind::Q: return true;
    case RingKind::Qx: return ratfunc().is_constant();
    case RingKind::HQ: return quaternion().is_central();
    }
    return false;
}

Rational Scalar::as_rational() const
{
    if (!is_rational()) fail(ErrorCode::PreconditionFailed, "scalar " + to_string() + " is not rational");
    switch (kind()) {
    case RingKind::Q: return rational();
    case RingKind::Qx: return ratfunc().num().coeff(0);
    case RingKind::HQ: return quaternion().w;
    }
    return Rational(0);
}

Scalar Scalar::operator-() const
{
    switch (kind()) {
    case RingKind::Q: return Scalar(Rational(-rational()));
    case RingKind::Qx: return Scalar(-ratfunc());
    case RingKind::HQ: return Scalar(-quaternion());
    }
    return *this;
}

Scalar operator+(const Scalar &a, const Scalar &b)
{
    return combine(a, b, [](const auto &x, const auto &y) { return x + y; });
}

Scalar operator-(const Scalar &a, const Scalar &b)
{
    return combine(a, b, [](const auto &x, const auto &y) { return x - y; });
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
    return combine(a, b, [](const auto &x, const auto &y) { return x * y; });
}

Scalar Scalar::inverse() const
{
    switch (kind()) {
    case RingKind::Q:
        if (sgn(rational()) == 0) fail(ErrorCode::DivisionByZero, "inverse of 0");
        return Scalar(Rational(1 / rational()));
    case RingKind::Qx: return Scalar(ratfunc().inverse());
    case RingKind::HQ: return Scalar(quaternion().inverse());
    }
    return *this;
}

Scalar Scalar::pow(unsigned k) const
{
    Scalar result = one(kind());
    Scalar base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

bool operator==(const Scalar &a, const Scalar &b)
{
    if (a.kind() != b.kind()) mismatch(a, b);
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const
{
    switch (kind()) {
    case RingKind::Q: return rational_to_string(rational());
    case RingKind::Qx: return ratfunc().to_string();
    case RingKind::HQ: return quaternion().to_string();
    }
    return "?";
}

namespace {

Rational small_rational(std::mt19937_64 &rng, int max_num, int max_den)
{
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    const int n = num(rng);
    const int d = den(rng);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace

Scalar random_scalar(RingKind kind, std::mt19937_64 &rng)
{
    switch (kind) {
    case RingKind::Q: return Scalar(small_rational(rng, 6, 5));
    case RingKind::Qx: {
        std::uniform_int_distribution<int> shape(0, 3);
        const int num_degree = shape(rng) % 3;
        std::vector<Rational> num;
        for (int k = 0; k <= num_degree; ++k) num.push_back(small_rational(rng, 4, 3));
        UPoly den(Rational(1));
        if (shape(rng) == 0) den = UPoly(std::vector<Rational>{small_rational(rng, 3, 2), Rational(1)});
        return Scalar(RatFunc(UPoly(std::move(num)), den));
    }
    case RingKind::HQ:
        return Scalar(Quaternion{small_rational(rng, 3, 3), small_rational(rng, 3, 3), small_rational(rng, 3, 3),
                                 small_rational(rng, 3, 3)});
    }
    return Scalar();
}

bool needs_parentheses(const std::string &text)
{
    int depth = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char ch = text[k];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0 && k > 0 && (ch == '+' || ch == '-') && text[k - 1] == ' ') return true;
    }
    return false;
}

} // namespace skewnorm
