#include "skewnorm/ring_map.hpp"

#include "skewnorm/error.hpp"
#include "skewnorm/text.hpp"

#include <algorithm>

namespace skewnorm {

namespace {

void require_qx(const Scalar &r, const char *what)
{
    if (r.kind() != RingKind::Qx)
        fail(ErrorCode::UnsupportedRing, std::string(what) + " is only defined on Q(x), not on " +
                                             ring_kind_name(r.kind()));
}

bool same_scalar(const Scalar &a, const Scalar &b) { return a.kind() == b.kind() && a == b; }

} // namespace

RingMap RingMap::identity() { return RingMap(); }

RingMap RingMap::inner_aut(const Scalar &c)
{
    if (c.is_zero()) fail(ErrorCode::DivisionByZero, "inner automorphism by zero");
    RingMap m;
    m.kind_ = Kind::InnerAut;
    m.element_ = c;
    return m;
}

RingMap RingMap::qshift(const Rational &raw)
{
    Rational q = raw;
    q.canonicalize();
    if (sgn(q) == 0) fail(ErrorCode::PreconditionFailed, "q-shift by zero is not an automorphism");
    RingMap m;
    m.kind_ = Kind::QShift;
    m.q_ = q;
    return m;
}

RingMap RingMap::zero_der(const RingMap &aut)
{
    if (!aut.is_automorphism()) fail(ErrorCode::PreconditionFailed, "zero derivation twisted by a derivation");
    RingMap m;
    m.kind_ = Kind::ZeroDer;
    m.aut_ = std::make_shared<const RingMap>(aut);
    return m;
}

RingMap RingMap::ddx()
{
    RingMap m;
    m.kind_ = Kind::Ddx;
    m.aut_ = std::make_shared<const RingMap>(identity());
    return m;
}

RingMap RingMap::inner_der(const Scalar &c, const RingMap &aut)
{
    if (!aut.is_automorphism()) fail(ErrorCode::PreconditionFailed, "inner derivation twisted by a derivation");
    RingMap m;
    m.kind_ = Kind::InnerDer;
    m.element_ = c;
    m.aut_ = std::make_shared<const RingMap>(aut);
    return m;
}

RingMap RingMap::qdiff(const Rational &raw)
{
    Rational q = raw;
    q.canonicalize();
    if (sgn(q) == 0 || q == 1) fail(ErrorCode::PreconditionFailed, "q-difference operator needs q not in {0, 1}");
    RingMap m;
    m.kind_ = Kind::QDiff;
    m.q_ = q;
    m.aut_ = std::make_shared<const RingMap>(qshift(q));
    return m;
}

RingMap RingMap::lin_comb(const RingMap &aut, const std::vector<std::pair<Scalar, RingMap>> &terms)
{
    if (!aut.is_automorphism()) fail(ErrorCode::PreconditionFailed, "linear combination twisted by a derivation");
    const RingMap twist = aut.canonical();
    RingMap m;
    m.kind_ = Kind::LinComb;
    m.aut_ = std::make_shared<const RingMap>(aut);
    for (const auto &[coeff, der] : terms) {
        if (!der.is_derivation())
            fail(ErrorCode::PreconditionFailed, "linear combination of a non-derivation " + der.describe());
        if (der.paired_automorphism().canonical() != twist)
            fail(ErrorCode::IncompatibleMaps, "derivation " + der.describe() + " is not twisted by " + aut.describe());
        if (!coeff.is_central() || aut.apply(coeff) != coeff)
            fail(ErrorCode::NotInF, "coefficient " + coeff.to_string() + " is not central and fixed");
        m.terms_.push_back({coeff, std::make_shared<const RingMap>(der)});
    }
    return m;
}

bool RingMap::is_automorphism() const noexcept
{
    return kind_ == Kind::Identity || kind_ == Kind::InnerAut || kind_ == Kind::QShift;
}

const RingMap &RingMap::paired_automorphism() const
{
    if (!aut_) fail(ErrorCode::PreconditionFailed, describe() + " is not a derivation");
    return *aut_;
}

Scalar RingMap::apply(const Scalar &r) const
{
    switch (kind_) {
    case Kind::Identity: return r;
    case Kind::InnerAut: return element_ * r * element_.inverse();
    case Kind::QShift: require_qx(r, "q-shift"); return Scalar(r.ratfunc().dilated(q_));
    case Kind::ZeroDer: return Scalar::zero(r.kind());
    case Kind::Ddx: require_qx(r, "d/dx"); return Scalar(r.ratfunc().derivative());
    case Kind::InnerDer: return element_ * r - aut_->apply(r) * element_;
    case Kind::QDiff: {
        require_qx(r, "q-difference");
        const RatFunc &f = r.ratfunc();
        const RatFunc step(UPoly(std::vector<Rational>{Rational(0), Rational(q_ - 1)}), UPoly(Rational(1)));
        return Scalar((f.dilated(q_) - f) * step.inverse());
    }
    case Kind::LinComb: {
        Scalar sum = Scalar::zero(r.kind());
        for (const auto &t : terms_) sum += t.coeff * t.der->apply(r);
        return sum;
    }
    }
    return r;
}

RingMap RingMap::inverse() const
{
    switch (kind_) {
    case Kind::Identity: return identity();
    case Kind::InnerAut: return inner_aut(element_.inverse());
    case Kind::QShift: return qshift(Rational(1 / q_));
    default: fail(ErrorCode::PreconditionFailed, "derivation " + describe() + " has no inverse");
    }
}

RingMap RingMap::canonical() const
{
    switch (kind_) {
    case Kind::Identity:
    case Kind::Ddx:
    case Kind::QDiff:
        return *this;
    case Kind::InnerAut: return element_.is_central() ? identity() : *this;
    case Kind::QShift: return q_ == 1 ? identity() : *this;
    case Kind::ZeroDer: return zero_der(aut_->canonical());
    case Kind::InnerDer: {
        RingMap twist = aut_->canonical();
        if (element_.is_zero() || (element_.is_central() && twist.kind() == Kind::Identity)) return zero_der(twist);
        return inner_der(element_, twist);
    }
    case Kind::LinComb: {
        RingMap twist = aut_->canonical();
        std::vector<std::pair<Scalar, RingMap>> flat;
        auto push = [&flat](const Scalar &coeff, const RingMap &base) {
            if (base.kind() == Kind::ZeroDer || coeff.is_zero()) return;
            for (auto &entry : flat) {
                if (entry.second == base) {
                    entry.first += coeff;
                    return;
                }
            }
            flat.emplace_back(coeff, base);
        };
        for (const auto &t : terms_) {
            RingMap base = t.der->canonical();
            if (base.kind() == Kind::LinComb) {
                for (const auto &inner : base.terms_) push(t.coeff * inner.coeff, *inner.der);
            } else {
                push(t.coeff, base);
            }
        }
        std::erase_if(flat, [](const auto &entry) { return entry.first.is_zero(); });
        std::stable_sort(flat.begin(), flat.end(),
                         [](const auto &x, const auto &y) { return x.second.describe() < y.second.describe(); });
        if (flat.empty()) return zero_der(twist);
        if (flat.size() == 1 && flat.front().first.is_one()) return flat.front().second;
        return lin_comb(twist, flat);
    }
    }
    return *this;
}

bool RingMap::operator==(const RingMap &o) const
{
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case Kind::Identity:
    case Kind::Ddx:
        return true;
    case Kind::InnerAut: return same_scalar(element_, o.element_);
    case Kind::QShift:
    case Kind::QDiff:
        return q_ == o.q_;
    case Kind::ZeroDer: return *aut_ == *o.aut_;
    case Kind::InnerDer: return same_scalar(element_, o.element_) && *aut_ == *o.aut_;
    case Kind::LinComb:
        if (*aut_ != *o.aut_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            if (!same_scalar(terms_[k].coeff, o.terms_[k].coeff) || *terms_[k].der != *o.terms_[k].der) return false;
        }
        return true;
    }
    return false;
}

std::string RingMap::describe() const
{
    switch (kind_) {
    case Kind::Identity: return "id";
    case Kind::InnerAut: return "inner_aut(" + element_.to_string() + ")";
    case Kind::QShift: return "qshift(" + rational_to_string(q_) + ")";
    case Kind::ZeroDer: return "zero[" + aut_->describe() + "]";
    case Kind::Ddx: return "d/dx";
    case Kind::InnerDer: return "inner_der(" + element_.to_string() + ")[" + aut_->describe() + "]";
    case Kind::QDiff: return "qdiff(" + rational_to_string(q_) + ")";
    case Kind::LinComb: {
        std::string out;
        for (const auto &t : terms_) {
            if (!out.empty()) out += " + ";
            std::string c = t.coeff.to_string();
            if (needs_parentheses(c)) c = "(" + c + ")";
            out += c + "*" + t.der->describe();
        }
        return "(" + out + ")";
    }
    }
    return "?";
}

nlohmann::ordered_json RingMap::to_json() const
{
    nlohmann::ordered_json j;
    switch (kind_) {
    case Kind::Identity: j["kind"] = "identity"; break;
    case Kind::InnerAut:
        j["kind"] = "inner_aut";
        j["c"] = element_.to_string();
        break;
    case Kind::QShift:
        j["kind"] = "qshift";
        j["q"] = rational_to_string(q_);
        break;
    case Kind::ZeroDer:
        j["kind"] = "zero";
        j["aut"] = aut_->to_json();
        break;
    case Kind::Ddx: j["kind"] = "ddx"; break;
    case Kind::InnerDer:
        j["kind"] = "inner_der";
        j["c"] = element_.to_string();
        j["aut"] = aut_->to_json();
        break;
    case Kind::QDiff:
        j["kind"] = "qdiff";
        j["q"] = rational_to_string(q_);
        break;
    case Kind::LinComb: {
        j["kind"] = "lincomb";
        j["aut"] = aut_->to_json();
        auto terms = nlohmann::ordered_json::array();
        for (const auto &t : terms_) {
            nlohmann::ordered_json term;
            term["coeff"] = t.coeff.to_string();
            term["der"] = t.der->to_json();
            terms.push_back(std::move(term));
        }
        j["terms"] = std::move(terms);
        break;
    }
    }
    return j;
}

namespace {

std::string field_text(const nlohmann::json &j, const char *key)
{
    if (!j.contains(key)) fail(ErrorCode::ConfigError, std::string("map descriptor is missing '") + key + "'");
    const auto &v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(ErrorCode::ConfigError, std::string("field '") + key + "' must be a string or an integer");
}

Rational rational_field(const nlohmann::json &j, const char *key)
{
    const Scalar s = parse_scalar(field_text(j, key), RingKind::Q);
    return s.rational();
}

} // namespace

RingMap RingMap::from_json(const nlohmann::json &j, RingKind kind, const RingMap *default_aut)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail(ErrorCode::ConfigError, "map descriptor must be an object with a string 'kind'");
    const std::string k = j.at("kind").get<std::string>();
    auto twist = [&]() -> RingMap {
        if (j.contains("aut")) return from_json(j.at("aut"), kind);
        if (default_aut) return *default_aut;
        return identity();
    };
    if (k == "identity") return identity();
    if (k == "inner_aut") return inner_aut(parse_scalar(field_text(j, "c"), kind));
    if (k == "qshift") return qshift(rational_field(j, "q"));
    if (k == "zero") return zero_der(twist());
    if (k == "ddx") return ddx();
    if (k == "inner_der") return inner_der(parse_scalar(field_text(j, "c"), kind), twist());
    if (k == "qdiff") return qdiff(rational_field(j, "q"));
    if (k == "lincomb") {
        const RingMap aut = twist();
        if (!j.contains("terms") || !j.at("terms").is_array())
            fail(ErrorCode::ConfigError, "lincomb descriptor needs a 'terms' array");
        std::vector<std::pair<Scalar, RingMap>> terms;
        for (const auto &t : j.at("terms")) {
            if (!t.contains("der")) fail(ErrorCode::ConfigError, "lincomb term is missing 'der'");
            terms.emplace_back(parse_scalar(field_text(t, "coeff"), kind), from_json(t.at("der"), kind, &aut));
        }
        return lin_comb(aut, terms);
    }
    fail(ErrorCode::ConfigError, "unknown map kind '" + k + "'");
}

} // namespace skewnorm
