#include "support.hpp"

#include "skewnorm/cns.hpp"
#include "skewnorm/error.hpp"
#include "skewnorm/normalize.hpp"

#include <doctest.h>

using namespace testsupport;

namespace {

ErrorCode code_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::UsageError;
}

} // namespace

TEST_SUITE("normalize")
{
    TEST_CASE("monicize examples")
    {
        const RingPtr w2 = weyl(2);
        const MonicizeResult a = monicize(P("t1*t2", w2), 1);
        CHECK(a.substitution.shifts == std::vector<Scalar>{X("1")});
        CHECK(a.substitution.scale == X("1"));
        CHECK(to_string(a.substitution.leading_form) == "x1");
        CHECK(to_string(a.g) == "t1*t2 + t2^2");

        const MonicizeResult b = monicize(P("t2^3 + t1", w2), 1);
        CHECK(b.substitution.shifts == std::vector<Scalar>{X("0")});
        CHECK(b.substitution.scale == X("1"));
        CHECK(to_string(b.g) == "t2^3 + t1");

        const MonicizeResult c = monicize(P("2*t1^2", w2), 1);
        CHECK(c.substitution.shifts == std::vector<Scalar>{X("1")});
        CHECK(c.substitution.scale == X("1/2"));
        CHECK(c.g.coeff({0, 2}).is_one());

        CHECK(code_of([&] { monicize(SkewPoly(w2), 1); }) == ErrorCode::ZeroPolynomial);
        CHECK(code_of([&] { monicize(P("t1", w2), 5); }) == ErrorCode::ArityMismatch);
    }

    TEST_CASE("monicized polynomials are monic of the same degree")
    {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 15; ++trial) {
            const RingPtr ring = random_shared_ring(static_cast<RingKind>(trial % 3), 2, rng);
            SkewPoly f = random_poly(ring, rng);
            if (f.is_zero() || total_degree(f).value() == 0) continue;
            const MonicizeResult r = monicize(f, 1);
            const std::uint32_t d = total_degree(f).value();
            CHECK(total_degree(r.g).value() == d);
            CHECK(r.g.coeff({0, d}).is_one());
        }
    }

    TEST_CASE("find_nonvanishing_point examples")
    {
        const RingPtr c2 = trivial(RingKind::Q, 2);
        const CentralFixedStream stream(RingKind::Q, {RingMap::identity()});
        CHECK(find_nonvanishing_point(P("t", trivial(RingKind::Q, 1)), stream, 4).point == std::vector<Scalar>{Q("1")});
        CHECK(find_nonvanishing_point(P("3", c2), stream, 4).point.size() == 2);
        CHECK(find_nonvanishing_point(P("t^2 - 1", trivial(RingKind::Q, 1)), stream, 4).point ==
              std::vector<Scalar>{Q("0")});
        const NonvanishingPoint p = find_nonvanishing_point(P("t1*t2 - t2", c2), stream, 4);
        CHECK(!formal_substitute(P("t1*t2 - t2", c2), p.point).is_zero());
        CHECK(code_of([&] { find_nonvanishing_point(SkewPoly(c2), stream, 4); }) == ErrorCode::ZeroPolynomial);
    }

    TEST_CASE("normalize_step examples")
    {
        const RingPtr w2 = weyl(2);
        const NormalizationStep s = normalize_step(P("t1*t2", w2));
        CHECK(s.replay_ok);
        CHECK(s.relation.degree == 2);
        CHECK(s.relation.var == 1);
        CHECK(to_string(s.relation.eps[0]) == "t1");
        CHECK(s.relation.eps[1].is_zero());
        CHECK(replay_step(s));

        const NormalizationStep lin = normalize_step(P("t2 - 1", w2));
        CHECK(lin.relation.degree == 1);
        CHECK(lin.substitution.shifts == std::vector<Scalar>{X("0")});
        CHECK(to_string(lin.relation.eps[0]) == "-1");
        CHECK(replay_step(lin));
    }

    TEST_CASE("normalize chains")
    {
        const RingPtr w3 = weyl(3);
        const NormalizationResult none = normalize(w3, {});
        CHECK(none.steps.empty());
        CHECK(none.remaining == 3);

        const NormalizationResult one = normalize(w3, {P("t1*t3 + t2", w3)});
        CHECK(one.steps.size() == 1);
        CHECK(one.remaining == 2);
        CHECK(one.replay());

        const NormalizationResult two = normalize(w3, {P("t1*t3 + t2", w3), P("t2^2 - t1 + t3", w3)});
        REQUIRE(two.steps.size() == 2);
        CHECK(two.remaining == 1);
        CHECK(two.replay());
        const auto j = two.to_json();
        CHECK(j["steps"].size() == 2);
        CHECK(replay_report(nlohmann::json::parse(j.dump())));

        const NormalizationResult repeated = normalize(w3, {P("t3", w3), P("t3", w3)});
        CHECK(repeated.steps.size() == 1);
        REQUIRE(repeated.events.size() == 1);
        CHECK(repeated.events[0].rfind("RelationBecameZero", 0) == 0);
    }

    TEST_CASE("relations outside the subring are rejected")
    {
        const RingPtr w3 = weyl(3);
        CHECK(code_of([&] { normalize(w3, {P("t1*t3 + t2", w3), P("t2^2 - t1", w3)}); }) ==
              ErrorCode::RelationNotInSubring);
    }

    TEST_CASE("tampered reports fail replay")
    {
        const RingPtr w2 = weyl(2);
        const NormalizationResult r = normalize(w2, {P("t1*t2", w2)});
        nlohmann::json j = nlohmann::json::parse(r.to_json().dump());
        CHECK(replay_report(j));
        j["steps"][0]["scale"] = "2";
        CHECK_FALSE(replay_report(j));
    }

    TEST_CASE("reduce_by_monic examples")
    {
        const RingPtr q1 = trivial(RingKind::Q, 1);
        const MonicRelation rel = MonicRelation::from_poly(P("t^2 - 3*t + 2", q1), 0);
        const Division d = reduce_by_monic(P("t^2", q1), rel);
        CHECK(d.remainder == P("3*t - 2", q1));
        CHECK(d.quotient == P("1", q1));
        CHECK(code_of([&] { MonicRelation::from_poly(P("2*t^2", q1), 0); }) == ErrorCode::InvariantViolated);

        const RingPtr w2 = weyl(2);
        const MonicRelation wr = MonicRelation::from_poly(P("t2^2 + t1*t2", w2), 1);
        const Division wd = reduce_by_monic(P("t2^3", w2), wr);
        CHECK(wd.quotient == P("t2 - t1", w2));
        CHECK(wd.remainder == P("t1^2*t2", w2));
    }

    TEST_CASE("division identity on random inputs")
    {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 15; ++trial) {
            const RingPtr ring = random_shared_ring(static_cast<RingKind>(trial % 3), 2, rng);
            const SkewPoly f = random_poly(ring, rng, 3, 3);
            if (f.is_zero() || total_degree(f).value() == 0) continue;
            const MonicizeResult m = monicize(f, 1);
            const MonicRelation rel = MonicRelation::from_poly(m.g, 1);
            const SkewPoly e = random_poly(m.ring, rng, 5, 4);
            const Division d = reduce_by_monic(e, rel);
            CHECK(d.quotient * rel.polynomial() + d.remainder == e);
            for (const auto &[k, c] : d.remainder.terms()) CHECK(k[1] < rel.degree);
        }
    }
}
