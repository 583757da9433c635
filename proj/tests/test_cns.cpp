#include "support.hpp"

#include "skewnorm/cns.hpp"
#include "skewnorm/error.hpp"

#include <doctest.h>

using namespace testsupport;

namespace {

std::vector<Scalar> hs(std::initializer_list<const char *> items)
{
    std::vector<Scalar> out;
    for (const char *s : items) out.push_back(H(s));
    return out;
}

std::vector<Scalar> qs(std::initializer_list<const char *> items)
{
    std::vector<Scalar> out;
    for (const char *s : items) out.push_back(Q(s));
    return out;
}

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

TEST_SUITE("cns")
{
    TEST_CASE("formal_substitute examples")
    {
        const RingPtr h = trivial(RingKind::HQ, 1);
        CHECK(formal_substitute(P("t^2 + 1", h), {H("i")}) == H("0"));
        CHECK(formal_substitute(P("t^2 + 1", h), {H("0")}) == H("1"));
        const RingPtr h2 = trivial(RingKind::HQ, 2);
        CHECK(formal_substitute(P("i*t1*t2", h2), {H("j"), H("k")}) == H("-1"));
        CHECK(code_of([&] { formal_substitute(P("t1", h2), {H("1")}); }) == ErrorCode::ArityMismatch);
    }

    TEST_CASE("formal substitution is not multiplicative")
    {
        // In a twisted ring (t r)(a) = w(r) a + d(r) while t(a) r(a) = a r.
        const RingMap wi = RingMap::inner_aut(H("i"));
        const RingPtr h = uniform_ring(RingKind::HQ, 1, wi, RingMap::zero_der(wi), true);
        const SkewPoly f = P("t", h), g = P("j", h);
        const Scalar a = H("1 + i");
        CHECK(formal_substitute(f * g, {a}) != formal_substitute(f, {a}) * formal_substitute(g, {a}));
    }

    TEST_CASE("validate_sets examples")
    {
        CHECK(validate_sets({EvaluationSet::make(hs({"0", "1", "i"}))}, 2));
        CHECK_FALSE(validate_sets({EvaluationSet::make(hs({"i", "j"}))}, 1));
        CHECK_FALSE(validate_sets({EvaluationSet::make(hs({"0", "1"}))}, 2));
        CHECK_FALSE(EvaluationSet::make(qs({"1", "1"})).ok());
        // Central sets always pass.
        CHECK(EvaluationSet::make(hs({"0", "1", "2", "-1/2"})).ok());
    }

    TEST_CASE("cns_witness examples")
    {
        const RingPtr h = trivial(RingKind::HQ, 1);
        const Witness w1 = cns_witness(P("t^2 + 1", h), {EvaluationSet::make(hs({"0", "1", "i"}))});
        CHECK(w1.point == hs({"0"}));
        CHECK(w1.value == H("1"));
        CHECK(w1.scanned == 1);

        const RingPtr q2 = trivial(RingKind::Q, 2);
        const EvaluationSet A = EvaluationSet::make(qs({"0", "1", "2"}));
        const Witness w2 = cns_witness(P("t1*t2", q2), {A, A});
        CHECK(w2.point == qs({"1", "1"}));
        CHECK(w2.scanned == 5);

        const RingPtr q1 = trivial(RingKind::Q, 1);
        const Witness w3 = cns_witness(P("(t - 1)*(t - 2)", q1), {EvaluationSet::make(qs({"0", "1", "2", "3"}))});
        CHECK(w3.point == qs({"0"}));
        CHECK(w3.value == Q("2"));

        const Witness w4 = cns_witness(P("(t - 1)*(t - 2)", q1), {EvaluationSet::make(qs({"1", "2", "3"}))});
        CHECK(w4.point == qs({"3"}));
        CHECK(w4.scanned == 3);
    }

    TEST_CASE("cns_witness preconditions")
    {
        const RingPtr h = trivial(RingKind::HQ, 1);
        CHECK(code_of([&] { cns_witness(P("t^2 + 1", h), {EvaluationSet::make(hs({"i", "j", "k"}))}); }) ==
              ErrorCode::PreconditionFailed);
        CHECK(code_of([&] { cns_witness(P("t^2 + 1", h), {EvaluationSet::make(hs({"0", "1"}))}); }) ==
              ErrorCode::PreconditionFailed);
        CHECK(code_of([&] { cns_witness(SkewPoly(h), {EvaluationSet::make(hs({"0"}))}); }) ==
              ErrorCode::ZeroPolynomial);
    }

    TEST_CASE("gordon_motzkin_check examples")
    {
        const RingPtr h = trivial(RingKind::HQ, 1);
        const RootClassReport r = gordon_motzkin_check(P("t^2 + 1", h), hs({"i", "j", "k"}));
        REQUIRE(r.classes.size() == 1);
        CHECK(r.classes[0].members.size() == 3);
        REQUIRE(r.classes[0].trace_norm.has_value());
        CHECK(r.classes[0].trace_norm->first == 0);
        CHECK(r.classes[0].trace_norm->second == 1);

        const RootClassReport two = gordon_motzkin_check(P("t^2 - 3*t + 2", h), hs({"1", "2"}));
        CHECK(two.classes.size() == 2);
        CHECK(two.degree == 2);

        try {
            gordon_motzkin_check(P("t^2 + 1", h), hs({"i", "1"}));
            FAIL("expected NotARoot");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::NotARoot);
            CHECK(e.detail() == "1");
        }
        const RingMap wi = RingMap::inner_aut(H("i"));
        const RingPtr twisted = uniform_ring(RingKind::HQ, 1, wi, RingMap::zero_der(wi), true);
        CHECK(code_of([&] { gordon_motzkin_check(P("t^2 + 1", twisted), hs({"i"})); }) == ErrorCode::TwistMismatch);
    }

    TEST_CASE("roots of x^2 + 1 fill one class")
    {
        // Every pure quaternion of norm 1 is a root.
        const RingPtr h = trivial(RingKind::HQ, 1);
        const RootClassReport r =
            gordon_motzkin_check(P("t^2 + 1", h), hs({"i", "3/5*j + 4/5*k", "-k", "2/3*i + 1/3*j + 2/3*k"}));
        CHECK(r.classes.size() == 1);
    }
}
