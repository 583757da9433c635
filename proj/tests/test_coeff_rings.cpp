#include "support.hpp"

#include "skewnorm/error.hpp"

#include <doctest.h>

using namespace testsupport;

TEST_SUITE("coeff-rings")
{
    TEST_CASE("quaternion arithmetic")
    {
        CHECK(H("i").inverse() == H("-i"));
        CHECK(H("i") * H("j") == H("k"));
        CHECK(H("j") * H("i") == H("-k"));
        CHECK(H("1/2 + 1/2*i").inverse() == H("1 - i"));
        CHECK_THROWS_AS(H("0").inverse(), Error);
        CHECK(H("i*j*k") == H("-1"));
    }

    TEST_CASE("rational and rational-function arithmetic")
    {
        CHECK(Q("2/4") == Q("1/2"));
        CHECK(Q("1/2").to_string() == "1/2");
        CHECK(Q("-6/4").to_string() == "-3/2");
        const Scalar f = X("(x^2 - 1)/(2*x + 2)");
        CHECK(f == X("1/2*x - 1/2"));
        CHECK(X("1/(2*x)").to_string() == "1/2/x");
        CHECK(X("x/(x + 1)") * X("(x + 1)/x") == X("1"));
        CHECK(X("(x + 1)/(x - 1)").ratfunc().to_string() == "(x + 1)/(x - 1)");
        CHECK_THROWS_AS(X("0").inverse(), Error);
        try {
            (void)(Q("1") + H("1"));
            FAIL("mixed variants must be rejected");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::VariantMismatch);
        }
    }

    TEST_CASE("zero has one representation")
    {
        CHECK(X("x - x") == X("0"));
        CHECK(X("x - x").to_string() == "0");
        CHECK(H("i - i").to_string() == "0");
    }

    TEST_CASE("apply_map examples")
    {
        CHECK(RingMap::inner_aut(H("i")).apply(H("j")) == H("-j"));
        CHECK(RingMap::ddx().apply(X("x^2")) == X("2*x"));
        CHECK(RingMap::qdiff(Rational(2)).apply(X("x^2")) == X("3*x"));
        CHECK(RingMap::qshift(Rational(2)).apply(X("1/x")) == X("1/(2*x)"));
        try {
            (void)RingMap::ddx().apply(H("i"));
            FAIL("d/dx on quaternions must fail");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::UnsupportedRing);
        }
    }

    TEST_CASE("check_derivation examples")
    {
        const CheckOptions fifty{50, kDefaultSeed};
        CHECK(check_derivation(RingKind::Qx, RingMap::identity(), RingMap::ddx(), fifty));
        const RingMap wi = RingMap::inner_aut(H("i"));
        CHECK(check_derivation(RingKind::HQ, wi, RingMap::inner_der(H("j"), wi), fifty));
        const MapFn id = [](const Scalar &r) { return r; };
        const MapFn square = [](const Scalar &r) { return r * r; };
        CHECK_FALSE(check_derivation(RingKind::Q, id, square, fifty));
        CHECK(check_derivation(RingKind::Qx, RingMap::qshift(Rational(3)), RingMap::qdiff(Rational(3)), fifty));
        // d/dx is not twisted by a q-shift.
        const MapFn shift = [](const Scalar &r) { return RingMap::qshift(Rational(2)).apply(r); };
        const MapFn ddx = [](const Scalar &r) { return RingMap::ddx().apply(r); };
        CHECK_FALSE(check_derivation(RingKind::Qx, shift, ddx, fifty));
    }

    TEST_CASE("check_commutation examples")
    {
        const std::pair<RingMap, RingMap> same[] = {{RingMap::ddx(), RingMap::ddx()}};
        CHECK(check_commutation(RingKind::Qx, same));
        // Conjugation by i and by j compose to conjugation by k either way.
        const std::pair<RingMap, RingMap> ij[] = {{RingMap::inner_aut(H("i")), RingMap::inner_aut(H("j"))}};
        CHECK(check_commutation(RingKind::HQ, ij));
        // At r = i: conj_i(conj_{1+j}(i)) = k, conj_{1+j}(conj_i(i)) = -k.
        const RingMap a = RingMap::inner_aut(H("i"));
        const RingMap b = RingMap::inner_aut(H("1 + j"));
        CHECK(a.apply(b.apply(H("i"))) == H("k"));
        CHECK(b.apply(a.apply(H("i"))) == H("-k"));
        const std::pair<RingMap, RingMap> ab[] = {{a, b}};
        CHECK_FALSE(check_commutation(RingKind::HQ, ab));
        const std::pair<RingMap, RingMap> shifted[] = {{RingMap::qshift(Rational(2)), RingMap::ddx()}};
        CHECK_FALSE(check_commutation(RingKind::Qx, shifted));
        // d_i = delta_i + a_i delta_n commute when the deltas do.
        const RingMap d1 = RingMap::lin_comb(RingMap::identity(), {{X("1"), RingMap::ddx()}, {X("3"), RingMap::ddx()}});
        const std::pair<RingMap, RingMap> mixed[] = {{d1, RingMap::ddx()}};
        CHECK(check_commutation(RingKind::Qx, mixed));
    }

    TEST_CASE("are_conjugate examples")
    {
        CHECK(are_conjugate(H("i"), H("j")));
        const Scalar x = H("i + j");
        CHECK(x * H("i") * x.inverse() == H("j"));
        CHECK_FALSE(are_conjugate(H("1"), H("2")));
        CHECK_FALSE(are_conjugate(H("i"), H("1 + i")));
        CHECK(are_conjugate(H("1 + i"), H("1 + 3/5*j + 4/5*k")));
        CHECK_FALSE(are_conjugate(Q("1"), Q("2")));
        CHECK(are_conjugate(X("x"), X("x")));
        CHECK_THROWS_AS((void)are_conjugate(Q("1"), H("1")), Error);
    }

    TEST_CASE("central fixed stream")
    {
        CentralFixedStream weyl_stream(RingKind::Qx, {RingMap::identity(), RingMap::ddx()});
        const auto first = weyl_stream.take(3);
        CHECK(first == std::vector<Scalar>{X("0"), X("1"), X("-1")});
        const RingMap wi = RingMap::inner_aut(H("i"));
        CentralFixedStream quat(RingKind::HQ, {wi, RingMap::zero_der(wi)});
        CHECK(quat.take(5) == std::vector<Scalar>{H("0"), H("1"), H("-1"), H("2"), H("-2")});
        const RingMap maps[] = {RingMap::identity(), RingMap::ddx()};
        CHECK_FALSE(in_central_fixed(X("x"), maps));
        CHECK(in_central_fixed(X("5/3"), maps));
        const RingMap qmaps[] = {wi};
        CHECK_FALSE(in_central_fixed(H("i"), qmaps));
    }

    TEST_CASE("maps_agree and canonical forms")
    {
        CHECK(RingMap::inner_aut(H("2")).canonical() == RingMap::identity());
        CHECK(maps_agree(RingKind::HQ, RingMap::inner_aut(H("i")), RingMap::inner_aut(H("-3*i"))));
        const RingMap zero = RingMap::lin_comb(RingMap::identity(), {{X("1"), RingMap::ddx()}, {X("-1"), RingMap::ddx()}});
        CHECK(zero.canonical() == RingMap::zero_der(RingMap::identity()));
        // Coefficients must be central and fixed by the twist.
        const RingMap wi = RingMap::inner_aut(H("i"));
        CHECK_THROWS_AS(RingMap::lin_comb(wi, {{H("j"), RingMap::zero_der(wi)}}), Error);
        const RingMap q2 = RingMap::qshift(Rational(2));
        CHECK_THROWS_AS(RingMap::lin_comb(q2, {{X("x"), RingMap::qdiff(Rational(2))}}), Error);
        CHECK_THROWS_AS(RingMap::qdiff(Rational(1)), Error);
    }

    TEST_CASE("division ring axioms on samples")
    {
        for (RingKind kind : {RingKind::Q, RingKind::Qx, RingKind::HQ}) {
            std::mt19937_64 rng(kDefaultSeed);
            for (int n = 0; n < 64; ++n) {
                const Scalar a = random_scalar(kind, rng), b = random_scalar(kind, rng), c = random_scalar(kind, rng);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            }
        }
    }

    TEST_CASE("automorphism laws and inverses")
    {
        std::mt19937_64 rng(7);
        const RingMap qs = RingMap::qshift(Rational(3));
        const RingMap wi = RingMap::inner_aut(H("1 + 2*j"));
        for (int n = 0; n < 32; ++n) {
            const Scalar r = random_scalar(RingKind::Qx, rng);
            CHECK(qs.inverse().apply(qs.apply(r)) == r);
            const Scalar h = random_scalar(RingKind::HQ, rng);
            CHECK(wi.inverse().apply(wi.apply(h)) == h);
        }
        CHECK(check_automorphism(RingKind::Qx, qs));
        CHECK(check_automorphism(RingKind::HQ, wi));
    }
}
