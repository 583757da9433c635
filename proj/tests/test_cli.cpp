#include "golden.hpp"
#include "support.hpp"

#include "skewnorm/cli.hpp"
#include "skewnorm/error.hpp"

#include <doctest.h>

#include <cstdio>

using namespace testsupport;

namespace {

CliResult cli(std::vector<std::string> args) { return run_cli(args); }

std::string cfg(const std::string &name) { return source_path("configs/" + name); }

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("parse and print examples")
    {
        const RingPtr w = weyl();
        CHECK(to_string(P("t*x", w)) == "x*t + 1");
        CHECK(to_string(P("-(t - x)^2", w)) == "-t^2 + 2*x*t - x^2 + 1");
        CHECK(to_string(P("t/2", w)) == "1/2*t");
        CHECK(to_string(P("0*t", w)) == "0");
        const RingPtr h = trivial(RingKind::HQ, 2);
        CHECK(to_string(P("(1 + i)*t1*t2 - k", h)) == "(1 + i)*t1*t2 - k");
        CHECK(to_string(P("-i*t2", h)) == "-i*t2");
    }

    TEST_CASE("parse errors carry positions")
    {
        const RingPtr w2 = weyl(2);
        try {
            P("t1 +\n  * t2", w2);
            FAIL("expected ParseError");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::ParseError);
            CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
        }
        auto code = [&](const char *src, const RingPtr &r) {
            try {
                P(src, r);
            } catch (const Error &e) {
                return e.code();
            }
            return ErrorCode::UsageError;
        };
        CHECK(code("t3", w2) == ErrorCode::UnknownVariable);
        CHECK(code("i*t1", w2) == ErrorCode::UnknownScalarLiteral);
        CHECK(code("t1/t2", w2) == ErrorCode::ParseError);
        CHECK(code("t1/0", w2) == ErrorCode::DivisionByZero);
        CHECK(code("(t1", w2) == ErrorCode::ParseError);
    }

    TEST_CASE("text and JSON round-trips")
    {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 30; ++trial) {
            const RingPtr ring = random_ring(static_cast<RingKind>(trial % 3), 2, rng);
            const SkewPoly f = random_poly(ring, rng);
            CHECK(P(to_string(f), ring).same_terms(f));
            CHECK(poly_from_json(to_json(f), ring).same_terms(f));
        }
    }

    TEST_CASE("golden outputs")
    {
        for (const GoldenCase &c : golden_cases()) {
            CAPTURE(c.name);
            const CliResult r = cli(c.args);
            CHECK(r.exit_code == 0);
            CHECK(r.out == slurp(golden_path(c)));
        }
    }

    TEST_CASE("text output")
    {
        const CliResult r = cli({"--ring", cfg("weyl.json"), "normalform", "t*x"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "x*t + 1\n");
    }

    TEST_CASE("exit codes")
    {
        CHECK(cli({}).exit_code == 2);
        CHECK(cli({"--ring", cfg("weyl.json")}).exit_code == 2);
        CHECK(cli({"--ring", cfg("weyl.json"), "normalform", "t*"}).exit_code == 2);
        CHECK(cli({"--ring", cfg("weyl.json"), "normalform", "s"}).exit_code == 2);
        CHECK(cli({"--ring", cfg("weyl.json"), "--format", "xml", "normalform", "t"}).exit_code == 2);
        CHECK(cli({"--ring", cfg("missing.json"), "normalform", "t"}).exit_code == 2);
        CHECK(cli({"--ring", cfg("weyl.json"), "bogus"}).exit_code == 2);
        // Domain errors.
        CHECK(cli({"--ring", cfg("weyl2.json"), "monicize", "0"}).exit_code == 1);
        CHECK(cli({"--ring", cfg("weyl.json"), "evaluate", "t", "--at", "x*t"}).exit_code == 1);
        CHECK(cli({"--ring", cfg("weyl2.json"), "reduce", "t2", "--relation", "2*t2^2"}).exit_code == 1);
        const CliResult help = cli({"--help"});
        CHECK(help.exit_code == 0);
    }

    TEST_CASE("output file")
    {
        const std::string path = "cli_output_test.json";
        const CliResult r = cli({"--ring", cfg("weyl.json"), "--format", "json", "--output", path, "normalform", "t"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.empty());
        const auto j = nlohmann::json::parse(slurp(path));
        CHECK(j["command"] == "normalform");
        std::remove(path.c_str());
    }
}
