#include "skewnorm/cli.hpp"

#include "skewnorm/cns.hpp"
#include "skewnorm/error.hpp"
#include "skewnorm/eval.hpp"
#include "skewnorm/normalize.hpp"
#include "skewnorm/text.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace skewnorm {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
    RingPtr ring;
    CheckOptions opts;
    bool json = false;
};

// Text and structured forms of one command's output.
struct Output {
    std::string text;
    Json json;
};

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> read_lines(const std::string &path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ConfigError, "cannot open '" + path + "'");
    std::vector<Line> lines;
    std::string text;
    for (std::size_t n = 1; std::getline(in, text); ++n) {
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        lines.push_back({n, text});
    }
    return lines;
}

// Re-raises an error from a file line with the file position attached.
template <typename Fn>
auto at_line(const std::string &path, const Line &line, Fn &&fn)
{
    try {
        return fn(line.text);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.detail(), line.number, e.column());
    } catch (const Error &e) {
        throw Error(e.code(), path + ":" + std::to_string(line.number) + ": " + e.detail());
    }
}

std::vector<SkewPoly> read_polys(const std::string &path, const RingPtr &ring)
{
    std::vector<SkewPoly> out;
    for (const auto &line : read_lines(path))
        out.push_back(at_line(path, line, [&](const std::string &t) { return parse_expr(t, ring); }));
    return out;
}

std::vector<Scalar> split_scalars(const std::string &text, RingKind kind)
{
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item, kind));
    return out;
}

std::string join(const std::vector<std::string> &items, const std::string &sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::vector<std::string> scalar_strings(const std::vector<Scalar> &v)
{
    std::vector<std::string> out;
    for (const auto &s : v) out.push_back(s.to_string());
    return out;
}

std::string tuple_text(const std::vector<Scalar> &v) { return "(" + join(scalar_strings(v), ", ") + ")"; }

std::size_t variable_index(const OreRing &ring, const std::string &name)
{
    if (name.empty()) {
        if (ring.size() == 0) fail(ErrorCode::UsageError, "the ring has no variables");
        return ring.size() - 1;
    }
    if (auto idx = ring.index_of(name)) return *idx;
    fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
}

Output poly_output(const std::string &command, Json fields, const SkewPoly &result)
{
    Output o;
    o.json["command"] = command;
    for (auto &[k, v] : fields.items()) o.json[k] = v;
    o.json["result"] = to_string(result);
    o.json["terms"] = to_json(result);
    o.text = to_string(result) + "\n";
    return o;
}

Output cmd_normalform(const Context &ctx, const std::string &expr)
{
    Json fields;
    fields["input"] = expr;
    return poly_output("normalform", fields, parse_expr(expr, ctx.ring));
}

Output cmd_multiply(const Context &ctx, const std::string &lhs, const std::string &rhs)
{
    Json fields;
    fields["left"] = lhs;
    fields["right"] = rhs;
    return poly_output("multiply", fields, parse_expr(lhs, ctx.ring) * parse_expr(rhs, ctx.ring));
}

Output cmd_evaluate(const Context &ctx, const std::string &expr, const std::vector<std::string> &at)
{
    const SkewPoly f = parse_expr(expr, ctx.ring);
    std::vector<SkewPoly> elements;
    std::vector<Twist> twists;
    for (std::size_t i = 0; i < at.size(); ++i) {
        elements.push_back(parse_expr(at[i], ctx.ring));
        if (i < ctx.ring->size()) twists.push_back({ctx.ring->variable(i).aut, ctx.ring->variable(i).der});
    }
    if (twists.size() != elements.size())
        fail(ErrorCode::ArityMismatch, "got " + std::to_string(elements.size()) + " elements for " +
                                           std::to_string(ctx.ring->size()) + " variables");
    const AutomorphicTuple tuple = make_tuple(ctx.ring, elements, twists, ctx.opts);
    Json fields;
    fields["input"] = expr;
    Json tj = Json::array();
    for (const auto &s : elements) tj.push_back(to_string(s));
    fields["tuple"] = tj;
    fields["certificate"] = tuple.certificate.to_json();
    if (!tuple.certificate.ok()) {
        std::string failed;
        for (const auto &l : tuple.certificate.laws)
            if (!l.ok()) failed += (failed.empty() ? "" : ", ") + l.law;
        fail(ErrorCode::CertificateFailed, "tuple fails " + failed);
    }
    return poly_output("evaluate", fields, evaluate(f, tuple));
}

Output cmd_mix(const Context &ctx, const std::vector<std::string> &coeffs)
{
    std::vector<Scalar> a;
    for (const auto &c : coeffs) a.push_back(parse_scalar(c, ctx.ring->kind()));
    const AutomorphicTuple mixed = mix_elements(variables_tuple(ctx.ring), a, ctx.opts);
    Output o;
    o.json["command"] = "mix";
    o.json["coefficients"] = scalar_strings(a);
    Json ders = Json::array();
    Json elems = Json::array();
    for (std::size_t i = 0; i < mixed.elements.size(); ++i) {
        ders.push_back(mixed.twists[i].der.to_json());
        elems.push_back(to_string(mixed.elements[i]));
        o.text += "u" + std::to_string(i + 1) + " = " + to_string(mixed.elements[i]) + "   d" + std::to_string(i + 1) +
                  " = " + mixed.twists[i].der.describe() + "\n";
    }
    o.json["derivations"] = ders;
    o.json["elements"] = elems;
    o.json["certificate"] = mixed.certificate.to_json();
    return o;
}

Output cmd_monicize(const Context &ctx, const std::string &expr, const std::string &var)
{
    const SkewPoly f = parse_expr(expr, ctx.ring);
    const std::size_t target = variable_index(*ctx.ring, var);
    const MonicizeResult m = monicize(f, target);
    const Substitution &s = m.substitution;
    Output o;
    o.json["command"] = "monicize";
    o.json["input"] = expr;
    o.json["variable"] = ctx.ring->variable(target).name;
    o.json["shifts"] = scalar_strings(s.shifts);
    o.json["scale"] = s.scale.to_string();
    o.json["leading_form"] = to_string(s.leading_form);
    o.json["specializations"] = s.specializations;
    o.json["result"] = to_string(m.g);
    o.json["terms"] = to_json(m.g);
    o.json["ring"] = m.ring->to_json();
    o.text = "u = " + tuple_text(s.shifts) + "\na = " + s.scale.to_string() + "\nh = " + to_string(s.leading_form) +
             "\ng = " + to_string(m.g) + "\n";
    return o;
}

Output cmd_cns(const Context &ctx, const std::string &expr, const std::string &sets_path)
{
    const SkewPoly f = parse_expr(expr, ctx.ring);
    std::vector<EvaluationSet> sets;
    for (const auto &line : read_lines(sets_path))
        sets.push_back(EvaluationSet::make(
            at_line(sets_path, line, [&](const std::string &t) { return split_scalars(t, ctx.ring->kind()); })));
    const Witness w = cns_witness(f, sets);
    Output o;
    o.json["command"] = "cns-search";
    o.json["input"] = expr;
    Json sj = Json::array();
    for (const auto &s : sets) sj.push_back(scalar_strings(s.elements));
    o.json["sets"] = sj;
    o.json["witness"] = scalar_strings(w.point);
    o.json["value"] = w.value.to_string();
    o.json["scanned"] = w.scanned;
    o.text = "witness = " + tuple_text(w.point) + "\nvalue = " + w.value.to_string() +
             "\nscanned = " + std::to_string(w.scanned) + "\n";
    return o;
}

Output cmd_gm(const Context &ctx, const std::string &expr, const std::string &roots_path)
{
    const SkewPoly f = parse_expr(expr, ctx.ring);
    std::vector<Scalar> roots;
    for (const auto &line : read_lines(roots_path))
        roots.push_back(at_line(roots_path, line,
                                [&](const std::string &t) { return parse_scalar(t, ctx.ring->kind()); }));
    const RootClassReport r = gordon_motzkin_check(f, roots);
    Output o;
    o.json["command"] = "gm-check";
    o.json["input"] = expr;
    o.json["degree"] = r.degree;
    Json classes = Json::array();
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
        const auto &cls = r.classes[c];
        Json cj;
        cj["members"] = scalar_strings(cls.members);
        o.text += "class " + std::to_string(c + 1) + ": " + join(scalar_strings(cls.members), ", ");
        if (cls.trace_norm) {
            cj["trace"] = rational_to_string(cls.trace_norm->first);
            cj["norm"] = rational_to_string(cls.trace_norm->second);
            o.text += " (trace " + rational_to_string(cls.trace_norm->first) + ", norm " +
                      rational_to_string(cls.trace_norm->second) + ")";
        }
        o.text += "\n";
        classes.push_back(cj);
    }
    o.json["classes"] = classes;
    o.json["class_count"] = r.classes.size();
    o.text += "classes = " + std::to_string(r.classes.size()) + " <= degree " + std::to_string(r.degree) + "\n";
    return o;
}

Output cmd_normalize(const Context &ctx, const std::string &relations_path)
{
    const NormalizationResult res = normalize(ctx.ring, read_polys(relations_path, ctx.ring));
    Output o;
    o.json["command"] = "normalize";
    const Json report = res.to_json();
    for (const auto &[k, v] : report.items()) o.json[k] = v;
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        const auto &s = res.steps[i];
        std::vector<std::string> tower;
        for (const auto &v : s.after->variables()) tower.push_back(v.der.describe());
        o.text += "step " + std::to_string(i + 1) + ": eliminate " + s.after->variable(s.relation.var).name + "\n";
        o.text += "  u = " + tuple_text(s.substitution.shifts) + ", a = " + s.substitution.scale.to_string() +
                  ", h = " + to_string(s.substitution.leading_form) + "\n";
        o.text += "  derivations: " + join(tower, ", ") + "\n";
        o.text += "  relation: " + to_string(s.relation.polynomial()) + " = 0\n";
        o.text += std::string("  replay: ") + (s.replay_ok ? "ok" : "FAILED") + "\n";
    }
    for (const auto &e : res.events) o.text += "event: " + e + "\n";
    o.text += "remaining variables: " + std::to_string(res.remaining) + "\n";
    return o;
}

Output cmd_reduce(const Context &ctx, const std::string &expr, const std::string &relation, const std::string &var)
{
    const SkewPoly e = parse_expr(expr, ctx.ring);
    const SkewPoly p = parse_expr(relation, ctx.ring);
    const std::size_t idx = variable_index(*ctx.ring, var);
    const std::string name = ctx.ring->variable(idx).name;
    if (p.is_zero() || degree_in(p, idx) == Degree::of(0))
        fail(ErrorCode::PreconditionFailed, "relation does not involve " + name);
    Exponents top(ctx.ring->size(), 0);
    top[idx] = static_cast<std::uint32_t>(degree_in(p, idx).value());
    for (const auto &[exp, c] : p.terms())
        if (exp[idx] == top[idx] && (exp != top || !c.is_one()))
            fail(ErrorCode::PreconditionFailed, "relation is not monic in " + name);
    const MonicRelation rel = MonicRelation::from_poly(p, idx);
    const Division d = reduce_by_monic(e, rel);
    const bool check = (d.quotient * rel.polynomial() + d.remainder).same_terms(e);
    if (!check) fail(ErrorCode::InvariantViolated, "division re-check failed");
    Output o;
    o.json["command"] = "reduce";
    o.json["input"] = expr;
    o.json["relation"] = to_string(p);
    o.json["variable"] = name;
    o.json["quotient"] = to_string(d.quotient);
    o.json["remainder"] = to_string(d.remainder);
    o.json["check"] = check;
    o.text = "remainder = " + to_string(d.remainder) + "\nquotient = " + to_string(d.quotient) + "\n";
    return o;
}

} // namespace

CliResult run_cli(const std::vector<std::string> &args)
{
    CliResult result;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Exact arithmetic and normalization in skew polynomial rings", "skewnorm"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string ring_path;
    std::string output_path;
    std::string format = "text";
    Context ctx;
    app.add_option("--ring", ring_path, "ring configuration (JSON)")->required();
    app.add_option("--seed", ctx.opts.seed, "seed for sampled certificates");
    app.add_option("--samples", ctx.opts.samples, "samples per sampled check")->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output_path, "write the output to this file");

    std::string expr, expr2, path, var;
    std::vector<std::string> list;
    std::function<Output()> action;

    auto *normalform = app.add_subcommand("normalform", "print the normal form of an expression");
    normalform->add_option("expr", expr)->required();
    normalform->callback([&] { action = [&] { return cmd_normalform(ctx, expr); }; });

    auto *multiply = app.add_subcommand("multiply", "multiply two expressions");
    multiply->add_option("left", expr)->required();
    multiply->add_option("right", expr2)->required();
    multiply->callback([&] { action = [&] { return cmd_multiply(ctx, expr, expr2); }; });

    auto *eval = app.add_subcommand("evaluate", "evaluate at a tuple of automorphic elements");
    eval->add_option("expr", expr)->required();
    eval->add_option("--at", list, "tuple element, once per variable")->required();
    eval->callback([&] { action = [&] { return cmd_evaluate(ctx, expr, list); }; });

    auto *mix = app.add_subcommand("mix", "mix the derivations and variables with constants from F");
    mix->add_option("coeffs", list, "a_1 .. a_(n-1)");
    mix->callback([&] { action = [&] { return cmd_mix(ctx, list); }; });

    auto *mon = app.add_subcommand("monicize", "make a relation monic in one variable");
    mon->add_option("expr", expr)->required();
    mon->add_option("--var", var, "target variable (default: last)");
    mon->callback([&] { action = [&] { return cmd_monicize(ctx, expr, var); }; });

    auto *cns = app.add_subcommand("cns-search", "find a non-vanishing point on a product of sets");
    cns->add_option("expr", expr)->required();
    cns->add_option("--sets", path, "one comma-separated set per line")->required();
    cns->callback([&] { action = [&] { return cmd_cns(ctx, expr, path); }; });

    auto *gm = app.add_subcommand("gm-check", "group roots into conjugacy classes");
    gm->add_option("expr", expr)->required();
    gm->add_option("--roots", path, "one root per line")->required();
    gm->callback([&] { action = [&] { return cmd_gm(ctx, expr, path); }; });

    auto *norm = app.add_subcommand("normalize", "eliminate variables using witness relations");
    norm->add_option("--relations", path, "one relation per line")->required();
    norm->callback([&] { action = [&] { return cmd_normalize(ctx, path); }; });

    auto *red = app.add_subcommand("reduce", "reduce modulo a monic relation");
    red->add_option("expr", expr)->required();
    red->add_option("--relation", expr2, "relation monic in the variable")->required();
    red->add_option("--var", var, "variable (default: last)");
    red->callback([&] { action = [&] { return cmd_reduce(ctx, expr, expr2, var); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        ctx.json = format == "json";
        ctx.ring = ring_from_file(ring_path, ctx.opts);
        const Output o = action();
        const std::string text = ctx.json ? o.json.dump(2) + "\n" : o.text;
        if (output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!(file << text)) fail(ErrorCode::ConfigError, "cannot write '" + output_path + "'");
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = is_usage_error(e.code()) ? 2 : 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 1;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace skewnorm
