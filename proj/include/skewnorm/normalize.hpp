#pragma once

#include "skewnorm/coeff_rings.hpp"
#include "skewnorm/eval.hpp"
#include "skewnorm/ore_ring.hpp"
#include "skewnorm/skew_poly.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace skewnorm {

/// Central linear change of variables y_i -> y_i + u_i y_m (i != m) followed
/// by left scaling with a = h(u)^-1.
struct Substitution {
    std::size_t target = 0;
    std::vector<Scalar> shifts;
    Scalar scale;
    SkewPoly leading_form;
    // Polynomial tests spent finding the shifts.
    std::uint64_t specializations = 0;
};

/// t^m + e1 t^(m-1) + ... + em = 0 in `ring`, t the variable at `var`.
/// eps[k-1] holds e_k; none of them involves t.
struct MonicRelation {
    RingPtr ring;
    std::size_t var = 0;
    std::uint32_t degree = 0;
    std::vector<SkewPoly> eps;

    SkewPoly polynomial() const;
    static MonicRelation from_poly(const SkewPoly &g, std::size_t var);
};

struct NonvanishingPoint {
    std::vector<Scalar> point;
    std::uint64_t specializations = 0;
};

/// Point of F^k where the commutative polynomial h is nonzero, by recursive
/// specialization over the first `bound` + 1 values of the stream.
NonvanishingPoint find_nonvanishing_point(const SkewPoly &h, CentralFixedStream stream, std::uint64_t bound);

struct MonicizeResult {
    Substitution substitution;
    // Ring of g: derivations d_i - u_i d_m for i != m.
    RingPtr ring;
    SkewPoly g;
};

/// g = a f(y_1 + u_1 y_m, ..., y_m): monic in y_m of degree deg f.
MonicizeResult monicize(const SkewPoly &f, std::size_t target);

struct NormalizationStep {
    RingPtr before;
    RingPtr after;
    SkewPoly input;
    Substitution substitution;
    MonicRelation relation;
    bool replay_ok = false;
};

/// One elimination of the last variable with t_i = x_i - s_i x_n.
NormalizationStep normalize_step(const SkewPoly &f);

// g(x_1 - s_1 x_n, ..., x_n) == a f, recomputed.
bool replay_step(const NormalizationStep &step);

struct NormalizationResult {
    RingPtr ring;
    std::vector<NormalizationStep> steps;
    std::size_t remaining = 0;
    std::vector<std::string> events;

    nlohmann::ordered_json to_json() const;
    bool replay() const;
};

/// Consumes the relations in order (all given in the variables of `ring`),
/// each eliminating the current last variable.
NormalizationResult normalize(const RingPtr &ring, const std::vector<SkewPoly> &relations);

// Re-executes every recorded step from a serialized report.
bool replay_report(const nlohmann::json &report);

struct Division {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// e = quotient * relation + remainder with deg_t(remainder) < degree.
Division reduce_by_monic(const SkewPoly &e, const MonicRelation &rel);

} // namespace skewnorm
