#pragma once

#include "skewnorm/ore_ring.hpp"
#include "skewnorm/scalar.hpp"
#include "skewnorm/skew_poly.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace skewnorm {

// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' nat)?
//   base   := nat | identifier | '(' expr ')'
// Identifiers are ring variables or the scalar literals x (Q(x)) and
// i, j, k (quaternions). Division is right division by a nonzero scalar.
// Products are normalized through the ring's commutation rules, so
// right-hand coefficients end up on the left.
SkewPoly parse_expr(std::string_view src, const RingPtr &ring);
Scalar parse_scalar(std::string_view src, RingKind kind);

// Canonical text: graded-lex descending, `coeff*t1^a*t2^b`, unit
// coefficients and exponents omitted. Re-parseable by parse_expr.
std::string to_string(const SkewPoly &f);
std::string monomial_string(const OreRing &ring, const Exponents &e);

// [{"exponents": [...], "coeff": "..."}, ...]
nlohmann::ordered_json to_json(const SkewPoly &f);
SkewPoly poly_from_json(const nlohmann::json &j, const RingPtr &ring);

} // namespace skewnorm
