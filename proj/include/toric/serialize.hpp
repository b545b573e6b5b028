#pragma once

#include "toric/betti.hpp"
#include "toric/complex.hpp"
#include "toric/config.hpp"
#include "toric/ideal_gen.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace toric {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const Binomial& b, const VectorConfiguration& config);
Json to_json(const BinomialSet& set, const VectorConfiguration& config);
Json to_json(const BettiRecord& r);
Json to_json(const IndispensableComplex& complex);

/// {"name": string?, "vectors": [[int, ...], ...], "grading": ["p/q", ...]?}
/// Integers may be JSON numbers or decimal strings. Throws MalformedInput,
/// NotPointed.
VectorConfiguration configuration_from_json(const Json& doc);
VectorConfiguration read_configuration_file(const std::string& path);

/// Monomial in the "x1^3*x2" form; "1" is the unit monomial.
ExponentVector parse_monomial(std::string_view text, std::size_t variables);

/// Array of binomials, each {"lhs": [...], "rhs": [...]} or a string
/// "x1*x6 - x2*x4"; an object {"binomials": [...]} is accepted as well.
/// Elements are normalized; non-homogeneous ones raise DegreeMismatch.
BinomialSet binomial_set_from_json(const Json& doc, const VectorConfiguration& config);

ADegree parse_degree(std::string_view text);

}  // namespace toric
