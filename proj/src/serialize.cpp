#include "toric/serialize.hpp"

#include <cctype>
#include <fstream>
#include <limits>

namespace toric {

Json to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Binomial& b, const VectorConfiguration& config) {
    return Json{{"lhs", to_json(b.lhs)},
                {"rhs", to_json(b.rhs)},
                {"degree", to_json(degree_of(b, config))},
                {"text", format_binomial(b)}};
}

Json to_json(const BinomialSet& set, const VectorConfiguration& config) {
    Json out = Json::array();
    for (const auto& b : set.elements) out.push_back(to_json(b, config));
    return out;
}

Json to_json(const BettiRecord& r) {
    return Json{{"degree", to_json(r.degree)},
                {"n", r.components},
                {"sizes", r.sizes},
                {"beta", r.beta},
                {"minimal", r.is_minimal_degree}};
}

Json to_json(const IndispensableComplex& complex) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < complex.vertices.size(); ++i)
        vertices.push_back(Json{{"monomial", to_json(complex.vertices[i])},
                                {"degree", to_json(complex.vertex_degrees[i])},
                                {"text", format_monomial(complex.vertices[i])}});
    Json facets = Json::array();
    for (const auto& f : complex.facets)
        facets.push_back(Json{{"members", f.members}, {"degree", to_json(f.degree)}, {"dimension", f.dimension()}});
    return Json{{"vertices", vertices}, {"facets", facets}};
}

namespace {

Integer integer_from_json(const Json& x) {
    if (x.is_number_integer()) {
        if (x.is_number_unsigned()) return Integer(x.get<std::uint64_t>());
        return Integer(x.get<std::int64_t>());
    }
    if (x.is_string()) return parse_integer(x.get<std::string>());
    throw MalformedInput("expected an integer, got " + x.dump());
}

Rational rational_from_json(const Json& x) {
    if (x.is_string()) return parse_rational(x.get<std::string>());
    return Rational(integer_from_json(x));
}

IntVector int_vector_from_json(const Json& x) {
    if (!x.is_array()) throw MalformedInput("expected an array of integers, got " + x.dump());
    IntVector v;
    for (const auto& e : x) v.push_back(integer_from_json(e));
    return v;
}

}  // namespace

VectorConfiguration configuration_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("vectors")) throw MalformedInput("configuration needs a \"vectors\" array");
    const Json& vectors = doc.at("vectors");
    if (!vectors.is_array() || vectors.empty()) throw MalformedInput("\"vectors\" must be a nonempty array");
    std::vector<IntVector> raw;
    for (const auto& v : vectors) raw.push_back(int_vector_from_json(v));
    std::optional<std::vector<Rational>> grading;
    if (doc.contains("grading") && !doc.at("grading").is_null()) {
        const Json& g = doc.at("grading");
        if (!g.is_array()) throw MalformedInput("\"grading\" must be an array");
        grading.emplace();
        for (const auto& q : g) grading->push_back(rational_from_json(q));
    }
    std::string name;
    if (doc.contains("name") && doc.at("name").is_string()) name = doc.at("name").get<std::string>();
    return load_configuration(std::move(raw), std::move(grading), std::move(name));
}

VectorConfiguration read_configuration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(path + ": " + e.what());
    }
    return configuration_from_json(doc);
}

ExponentVector parse_monomial(std::string_view text, std::size_t variables) {
    ExponentVector u(variables, Integer(0));
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact == "1") return u;
    if (compact.empty()) throw MalformedInput("empty monomial");
    std::size_t pos = 0;
    auto read_digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < compact.size() && std::isdigit(static_cast<unsigned char>(compact[p]))) ++p;
        if (start == p) throw MalformedInput("malformed monomial '" + std::string(text) + "'");
        return compact.substr(start, p - start);
    };
    while (pos < compact.size()) {
        if (compact[pos] != 'x') throw MalformedInput("malformed monomial '" + std::string(text) + "'");
        ++pos;
        Integer index = parse_integer(read_digits(pos));
        if (index < 1 || index > variables)
            throw MalformedInput("variable x" + index.str() + " out of range in '" + std::string(text) + "'");
        Integer exponent = 1;
        if (pos < compact.size() && compact[pos] == '^') {
            ++pos;
            exponent = parse_integer(read_digits(pos));
        }
        u[static_cast<std::size_t>(index) - 1] += exponent;
        if (pos < compact.size()) {
            if (compact[pos] != '*') throw MalformedInput("malformed monomial '" + std::string(text) + "'");
            ++pos;
        }
    }
    return u;
}

BinomialSet binomial_set_from_json(const Json& doc, const VectorConfiguration& config) {
    const Json& list = doc.is_object() && doc.contains("binomials") ? doc.at("binomials") : doc;
    if (!list.is_array()) throw MalformedInput("expected an array of binomials");
    std::vector<Binomial> out;
    for (const auto& e : list) {
        ExponentVector u, v;
        if (e.is_string()) {
            std::string s = e.get<std::string>();
            auto minus = s.find('-');
            if (minus == std::string::npos) throw MalformedInput("binomial '" + s + "' has no '-'");
            u = parse_monomial(std::string_view(s).substr(0, minus), config.size());
            v = parse_monomial(std::string_view(s).substr(minus + 1), config.size());
        } else if (e.is_object() && e.contains("lhs") && e.contains("rhs")) {
            u = int_vector_from_json(e.at("lhs"));
            v = int_vector_from_json(e.at("rhs"));
        } else {
            throw MalformedInput("cannot read binomial " + e.dump());
        }
        validate_exponent(u, config);
        validate_exponent(v, config);
        out.push_back(normalize_binomial(u, v, config));
    }
    return make_binomial_set(out, Provenance::Raw, config);
}

ADegree parse_degree(std::string_view text) {
    ADegree b;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view part = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        std::string trimmed;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        b.push_back(parse_integer(trimmed));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return b;
}

}  // namespace toric
