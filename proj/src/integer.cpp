#include "toric/integer.hpp"

#include "toric/errors.hpp"

#include <cctype>

namespace toric {

Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw MalformedInput("expected an integer, got '" + std::string(text) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw MalformedInput("expected an integer, got '" + std::string(text) + "'");
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::ZeroBinomial: return "ZeroBinomial";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::FiberTooLarge: return "FiberTooLarge";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::InvalidChoice: return "InvalidChoice";
        case ErrorKind::NotMinimal: return "NotMinimal";
    }
    return "ToricError";
}

}  // namespace toric
