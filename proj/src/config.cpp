#include "toric/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// c . w >= rhs
struct Constraint {
    std::vector<Rational> coeffs;
    Rational rhs;

    bool operator<(const Constraint& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return rhs < o.rhs;
    }
};

// Scale so that the first nonzero coefficient has absolute value 1; keeps the
// direction of the inequality.
Constraint normalized(Constraint c) {
    for (const auto& x : c.coeffs) {
        if (x != 0) {
            Rational s = abs(x);
            for (auto& y : c.coeffs) y /= s;
            c.rhs /= s;
            break;
        }
    }
    return c;
}

Integer floor_of(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n % d != 0 && n < 0) f -= 1;
    return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

// Value of smallest magnitude in [lo, hi], preferring integers.
Rational pick_value(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    Integer a = lo ? ceil_of(*lo) : Integer(0);
    Integer b = hi ? floor_of(*hi) : Integer(0);
    if (!lo && !hi) return 0;
    if (!lo) return Rational(std::min(b, Integer(0)));
    if (!hi) return Rational(std::max(a, Integer(0)));
    if (a <= b) {
        if (a <= 0 && 0 <= b) return 0;
        return Rational(a > 0 ? a : b);
    }
    return *lo;
}

}  // namespace

std::optional<std::vector<Rational>> find_positive_grading(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) return std::nullopt;
    const std::size_t n = vectors.front().size();

    // systems[k] holds the constraints on w_0..w_{k-1} after eliminating the rest.
    std::vector<std::set<Constraint>> systems(n + 1);
    for (const auto& a : vectors) {
        Constraint c{std::vector<Rational>(a.begin(), a.end()), 1};
        systems[n].insert(normalized(c));
    }
    for (std::size_t k = n; k-- > 0;) {
        std::vector<const Constraint*> lower, upper;
        auto& next = systems[k];
        for (const auto& c : systems[k + 1]) {
            if (c.coeffs[k] > 0) lower.push_back(&c);
            else if (c.coeffs[k] < 0) upper.push_back(&c);
            else next.insert(c);
        }
        for (const auto* p : lower) {
            for (const auto* q : upper) {
                Rational sp = p->coeffs[k], sq = -q->coeffs[k];
                Constraint c{std::vector<Rational>(n), p->rhs * sq + q->rhs * sp};
                for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = p->coeffs[j] * sq + q->coeffs[j] * sp;
                c.coeffs[k] = 0;
                next.insert(normalized(std::move(c)));
            }
        }
    }
    for (const auto& c : systems[0])
        if (c.rhs > 0) return std::nullopt;

    std::vector<Rational> w(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto& c : systems[k + 1]) {
            if (c.coeffs[k] == 0) continue;
            Rational rest = c.rhs;
            for (std::size_t j = 0; j < k; ++j) rest -= c.coeffs[j] * w[j];
            Rational bound = rest / c.coeffs[k];
            if (c.coeffs[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        w[k] = pick_value(lo, hi);
    }
    return w;
}

VectorConfiguration load_configuration(std::vector<IntVector> raw,
                                       std::optional<std::vector<Rational>> grading,
                                       std::string name) {
    if (raw.empty()) throw MalformedInput("configuration has no vectors");
    const std::size_t n = raw.front().size();
    if (n == 0) throw MalformedInput("configuration vectors have length 0");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != n)
            throw MalformedInput("vector " + std::to_string(i + 1) + " has length " +
                                 std::to_string(raw[i].size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (std::all_of(raw[i].begin(), raw[i].end(), [](const Integer& x) { return x == 0; }))
            throw NotPointed("vector " + std::to_string(i + 1) + " is zero");
    }

    if (grading) {
        if (grading->size() != n)
            throw MalformedInput("grading has length " + std::to_string(grading->size()) +
                                 ", expected " + std::to_string(n));
        for (std::size_t i = 0; i < raw.size(); ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) s += (*grading)[j] * Rational(raw[i][j]);
            if (s <= 0)
                throw MalformedInput("supplied grading is not positive on vector " + std::to_string(i + 1));
        }
    } else {
        grading = find_positive_grading(raw);
        if (!grading) throw NotPointed("no strictly positive grading exists; the semigroup is not pointed");
    }

    VectorConfiguration config;
    config.vectors_ = std::move(raw);
    config.grading_ = std::move(*grading);
    config.name_ = std::move(name);

    Integer lcm = 1;
    for (const auto& q : config.grading_) lcm = boost::multiprecision::lcm(lcm, denominator(q));
    config.scaled_grading_.reserve(n);
    for (const auto& q : config.grading_) config.scaled_grading_.push_back(numerator(Rational(q * lcm)));
    config.weights_.reserve(config.vectors_.size());
    for (const auto& a : config.vectors_) config.weights_.push_back(dot(config.scaled_grading_, a));
    return config;
}

Integer VectorConfiguration::weight(const ExponentVector& u) const { return dot(u, weights_); }

Integer VectorConfiguration::degree_weight(const ADegree& b) const { return dot(b, scaled_grading_); }

Rational VectorConfiguration::w_degree(const ADegree& b) const {
    Rational s = 0;
    for (std::size_t j = 0; j < b.size(); ++j) s += grading_[j] * Rational(b[j]);
    return s;
}

void validate_exponent(const ExponentVector& u, const VectorConfiguration& config) {
    if (u.size() != config.size())
        throw MalformedInput("exponent vector has length " + std::to_string(u.size()) + ", expected " +
                             std::to_string(config.size()));
    for (const auto& x : u)
        if (x < 0) throw MalformedInput("exponent vector has a negative entry");
}

ADegree a_degree(const ExponentVector& u, const VectorConfiguration& config) {
    validate_exponent(u, config);
    ADegree b(config.dimension(), Integer(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        const auto& a = config.vector(i);
        for (std::size_t j = 0; j < b.size(); ++j) b[j] += u[i] * a[j];
    }
    return b;
}

Integer total_degree(const ExponentVector& u) {
    Integer s = 0;
    for (const auto& x : u) s += x;
    return s;
}

bool precedes(const VectorConfiguration& config, const ExponentVector& u, const ExponentVector& v) {
    Integer wu = config.weight(u), wv = config.weight(v);
    if (wu != wv) return wu > wv;
    Integer du = total_degree(u), dv = total_degree(v);
    if (du != dv) return du > dv;
    return v < u;
}

bool degree_less_for_report(const VectorConfiguration& config, const ADegree& a, const ADegree& b) {
    Integer wa = config.degree_weight(a), wb = config.degree_weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

Binomial normalize_binomial(const ExponentVector& u, const ExponentVector& v,
                            const VectorConfiguration& config) {
    if (a_degree(u, config) != a_degree(v, config))
        throw DegreeMismatch(format_monomial(u) + " and " + format_monomial(v) + " have different A-degrees");
    if (u == v) throw ZeroBinomial("binomial " + format_monomial(u) + " - " + format_monomial(v) + " is zero");
    if (precedes(config, u, v)) return Binomial{u, v};
    return Binomial{v, u};
}

ADegree degree_of(const Binomial& b, const VectorConfiguration& config) { return a_degree(b.lhs, config); }

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string format_monomial(const ExponentVector& u) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << (i + 1);
        if (u[i] != 1) out << '^' << u[i];
    }
    if (first) return "1";
    return out.str();
}

std::string format_binomial(const Binomial& b) { return format_monomial(b.lhs) + " - " + format_monomial(b.rhs); }

std::string format_degree(const ADegree& b) {
    std::string s;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (j) s += ',';
        s += b[j].str();
    }
    return s;
}

}  // namespace toric
