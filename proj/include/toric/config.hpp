#pragma once

#include "toric/errors.hpp"
#include "toric/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Exponent vector u in N^m of the monomial x^u.
using ExponentVector = IntVector;
/// A-degree b = u_1 a_1 + ... + u_m a_m in Z^n.
using ADegree = IntVector;

/// The configuration A = {a_1, ..., a_m} in Z^n together with a rational
/// functional w that is strictly positive on every a_i.
///
/// Instances are only produced by load_configuration, so the positivity of
/// the grading is an invariant. Per-variable integer weights are derived from
/// w by clearing denominators; they induce the same order on monomials as
/// w-degree and are what every enumeration bound uses.
class VectorConfiguration {
public:
    std::size_t size() const { return vectors_.size(); }        // m
    std::size_t dimension() const { return vectors_.front().size(); }  // n

    const std::vector<IntVector>& vectors() const { return vectors_; }
    const IntVector& vector(std::size_t i) const { return vectors_[i]; }
    const std::vector<Rational>& grading() const { return grading_; }
    const std::string& name() const { return name_; }

    /// Positive integer weight of x_i, proportional to w . a_i.
    const IntVector& weights() const { return weights_; }

    /// Scaled w-degree of a monomial: sum of u_i * weights()[i].
    Integer weight(const ExponentVector& u) const;

    /// Scaled w-degree of a degree vector; agrees with weight(u) when b = Au.
    Integer degree_weight(const ADegree& b) const;

    Rational w_degree(const ADegree& b) const;

private:
    friend VectorConfiguration load_configuration(std::vector<IntVector>,
                                                  std::optional<std::vector<Rational>>,
                                                  std::string);

    std::vector<IntVector> vectors_;
    std::vector<Rational> grading_;
    IntVector scaled_grading_;  // w times the lcm of its denominators
    IntVector weights_;
    std::string name_;
};

VectorConfiguration load_configuration(std::vector<IntVector> raw,
                                       std::optional<std::vector<Rational>> grading = std::nullopt,
                                       std::string name = {});

/// Exact rational w with w . a_i >= 1 for every vector, by Fourier-Motzkin
/// elimination with back substitution. nullopt when no such w exists.
std::optional<std::vector<Rational>> find_positive_grading(const std::vector<IntVector>& vectors);

ADegree a_degree(const ExponentVector& u, const VectorConfiguration& config);

/// Canonical monomial order: larger scaled w-degree first, then larger total
/// degree, then lexicographically larger exponent vector (x_1 > x_2 > ...).
/// precedes(u, v) is true when u is listed before v.
bool precedes(const VectorConfiguration& config, const ExponentVector& u, const ExponentVector& v);

struct CanonicalOrder {
    const VectorConfiguration* config;
    bool operator()(const ExponentVector& u, const ExponentVector& v) const {
        return precedes(*config, u, v);
    }
};

/// Degrees are reported by scaled w-degree, then lexicographically.
bool degree_less_for_report(const VectorConfiguration& config, const ADegree& a, const ADegree& b);

/// x^lhs - x^rhs with lhs preceding rhs in the canonical order.
struct Binomial {
    ExponentVector lhs;
    ExponentVector rhs;

    friend bool operator==(const Binomial& a, const Binomial& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator<(const Binomial& a, const Binomial& b) {
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    }
};

/// Throws DegreeMismatch / ZeroBinomial.
Binomial normalize_binomial(const ExponentVector& u, const ExponentVector& v,
                            const VectorConfiguration& config);

ADegree degree_of(const Binomial& b, const VectorConfiguration& config);

/// Checks length and nonnegativity of u against the configuration.
void validate_exponent(const ExponentVector& u, const VectorConfiguration& config);

bool divides(const ExponentVector& a, const ExponentVector& b);
Integer total_degree(const ExponentVector& u);

std::string format_monomial(const ExponentVector& u);
std::string format_binomial(const Binomial& b);
std::string format_degree(const ADegree& b);

}  // namespace toric
