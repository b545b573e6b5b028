#pragma once

#include "toric/toric_ideal.hpp"

#include <optional>
#include <vector>

namespace toric {

/// A Betti A-degree b: G(b) is disconnected.
struct BettiRecord {
    ADegree degree;
    std::size_t components = 0;       // n_b
    std::vector<std::size_t> sizes;   // t_i(b), descending
    std::size_t beta = 0;             // beta_{0,b} = n_b - 1
    bool is_minimal_degree = false;   // every component is a singleton
};

struct NuFactor {
    ADegree degree;
    Integer factor;
};

struct NuResult {
    Integer value = 1;
    std::vector<NuFactor> factors;
};

/// Betti degrees among the degrees of the saturated generating set, in
/// report order. With `paranoid`, additionally checks that G(b) is connected
/// at every other degree up to the largest candidate weight and throws
/// InternalInconsistency otherwise.
std::vector<BettiRecord> betti_table(const ToricIdeal& ideal, bool paranoid = false);

std::vector<ADegree> minimal_binomial_degrees(const ToricIdeal& ideal);

/// t_1 ... t_n (t_1 + ... + t_n)^(n - 2) for one Betti degree.
Integer nu_factor(const std::vector<std::size_t>& sizes);

/// Number of minimal binomial generating sets: the product of nu_factor over
/// the Betti degrees.
NuResult nu(const ToricIdeal& ideal);

/// G(deg B) consists of exactly the two singletons {lhs} and {rhs}.
/// Throws DegreeMismatch if B is not homogeneous.
bool is_indispensable_binomial(const Binomial& b, const ToricIdeal& ideal);

/// Every Betti degree is minimal with beta = 1.
bool generated_by_indispensables(const ToricIdeal& ideal);

/// prod (beta + 1)^(beta - 1) when every Betti degree is minimal.
std::optional<Integer> corollary_product_check(const ToricIdeal& ideal);

/// Generated by indispensable binomials, each of full support.
bool is_generic(const ToricIdeal& ideal);

}  // namespace toric
