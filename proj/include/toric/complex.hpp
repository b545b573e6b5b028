#pragma once

#include "toric/toric_ideal.hpp"

#include <vector>

namespace toric {

struct Facet {
    std::vector<std::size_t> members;  // indices into IndispensableComplex::vertices
    ADegree degree;

    std::size_t dimension() const { return members.size() - 1; }
};

/// Simplicial complex on T_A whose faces are the equal-degree subsets. Only
/// facets are stored, one per degree class, in report order.
struct IndispensableComplex {
    std::vector<ExponentVector> vertices;  // canonical order
    std::vector<ADegree> vertex_degrees;
    std::vector<Facet> facets;
};

/// T_A: the minimal monomial generators of M_A, taken from both monomials of
/// every saturated generator. Divisibility pruning is pairwise.
std::vector<ExponentVector> indispensable_monomials(const ToricIdeal& ideal);

IndispensableComplex build_complex(const ToricIdeal& ideal);

/// Binomials of the 1-dimensional facets whose degree is a minimal binomial
/// A-degree.
std::vector<Binomial> indispensable_binomials(const ToricIdeal& ideal);

/// The complex is a single 1-simplex.
bool is_principal(const ToricIdeal& ideal);

/// Every facet has exactly two vertices. Necessary for generation by
/// indispensable binomials, not sufficient.
bool check_necessary_condition(const ToricIdeal& ideal);

/// Minimality of a binomial degree b decided from the complex alone: no
/// vertex has degree strictly below b in the semigroup order.
bool is_minimal_degree_by_vertices(const ADegree& b, const IndispensableComplex& complex,
                                   const VectorConfiguration& config);

}  // namespace toric
