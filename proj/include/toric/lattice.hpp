#pragma once

#include "toric/config.hpp"

#include <vector>

namespace toric {

/// Lattice basis of ker_Z(A) = { z in Z^m : z_1 a_1 + ... + z_m a_m = 0 },
/// stored in row Hermite normal form.
struct LatticeBasis {
    std::vector<IntVector> basis;
};

/// Row Hermite normal form of the lattice spanned by `rows`: echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

LatticeBasis kernel_basis(const VectorConfiguration& config);

/// Integer coefficients c with sum c_i basis_i == z, if z lies in the lattice.
/// Expects the basis in Hermite normal form.
std::optional<IntVector> lattice_coordinates(const LatticeBasis& lattice, const IntVector& z);

}  // namespace toric
