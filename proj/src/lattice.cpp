#include "toric/lattice.hpp"

#include <utility>

namespace toric {

namespace {

struct Bezout {
    Integer g, s, t;  // s*a + t*b == g >= 0
};

Bezout extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

// Unimodular row operations bringing columns [0, ncols) of `rows` into echelon
// form. Returns the number of pivot rows; rows below that are zero on those
// columns.
std::size_t echelonize(std::vector<IntVector>& rows, std::size_t ncols, bool reduce_above) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
        std::size_t first = pivot_row;
        while (first < rows.size() && rows[first][c] == 0) ++first;
        if (first == rows.size()) continue;
        std::swap(rows[pivot_row], rows[first]);
        auto& p = rows[pivot_row];
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            auto& q = rows[r];
            if (q[c] == 0) continue;
            Integer a = p[c], b = q[c];
            Bezout e = extended_gcd(a, b);
            Integer qa = a / e.g, qb = b / e.g;
            for (std::size_t j = 0; j < p.size(); ++j) {
                Integer pj = p[j], rj = q[j];
                p[j] = e.s * pj + e.t * rj;
                q[j] = qa * rj - qb * pj;
            }
        }
        if (p[c] < 0)
            for (auto& x : p) x = -x;
        if (reduce_above) {
            for (std::size_t r = 0; r < pivot_row; ++r) {
                auto& q = rows[r];
                Integer f = q[c] / p[c];
                if (q[c] - f * p[c] < 0) f -= 1;
                if (f == 0) continue;
                for (std::size_t j = 0; j < q.size(); ++j) q[j] -= f * p[j];
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
    if (rows.empty()) return rows;
    std::size_t rank = echelonize(rows, rows.front().size(), true);
    rows.resize(rank);
    return rows;
}

LatticeBasis kernel_basis(const VectorConfiguration& config) {
    const std::size_t m = config.size(), n = config.dimension();
    // [a_i | e_i]; row operations that zero the left block expose kernel vectors
    // in the right block.
    std::vector<IntVector> rows(m, IntVector(n + m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = config.vector(i)[j];
        rows[i][n + i] = 1;
    }
    std::size_t rank = echelonize(rows, n, false);
    std::vector<IntVector> kernel;
    for (std::size_t r = rank; r < m; ++r) kernel.emplace_back(rows[r].begin() + n, rows[r].end());
    return LatticeBasis{hermite_normal_form(std::move(kernel))};
}

std::optional<IntVector> lattice_coordinates(const LatticeBasis& lattice, const IntVector& z) {
    IntVector rest = z;
    IntVector coords(lattice.basis.size(), Integer(0));
    std::size_t col = 0;
    for (std::size_t r = 0; r < lattice.basis.size(); ++r) {
        const auto& row = lattice.basis[r];
        while (col < row.size() && row[col] == 0) {
            if (rest[col] != 0) return std::nullopt;
            ++col;
        }
        if (rest[col] % row[col] != 0) return std::nullopt;
        coords[r] = rest[col] / row[col];
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= coords[r] * row[j];
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

}  // namespace toric
