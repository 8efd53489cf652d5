#pragma once

#include "ect/curves.hpp"
#include "ect/functions.hpp"

#include <cstdint>
#include <vector>

namespace ect {

// Dense bit matrix over GF(2) with row-major 64-bit packing.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] |= (1ull << (c % 64)); }
    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1ull;
    }

    // Rank by Gaussian elimination (destroys a working copy, not *this).
    std::size_t rank() const;

private:
    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> words_;
};

using BettiVector = std::vector<std::size_t>;  // beta_0 ... beta_d

// Boundary matrix d_k: columns are k-simplices, rows their (k-1)-faces.
BitMatrix boundary_matrix(const SimplicialComplex& complex, int k);

// GF(2) Betti numbers beta_0..beta_dim of a face-closed complex.
BettiVector betti_numbers(const SimplicialComplex& complex);

// Full subcomplex on the vertices with value <= t (values: one per vertex,
// heights x.v or a PL function). Homotopy-equivalent to the clipped
// sublevel set; the chi cross-check in the audits certifies this per t.
SimplicialComplex sublevel_subcomplex(const SimplicialComplex& complex,
                                      const std::vector<Rational>& vertex_values,
                                      const Rational& t);

std::vector<Rational> vertex_heights(const SimplicialComplex& complex, const Direction& v);

// t -> beta_k of the sublevel subcomplex; right-continuous step curve with
// breakpoints among the vertex heights.
StepCurve betti_curve(const SimplicialComplex& complex, const Direction& v, int k);

// Kuhn subdivision of a cubical complex into a simplicial complex (shared
// box faces triangulate consistently).
SimplicialComplex triangulate(const CubicalComplex& complex);

}  // namespace ect
