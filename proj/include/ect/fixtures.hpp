#pragma once

#include "ect/functions.hpp"

#include <memory>
#include <random>

namespace ect {
namespace fixtures {

// Fan-triangulated unit disk: center plus `boundary_vertices` boundary
// points with cos/sin quantized to denominator 2^20. The boundary polygon
// is convex, so every directional sublevel set is contractible.
std::shared_ptr<SimplicialComplex> disk_mesh(int boundary_vertices = 64);

// Square annulus [-2,2]^2 minus the open square (-1,1)^2, 16 triangles.
std::shared_ptr<SimplicialComplex> annulus_mesh();

// Torus: boundary surface of (square annulus) x [0,1], 64 triangles.
std::shared_ptr<SimplicialComplex> torus_mesh();

// Solid cube [0,1]^3 Kuhn-triangulated into 6 tetrahedra.
std::shared_ptr<SimplicialComplex> ball3_mesh();

CubicalImage two_pixel_image(LowerCellConvention convention = LowerCellConvention::Upper);
CubicalImage checkerboard_image(std::size_t side = 8,
                                LowerCellConvention convention = LowerCellConvention::Upper);

// Five PL functions per mesh: three height-like linear ones plus two
// genuinely non-linear vertex samplings (radial and saddle).
std::vector<PLFunction> fixture_pl_functions(std::shared_ptr<const SimplicialComplex> mesh);

// Random face-closed subcomplex of a fixed nice triangulation (2D or 3D
// grid), guaranteeing a properly embedded complex with <= 50 simplices.
std::shared_ptr<SimplicialComplex> random_subcomplex(std::mt19937_64& rng);

// Random cell-wise constant function with small rational values of
// denominator <= max_denominator.
CellConstFunction random_cell_function(std::mt19937_64& rng,
                                       std::shared_ptr<const Complex> complex,
                                       unsigned max_denominator = 4);

}  // namespace fixtures
}  // namespace ect
