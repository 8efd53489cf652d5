#pragma once

#include "ect/geometry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ect {

// One open cell of a complex. Open cells are pairwise disjoint and their
// union is the shape; `vertices` lists the closure vertices (sorted ids).
struct Cell {
    int dim = 0;
    std::vector<std::size_t> vertices;
};

// Common storage for simplicial and cubical complexes: a vertex table plus
// the open-cell partition. Immutable after construction.
class Complex {
public:
    virtual ~Complex() = default;

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t ambient_dim() const { return vertices_.empty() ? 0 : vertices_.front().size(); }
    int dim() const;
    bool empty() const { return cells_.empty(); }

protected:
    std::vector<Point> vertices_;
    std::vector<Cell> cells_;
};

class SimplicialComplex : public Complex {
public:
    // Builds a face-closed complex from maximal (or any) simplices given as
    // vertex-index sets. Cell ids are deterministic: sorted by (dim, vertex
    // ids). Throws on invalid indices or an empty simplex set.
    static SimplicialComplex build(std::vector<Point> vertices,
                                   const std::vector<std::vector<std::size_t>>& simplices);

    std::optional<std::size_t> find_cell(std::vector<std::size_t> sorted_vertex_ids) const;

    // Duplicate vertex coordinates are allowed but flagged.
    bool has_duplicate_coordinates() const { return has_duplicate_coordinates_; }

private:
    std::map<std::vector<std::size_t>, std::size_t> index_;
    bool has_duplicate_coordinates_ = false;
};

// Axis-aligned cubical grid complex. Cells are all open box faces of the
// grid of unit boxes [i, i+1] x ... scaled by `spacing` from `origin`.
class CubicalComplex : public Complex {
public:
    CubicalComplex(Point origin, std::vector<Rational> spacing, std::vector<std::size_t> extents);

    const std::vector<std::size_t>& extents() const { return extents_; }

    // Cell id of the top-dimensional open box at grid index (row-major over
    // extents).
    std::size_t top_cell_id(std::size_t flat_box_index) const { return top_cell_ids_[flat_box_index]; }
    std::size_t box_count() const { return top_cell_ids_.size(); }

    // Flattened indices of the top boxes whose closure contains this cell.
    std::vector<std::size_t> incident_boxes(std::size_t cell_id) const;

    // Vertex id of the grid point at per-axis indices (0..extent, row-major
    // over extents + 1; matches the vertex table order).
    std::size_t grid_vertex_id(const std::vector<std::size_t>& idx) const;

private:
    // Per-axis (lower grid index, span in {0,1}); dim = number of spans.
    std::vector<std::vector<std::pair<std::size_t, int>>> keys_;
    Point origin_;
    std::vector<Rational> spacing_;
    std::vector<std::size_t> extents_;
    std::vector<std::size_t> top_cell_ids_;
};

}  // namespace ect
