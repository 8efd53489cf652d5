#pragma once

#include "ect/complex.hpp"

#include <string>

namespace ect {

enum class MeshFormat { Off, Obj };

// Nearest rational with denominator `denom_bound` (identity when the value
// already has a denominator dividing the bound).
Rational quantize_rational(const Rational& q, const Integer& denom_bound);

// ASCII OFF (nv nf ne header) or the triangle subset of OBJ (v/f records).
// Coordinates are quantized to the denominator bound at ingestion; parse
// errors carry the offending line number.
SimplicialComplex parse_mesh_text(const std::string& text, MeshFormat format,
                                  const Integer& denom_bound = 1000000);

SimplicialComplex parse_mesh(const std::string& path, MeshFormat format,
                             const Integer& denom_bound = 1000000);

// Chooses the format from the file extension (.off / .obj).
MeshFormat mesh_format_from_path(const std::string& path);

}  // namespace ect
