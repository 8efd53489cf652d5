#pragma once

#include "ect/functions.hpp"

#include <string>

namespace ect {

enum class ImageFormat { PgmP2, PgmP5, Csv };

// PGM values are scaled to value/maxval; CSV entries are parsed as exact
// rationals. Shapes are row-major (width is the fast axis).
ImageGrid parse_image_text(const std::string& data, ImageFormat format);

ImageGrid parse_image(const std::string& path, ImageFormat format);

// Chooses the format from the extension (.pgm sniffs P2 vs P5, .csv).
ImageFormat image_format_from_path(const std::string& path, const std::string& data);

}  // namespace ect
