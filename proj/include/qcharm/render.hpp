// Image rendering of f(D): concentric circles and radial spokes of the disk
// pushed through a mapping, drawn as polylines.  SVG output is one path per
// curve; PPM rasterizes black-on-white.

#pragma once

#include <string>

#include "qcharm/mapping.hpp"

namespace qcharm {

enum class ImageFormat { SVG, PPM };

struct RenderSpec {
    int rings = 12;
    int spokes = 24;
    double max_radius = 0.95;
    int samples_per_curve = 256;
    ImageFormat format = ImageFormat::SVG;
    std::string output_path;
    // raster dimensions (PPM only)
    int width = 800;
    int height = 800;
};

// Throws std::invalid_argument when rings/spokes < 1, samples_per_curve < 64,
// or max_radius is outside (0, 1).
void validate_render_spec(const RenderSpec& spec);

// Writes the image; throws std::runtime_error when the output is unwritable.
void render_mapping(const HarmonicMapping& f, const RenderSpec& spec);

}  // namespace qcharm
