#include "qcharm/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qcharm {

namespace {

using Curve = std::vector<Complex>;

std::vector<Curve> trace_curves(const HarmonicMapping& f, const RenderSpec& spec) {
    std::vector<Curve> curves;
    curves.reserve(static_cast<size_t>(spec.rings + spec.spokes));
    const int samples = spec.samples_per_curve;
    for (int i = 1; i <= spec.rings; ++i) {
        const double rho = spec.max_radius * i / spec.rings;
        Curve c(static_cast<size_t>(samples) + 1);
        for (int s = 0; s <= samples; ++s) {
            const double theta = 2.0 * std::numbers::pi * s / samples;
            c[static_cast<size_t>(s)] = eval_mapping(f, std::polar(rho, theta));
        }
        curves.push_back(std::move(c));
    }
    for (int j = 0; j < spec.spokes; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / spec.spokes;
        Curve c(static_cast<size_t>(samples) + 1);
        for (int s = 0; s <= samples; ++s) {
            const double rho = spec.max_radius * s / samples;
            c[static_cast<size_t>(s)] = eval_mapping(f, std::polar(rho, theta));
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

struct Box {
    double x0, y0, x1, y1;
};

Box bounding_box(const std::vector<Curve>& curves) {
    Box b{1e300, 1e300, -1e300, -1e300};
    for (const Curve& c : curves)
        for (const Complex& p : c) {
            b.x0 = std::min(b.x0, p.real());
            b.y0 = std::min(b.y0, p.imag());
            b.x1 = std::max(b.x1, p.real());
            b.y1 = std::max(b.y1, p.imag());
        }
    const double pad = 0.03 * std::max(b.x1 - b.x0, b.y1 - b.y0);
    b.x0 -= pad;
    b.y0 -= pad;
    b.x1 += pad;
    b.y1 += pad;
    return b;
}

void write_svg(const std::vector<Curve>& curves, const RenderSpec& spec) {
    std::ofstream out(spec.output_path);
    if (!out) throw std::runtime_error("render: cannot open '" + spec.output_path + "'");
    const Box b = bounding_box(curves);
    const double w = b.x1 - b.x0, h = b.y1 - b.y0;
    const double stroke = 0.003 * std::max(w, h);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << b.x0 << ' ' << -b.y1 << ' '
        << w << ' ' << h << "\">\n";
    out << "<rect x=\"" << b.x0 << "\" y=\"" << -b.y1 << "\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\"/>\n";
    for (const Curve& c : curves) {
        out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\" d=\"";
        // SVG's y axis points down; flip to keep the mathematical orientation.
        for (size_t i = 0; i < c.size(); ++i)
            out << (i == 0 ? 'M' : 'L') << c[i].real() << ' ' << -c[i].imag();
        out << "\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("render: write to '" + spec.output_path + "' failed");
}

void write_ppm(const std::vector<Curve>& curves, const RenderSpec& spec) {
    const Box b = bounding_box(curves);
    const int W = spec.width, H = spec.height;
    std::vector<unsigned char> img(static_cast<size_t>(W) * H, 255);
    const auto to_px = [&](const Complex& p, int& x, int& y) {
        x = static_cast<int>(std::lround((p.real() - b.x0) / (b.x1 - b.x0) * (W - 1)));
        y = static_cast<int>(std::lround((b.y1 - p.imag()) / (b.y1 - b.y0) * (H - 1)));
    };
    const auto plot = [&](int x, int y) {
        if (x >= 0 && x < W && y >= 0 && y < H)
            img[static_cast<size_t>(y) * W + x] = 0;
    };
    for (const Curve& c : curves) {
        for (size_t i = 0; i + 1 < c.size(); ++i) {
            int x0, y0, x1, y1;
            to_px(c[i], x0, y0);
            to_px(c[i + 1], x1, y1);
            const int steps = std::max({std::abs(x1 - x0), std::abs(y1 - y0), 1});
            for (int s = 0; s <= steps; ++s) {
                const double t = static_cast<double>(s) / steps;
                plot(static_cast<int>(std::lround(x0 + t * (x1 - x0))),
                     static_cast<int>(std::lround(y0 + t * (y1 - y0))));
            }
        }
    }
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("render: cannot open '" + spec.output_path + "'");
    out << "P6\n" << W << ' ' << H << "\n255\n";
    for (unsigned char v : img) {
        const char rgb[3] = {static_cast<char>(v), static_cast<char>(v), static_cast<char>(v)};
        out.write(rgb, 3);
    }
    if (!out) throw std::runtime_error("render: write to '" + spec.output_path + "' failed");
}

}  // namespace

void validate_render_spec(const RenderSpec& spec) {
    if (spec.rings < 1 || spec.spokes < 1)
        throw std::invalid_argument("render: rings and spokes must be >= 1");
    if (spec.samples_per_curve < 64)
        throw std::invalid_argument("render: samples_per_curve must be >= 64");
    if (!(spec.max_radius > 0.0 && spec.max_radius < 1.0))
        throw std::invalid_argument("render: max_radius must lie in (0, 1)");
    if (spec.format == ImageFormat::PPM && (spec.width < 2 || spec.height < 2))
        throw std::invalid_argument("render: raster dimensions must be >= 2");
    if (spec.output_path.empty()) throw std::invalid_argument("render: output path is empty");
}

void render_mapping(const HarmonicMapping& f, const RenderSpec& spec) {
    validate_render_spec(spec);
    const std::vector<Curve> curves = trace_curves(f, spec);
    if (spec.format == ImageFormat::SVG)
        write_svg(curves, spec);
    else
        write_ppm(curves, spec);
}

}  // namespace qcharm
