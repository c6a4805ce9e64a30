#include "euclidzi/render.hpp"

#include <cstdint>
#include <sstream>

#include "euclidzi/growth.hpp"

namespace euclidzi {

namespace {

constexpr int kCell = 16;
constexpr int kMargin = 16;

std::string gray(int value) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string s = "#000000";
    s[1] = s[3] = s[5] = kHex[(value >> 4) & 15];
    s[2] = s[4] = s[6] = kHex[value & 15];
    return s;
}

// Grayscale ramp from light to dark; unlayered points stay mid-gray.
std::string layer_fill(int layer, int layer_count) {
    if (layer < 0) return gray(0x8c);
    if (layer_count <= 1) return gray(0xd8);
    return gray(0xd8 - layer * (0xd8 - 0x30) / (layer_count - 1));
}

}  // namespace

std::string render_region_svg(RegionSpec spec, std::optional<DecompScheme> scheme) {
    const std::vector<GaussianInt> points = enumerate_region(spec);
    const auto bound = static_cast<std::int64_t>(w(spec.n) - 2);
    const std::int64_t side = 2 * bound + 1;
    const std::int64_t canvas = side * kCell + 2 * kMargin;

    int layer_count = 1;
    if (scheme && spec.kind == RegionKind::B)
        layer_count = static_cast<int>(layer_decomposition(spec.n, *scheme).size());

    const auto cell_x = [&](std::int64_t re) { return kMargin + (re + bound) * kCell; };
    const auto cell_y = [&](std::int64_t im) { return kMargin + (bound - im) * kCell; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas
        << "\" height=\"" << canvas << "\" viewBox=\"0 0 " << canvas << ' ' << canvas
        << "\">\n";
    svg << "<rect width=\"" << canvas << "\" height=\"" << canvas
        << "\" fill=\"#ffffff\"/>\n";

    // Unlabeled axes through the origin cell's center.
    const std::int64_t axis_x = cell_x(0) + kCell / 2;
    const std::int64_t axis_y = cell_y(0) + kCell / 2;
    svg << "<line x1=\"0\" y1=\"" << axis_y << "\" x2=\"" << canvas << "\" y2=\"" << axis_y
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << axis_x << "\" y1=\"0\" x2=\"" << axis_x << "\" y2=\"" << canvas
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    const bool layered = scheme.has_value() && spec.kind == RegionKind::B;
    for (const GaussianInt g : points) {
        // The decomposition covers the nonzero part only; in a layered view
        // the origin cell is left to its marker ring.
        if (layered && g.is_zero()) continue;
        int layer = -1;
        if (layered) layer = decomposition_layer(g, spec.n, *scheme);
        svg << "<rect x=\"" << cell_x(g.re) + 1 << "\" y=\"" << cell_y(g.im) + 1
            << "\" width=\"" << kCell - 2 << "\" height=\"" << kCell - 2 << "\" fill=\""
            << layer_fill(layer, layer_count) << "\"/>\n";
    }

    svg << "<circle cx=\"" << axis_x << "\" cy=\"" << axis_y
        << "\" r=\"5\" fill=\"none\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace euclidzi
