#pragma once

#include <optional>
#include <string>
#include <vector>

namespace helionics {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotConfig {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool x_log = false;
    bool y_log = false;
    int width = 720;
    int height = 520;
};

/// Inset viewport in fractions of the main plot area.
struct InsetConfig {
    double rx = 0.55, ry = 0.10, rw = 0.40, rh = 0.42;
    std::vector<PlotSeries> series;
    std::string x_label;
    std::string y_label;
};

/// Self-contained SVG 1.1 document: one polyline plus markers per series,
/// linear or log axes with tick labels, optional inset viewport. Output is
/// byte-deterministic for identical inputs (fixed palette, fixed precision,
/// no timestamps).
std::string render_svg(const std::vector<PlotSeries>& series,
                       const PlotConfig& cfg,
                       const std::optional<InsetConfig>& inset = std::nullopt);

} // namespace helionics
