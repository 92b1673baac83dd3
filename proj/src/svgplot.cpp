#include "helionics/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace helionics {

namespace {

const char* kStroke[] = {"#000000", "#c0392b", "#2a6fb0", "#2e8b57",
                         "#8e44ad", "#b8860b"};
const char* kDash[] = {"", "7,3", "2,3", "8,3,2,3", "4,2", "1,2"};

std::string f2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

struct Range {
    double lo = 0.0, hi = 1.0;
};

Range data_range(const std::vector<PlotSeries>& series, bool take_x,
                 bool log_axis) {
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& s : series) {
        const auto& v = take_x ? s.x : s.y;
        for (double val : v) {
            if (!std::isfinite(val)) continue;
            if (log_axis && !(val > 0.0)) continue;
            lo = std::min(lo, val);
            hi = std::max(hi, val);
        }
    }
    if (!(lo <= hi)) return {0.0, 1.0};
    if (lo == hi) {
        const double pad = std::abs(lo) > 0 ? 0.1 * std::abs(lo) : 1.0;
        return {lo - pad, hi + pad};
    }
    if (!log_axis) {
        const double pad = 0.05 * (hi - lo);
        return {lo - pad, hi + pad};
    }
    return {lo, hi};
}

std::vector<double> linear_ticks(double lo, double hi) {
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    if (norm < 1.5)
        step = 1.0;
    else if (norm < 3.5)
        step = 2.0;
    else if (norm < 7.5)
        step = 5.0;
    step *= mag;
    std::vector<double> t;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step;
         v += step) {
        t.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    }
    return t;
}

std::vector<double> log_ticks(double lo, double hi) {
    std::vector<double> t;
    const int e0 = static_cast<int>(std::floor(std::log10(lo)));
    const int e1 = static_cast<int>(std::ceil(std::log10(hi)));
    for (int e = e0; e <= e1; ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * 0.999 && v <= hi * 1.001) t.push_back(v);
    }
    if (t.empty()) t = {lo, hi};
    return t;
}

// One framed set of axes + series, drawn into os at the given pixel box.
void draw_panel(std::ostringstream& os, const std::vector<PlotSeries>& series,
                double px, double py, double pw, double ph, bool x_log,
                bool y_log, const std::string& x_label,
                const std::string& y_label, double font, bool with_markers) {
    const Range xr = data_range(series, true, x_log);
    const Range yr = data_range(series, false, y_log);
    auto tx = [&](double v) {
        const double a = x_log ? std::log10(v) : v;
        const double lo = x_log ? std::log10(xr.lo) : xr.lo;
        const double hi = x_log ? std::log10(xr.hi) : xr.hi;
        return px + (a - lo) / (hi - lo) * pw;
    };
    auto ty = [&](double v) {
        const double a = y_log ? std::log10(v) : v;
        const double lo = y_log ? std::log10(yr.lo) : yr.lo;
        const double hi = y_log ? std::log10(yr.hi) : yr.hi;
        return py + ph - (a - lo) / (hi - lo) * ph;
    };

    os << "<rect x=\"" << f2(px) << "\" y=\"" << f2(py) << "\" width=\""
       << f2(pw) << "\" height=\"" << f2(ph)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    const auto xticks = x_log ? log_ticks(xr.lo, xr.hi)
                              : linear_ticks(xr.lo, xr.hi);
    for (double v : xticks) {
        const double x = tx(v);
        os << "<line x1=\"" << f2(x) << "\" y1=\"" << f2(py + ph)
           << "\" x2=\"" << f2(x) << "\" y2=\"" << f2(py + ph - 5)
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << f2(x) << "\" y=\"" << f2(py + ph + font + 4)
           << "\" font-size=\"" << f2(font)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\">"
           << tick_label(v) << "</text>\n";
    }
    const auto yticks = y_log ? log_ticks(yr.lo, yr.hi)
                              : linear_ticks(yr.lo, yr.hi);
    for (double v : yticks) {
        const double y = ty(v);
        os << "<line x1=\"" << f2(px) << "\" y1=\"" << f2(y) << "\" x2=\""
           << f2(px + 5) << "\" y2=\"" << f2(y)
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << f2(px - 4) << "\" y=\"" << f2(y + 0.35 * font)
           << "\" font-size=\"" << f2(font)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\">"
           << tick_label(v) << "</text>\n";
    }
    if (!x_label.empty())
        os << "<text x=\"" << f2(px + 0.5 * pw) << "\" y=\""
           << f2(py + ph + 2.4 * font + 6) << "\" font-size=\"" << f2(font)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\">"
           << xml_escape(x_label) << "</text>\n";
    if (!y_label.empty())
        os << "<text x=\"" << f2(px - 3.2 * font) << "\" y=\""
           << f2(py + 0.5 * ph) << "\" font-size=\"" << f2(font)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
           << " transform=\"rotate(-90 " << f2(px - 3.2 * font) << " "
           << f2(py + 0.5 * ph) << ")\">" << xml_escape(y_label)
           << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* stroke = kStroke[si % 6];
        const char* dash = kDash[si % 6];
        os << "<polyline fill=\"none\" stroke=\"" << stroke
           << "\" stroke-width=\"1.5\"";
        if (dash[0]) os << " stroke-dasharray=\"" << dash << "\"";
        os << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if ((x_log && !(s.x[i] > 0)) || (y_log && !(s.y[i] > 0))) continue;
            os << f2(tx(s.x[i])) << ',' << f2(ty(s.y[i])) << ' ';
        }
        os << "\"/>\n";
        if (with_markers && s.x.size() <= 64) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                if ((x_log && !(s.x[i] > 0)) || (y_log && !(s.y[i] > 0)))
                    continue;
                os << "<circle cx=\"" << f2(tx(s.x[i])) << "\" cy=\""
                   << f2(ty(s.y[i])) << "\" r=\"2.2\" fill=\"" << stroke
                   << "\"/>\n";
            }
        }
        // legend entry
        const double lx = px + pw - 110;
        const double ly = py + 14 + 14 * static_cast<double>(si);
        os << "<line x1=\"" << f2(lx) << "\" y1=\"" << f2(ly - 3)
           << "\" x2=\"" << f2(lx + 22) << "\" y2=\"" << f2(ly - 3)
           << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"";
        if (dash[0]) os << " stroke-dasharray=\"" << dash << "\"";
        os << "/>\n";
        os << "<text x=\"" << f2(lx + 27) << "\" y=\"" << f2(ly)
           << "\" font-size=\"" << f2(font)
           << "\" font-family=\"sans-serif\">" << xml_escape(s.name)
           << "</text>\n";
    }
}

} // namespace

std::string render_svg(const std::vector<PlotSeries>& series,
                       const PlotConfig& cfg,
                       const std::optional<InsetConfig>& inset) {
    std::ostringstream os;
    const double w = cfg.width, h = cfg.height;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\""
       << cfg.width << "\" height=\"" << cfg.height << "\" viewBox=\"0 0 "
       << cfg.width << " " << cfg.height << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << cfg.width << "\" height=\""
       << cfg.height << "\" fill=\"#ffffff\"/>\n";
    if (!cfg.title.empty())
        os << "<text x=\"" << f2(0.5 * w)
           << "\" y=\"22\" font-size=\"15.00\" text-anchor=\"middle\" "
              "font-family=\"sans-serif\">"
           << xml_escape(cfg.title) << "</text>\n";

    const double px = 64, py = 36;
    const double pw = w - px - 20, ph = h - py - 56;
    draw_panel(os, series, px, py, pw, ph, cfg.x_log, cfg.y_log, cfg.x_label,
               cfg.y_label, 12.0, true);

    if (inset && !inset->series.empty()) {
        const double ix = px + inset->rx * pw;
        const double iy = py + inset->ry * ph;
        const double iw = inset->rw * pw;
        const double ih = inset->rh * ph;
        os << "<rect x=\"" << f2(ix - 40) << "\" y=\"" << f2(iy - 8)
           << "\" width=\"" << f2(iw + 52) << "\" height=\"" << f2(ih + 34)
           << "\" fill=\"#ffffff\" stroke=\"none\"/>\n";
        draw_panel(os, inset->series, ix, iy, iw, ih, false, false,
                   inset->x_label, inset->y_label, 9.0, false);
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace helionics
