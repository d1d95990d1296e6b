#ifndef PIGOU_PLOT_HPP
#define PIGOU_PLOT_HPP

#include <array>
#include <string>
#include <vector>

#include "pigou/cooperation.hpp"
#include "pigou/format.hpp"

namespace pigou {

/// Geometry of one regime panel in model coordinates: the three curve
/// polylines, the labeled social optimum, and the deadweight triangle.
struct PlotPanel {
    Regime regime = Regime::noncooperative;
    std::vector<Point> mpc_line;
    std::vector<Point> msc_line;
    std::vector<Point> msb_line;
    Point optimum;         // MSC x MSB intersection
    std::string optimum_label;
    std::array<Point, 3> triangle;  // social optimum, MSB and MSC at x_private
};

struct PlotSpec {
    PlotPanel noncoop;
    PlotPanel coop;
    double x_max = 0.0;  // shared model domain, both panels
    double y_max = 0.0;
    double canvas_width = 800.0;
    double canvas_height = 400.0;
    std::string x_label;
    std::string y_label;
};

namespace detail {

inline PlotPanel make_panel(const ExternalityScenario& s, Regime regime,
                            double x_max) {
    const CurveSet cs = curves(s, regime);
    const EquilibriumSet eq = equilibria(s, regime);
    PlotPanel panel;
    panel.regime = regime;
    const auto span = [&](const AffineCurve& c) {
        return std::vector<Point>{{0.0, c.value(0.0)}, {x_max, c.value(x_max)}};
    };
    panel.mpc_line = span(cs.mpc);
    panel.msc_line = span(cs.msc);
    panel.msb_line = span(cs.msb);
    panel.optimum = Point{eq.x_social, eq.y_social};
    panel.optimum_label = regime == Regime::noncooperative ? "O1" : "O2";
    panel.triangle = {Point{eq.x_social, eq.y_social},
                      Point{eq.x_private, cs.msb.value(eq.x_private)},
                      Point{eq.x_private, cs.msc.value(eq.x_private)}};
    return panel;
}

}  // namespace detail

/// Builds the two-panel plot geometry. Both panels share one model domain
/// so the cooperative contraction is visible at a glance.
inline PlotSpec make_plot_spec(const ComparisonReport& report) {
    const ExternalityScenario& s = report.scenario;
    PlotSpec spec;
    spec.x_max = 1.1 * report.noncoop.equilibrium.x_private;
    spec.y_max = std::max(s.y1(), s.b() * spec.x_max);
    spec.noncoop = detail::make_panel(s, Regime::noncooperative, spec.x_max);
    spec.coop = detail::make_panel(s, Regime::cooperative, spec.x_max);
    spec.x_label = s.meta().activity_unit;
    spec.y_label = s.meta().currency_unit + "/" + s.meta().activity_unit;
    return spec;
}

namespace detail {

inline std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline void escape_xml(std::string& out, const std::string& s) {
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
}

}  // namespace detail

/// Renders the plot spec as a standalone two-panel SVG document,
/// non-cooperative on the left. Byte-deterministic for identical reports.
inline std::string emit_plot(const ComparisonReport& report) {
    const PlotSpec spec = make_plot_spec(report);
    const double panel_w = spec.canvas_width / 2.0;
    const double margin_x = 0.1 * panel_w;
    const double margin_y = 0.1 * spec.canvas_height;
    const double plot_w = panel_w - 2 * margin_x;
    const double plot_h = spec.canvas_height - 2 * margin_y;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      detail::px(spec.canvas_width) + "\" height=\"" +
                      detail::px(spec.canvas_height) + "\" viewBox=\"0 0 " +
                      detail::px(spec.canvas_width) + " " +
                      detail::px(spec.canvas_height) + "\">\n";

    const auto render_panel = [&](const PlotPanel& panel, double x_offset) {
        const auto map_x = [&](double x) {
            return x_offset + margin_x + x / spec.x_max * plot_w;
        };
        const auto map_y = [&](double y) {
            return margin_y + (1.0 - y / spec.y_max) * plot_h;
        };
        const auto polyline = [&](const std::vector<Point>& pts,
                                  const char* stroke) {
            std::string attr;
            for (const Point& p : pts) {
                if (!attr.empty()) attr += ' ';
                attr += detail::px(map_x(p.x)) + "," + detail::px(map_y(p.y));
            }
            svg += std::string("  <polyline points=\"") + attr +
                   "\" fill=\"none\" stroke=\"" + stroke + "\"/>\n";
        };

        // axes
        svg += "  <line x1=\"" + detail::px(map_x(0)) + "\" y1=\"" +
               detail::px(map_y(0)) + "\" x2=\"" + detail::px(map_x(spec.x_max)) +
               "\" y2=\"" + detail::px(map_y(0)) + "\" stroke=\"black\"/>\n";
        svg += "  <line x1=\"" + detail::px(map_x(0)) + "\" y1=\"" +
               detail::px(map_y(0)) + "\" x2=\"" + detail::px(map_x(0)) +
               "\" y2=\"" + detail::px(map_y(spec.y_max)) +
               "\" stroke=\"black\"/>\n";

        // deadweight triangle behind the curves
        std::string tri;
        for (const Point& p : panel.triangle) {
            if (!tri.empty()) tri += ' ';
            tri += detail::px(map_x(p.x)) + "," + detail::px(map_y(p.y));
        }
        svg += "  <polygon points=\"" + tri +
               "\" fill=\"lightgray\" stroke=\"gray\"/>\n";

        polyline(panel.mpc_line, "blue");
        polyline(panel.msc_line, "red");
        polyline(panel.msb_line, "green");

        svg += "  <circle cx=\"" + detail::px(map_x(panel.optimum.x)) + "\" cy=\"" +
               detail::px(map_y(panel.optimum.y)) + "\" r=\"3\" fill=\"black\"/>\n";
        svg += "  <text x=\"" + detail::px(map_x(panel.optimum.x) + 6) + "\" y=\"" +
               detail::px(map_y(panel.optimum.y) - 6) + "\">" +
               panel.optimum_label + "</text>\n";

        std::string title = panel.regime == Regime::noncooperative
                                ? "non-cooperative"
                                : "cooperative";
        svg += "  <text x=\"" + detail::px(x_offset + panel_w / 2 - 40) +
               "\" y=\"" + detail::px(margin_y - 4) + "\">" + title + "</text>\n";

        // axis labels from scenario units
        std::string xl, yl;
        detail::escape_xml(xl, spec.x_label);
        detail::escape_xml(yl, spec.y_label);
        svg += "  <text x=\"" + detail::px(x_offset + panel_w / 2 - 30) + "\" y=\"" +
               detail::px(spec.canvas_height - 6) + "\">" + xl + "</text>\n";
        svg += "  <text x=\"" + detail::px(x_offset + 4) + "\" y=\"" +
               detail::px(margin_y + 12) + "\">" + yl + "</text>\n";
    };

    render_panel(spec.noncoop, 0.0);
    render_panel(spec.coop, panel_w);
    svg += "</svg>\n";
    return svg;
}

}  // namespace pigou

#endif
