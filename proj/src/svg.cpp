// SPDX-License-Identifier: Apache-2.0
#include "maglap/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "maglap/error.hpp"

namespace maglap {

namespace {

std::string px(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

}  // namespace

std::string render_svg(const FluxDiagram& diagram, const SvgStyle& style) {
    if (diagram.rows.empty()) throw InvalidInput("empty_diagram", "cannot render an empty flux diagram");
    const double top = style.lambda_max.value_or(diagram.ambient_max);
    if (!(top > 0.0)) throw InvalidInput("invalid_style", "lambda axis must have a positive extent");
    if (style.width <= 0 || style.height <= 0 || style.margin < 0)
        throw InvalidInput("invalid_style", "image dimensions must be positive");

    const double w = style.width;
    const double h = style.height;
    const double m = style.margin;
    const double column = w / static_cast<double>(diagram.rows.size());
    auto y_of = [&](double lambda) { return m + h * (1.0 - std::clamp(lambda / top, 0.0, 1.0)); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w + 2 * m) << "\" height=\"" << px(h + 2 * m)
        << "\" viewBox=\"0 0 " << px(w + 2 * m) << ' ' << px(h + 2 * m) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << px(w + 2 * m) << "\" height=\"" << px(h + 2 * m) << "\" fill=\""
        << style.background << "\"/>\n";
    out << "<g fill=\"" << style.band_color << "\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t j = 0; j < diagram.rows.size(); ++j) {
        const double x = m + column * static_cast<double>(j);
        for (const Interval& band : diagram.rows[j].band_intervals) {
            const double y_hi = y_of(band.hi);
            const double y_lo = y_of(band.lo);
            // Flat bands still get a hairline.
            const double height = std::max(y_lo - y_hi, 0.5);
            out << "<rect x=\"" << px(x) << "\" y=\"" << px(y_hi) << "\" width=\"" << px(column) << "\" height=\""
                << px(height) << "\"/>\n";
        }
    }
    out << "</g>\n";
    out << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1\">\n";
    out << "<rect x=\"" << px(m) << "\" y=\"" << px(m) << "\" width=\"" << px(w) << "\" height=\"" << px(h) << "\"/>\n";
    out << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
    out << "<text x=\"" << px(m) << "\" y=\"" << px(m + h + 16) << "\" text-anchor=\"middle\">0</text>\n";
    out << "<text x=\"" << px(m + w) << "\" y=\"" << px(m + h + 16) << "\" text-anchor=\"middle\">2&#960;</text>\n";
    out << "<text x=\"" << px(m + w / 2) << "\" y=\"" << px(m + h + 32) << "\" text-anchor=\"middle\">s</text>\n";
    out << "<text x=\"" << px(m - 6) << "\" y=\"" << px(m + h) << "\" text-anchor=\"end\">0</text>\n";
    char label[32];
    std::snprintf(label, sizeof label, "%g", top);
    out << "<text x=\"" << px(m - 6) << "\" y=\"" << px(m + 4) << "\" text-anchor=\"end\">" << label << "</text>\n";
    out << "<text x=\"" << px(m - 24) << "\" y=\"" << px(m + h / 2) << "\" text-anchor=\"end\">&#955;</text>\n";
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace maglap
