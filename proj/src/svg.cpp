#include "parkdr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "parkdr/errors.hpp"

namespace parkdr {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_line_chart_svg(const std::string& title,
                                  const std::vector<SvgSeries>& series, int width,
                                  int height) {
    if (series.empty()) {
        throw DataError("svg: nothing to plot");
    }
    std::size_t max_len = 0;
    double lo = 0.0;
    double hi = 1.0;
    bool first = true;
    for (const auto& s : series) {
        if (s.values.empty()) {
            throw DataError("svg: series '" + s.label + "' is empty");
        }
        max_len = std::max(max_len, s.values.size());
        const auto [mn, mx] = std::minmax_element(s.values.begin(), s.values.end());
        if (first) {
            lo = *mn;
            hi = *mx;
            first = false;
        } else {
            lo = std::min(lo, *mn);
            hi = std::max(hi, *mx);
        }
    }
    lo = std::min(lo, 0.0);
    if (hi <= lo) hi = lo + 1.0;

    const double ml = 60.0, mr = 20.0, mt = 36.0, mb = 46.0;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;
    auto x_of = [&](std::size_t i, std::size_t n) {
        return n <= 1 ? ml : ml + pw * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto y_of = [&](double v) { return mt + ph * (1.0 - (v - lo) / (hi - lo)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fixed(ml) << "\" y=\"22\" font-family=\"sans-serif\" "
        << "font-size=\"14\">" << title << "</text>\n";
    // axes
    out << "<line x1=\"" << fixed(ml) << "\" y1=\"" << fixed(mt) << "\" x2=\"" << fixed(ml)
        << "\" y2=\"" << fixed(mt + ph) << "\" stroke=\"#333333\"/>\n";
    out << "<line x1=\"" << fixed(ml) << "\" y1=\"" << fixed(mt + ph) << "\" x2=\""
        << fixed(ml + pw) << "\" y2=\"" << fixed(mt + ph) << "\" stroke=\"#333333\"/>\n";
    for (int g = 0; g <= 4; ++g) {
        const double v = lo + (hi - lo) * g / 4.0;
        const double y = y_of(v);
        out << "<line x1=\"" << fixed(ml) << "\" y1=\"" << fixed(y) << "\" x2=\""
            << fixed(ml + pw) << "\" y2=\"" << fixed(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        out << "<text x=\"4\" y=\"" << fixed(y + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << fixed(v)
            << "</text>\n";
    }
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i) out << ' ';
            out << fixed(x_of(i, s.values.size())) << ',' << fixed(y_of(s.values[i]));
        }
        out << "\"/>\n";
        const double ly = mt + 14.0 * static_cast<double>(k);
        out << "<rect x=\"" << fixed(ml + pw - 130.0) << "\" y=\"" << fixed(ly)
            << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << fixed(ml + pw - 116.0) << "\" y=\"" << fixed(ly + 9.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace parkdr
