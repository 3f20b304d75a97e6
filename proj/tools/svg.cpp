// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "svg.hpp"
#include "output.hpp"
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rollup_lab::cli
{
namespace
{
constexpr double width = 720;
constexpr double height = 440;
constexpr double left = 80;
constexpr double right = 170;
constexpr double top = 40;
constexpr double bottom = 60;

constexpr const char* palette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s)
{
    std::string out;
    for (const char c : s)
    {
        switch (c)
        {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct Axis
{
    double lo = 0;
    double hi = 1;
    bool log = false;

    double map(double v) const
    {
        const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
        return std::clamp(t, 0.0, 1.0);
    }

    double value(double t) const { return log ? std::pow(10, lo + t * (hi - lo)) : lo + t * (hi - lo); }
};

Axis make_axis(const Plot& plot, bool x_axis)
{
    const bool log = x_axis ? plot.log_x : plot.log_y;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : plot.series)
    {
        for (const auto& [x, y] : s.points)
        {
            const double v = x_axis ? x : y;
            if (!std::isfinite(v) || (log && v <= 0))
                continue;
            lo = std::min(lo, log ? std::log10(v) : v);
            hi = std::max(hi, log ? std::log10(v) : v);
        }
    }
    if (!std::isfinite(lo))
    {
        lo = 0;
        hi = 1;
    }
    if (!log && lo > 0)
        lo = 0;
    if (hi <= lo)
        hi = lo + 1;
    return {lo, hi, log};
}

std::string tick_label(double v)
{
    const double a = std::abs(v);
    if (a != 0 && (a >= 1e6 || a < 1e-3))
    {
        std::ostringstream s;
        s.precision(2);
        s << std::scientific << v;
        return s.str();
    }
    return num(std::round(v * 1000) / 1000);
}
}  // namespace

std::string render_svg(const Plot& plot)
{
    const Axis ax = make_axis(plot, true);
    const Axis ay = make_axis(plot, false);
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    const auto px = [&](double x) { return left + ax.map(x) * pw; };
    const auto py = [&](double y) { return top + (1 - ay.map(y)) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(plot.title)
      << "</text>\n";
    o << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i)
    {
        const double t = i / 5.0;
        const double x = left + t * pw;
        const double y = top + (1 - t) * ph;
        o << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\"" << top + ph + 5
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << x << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
          << tick_label(ax.value(t)) << "</text>\n";
        o << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << tick_label(ay.value(t))
          << "</text>\n";
    }
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">"
      << escape(plot.x_label) << "</text>\n";
    o << "<text transform=\"translate(18," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(plot.y_label) << "</text>\n";

    for (std::size_t i = 0; i < plot.series.size(); ++i)
    {
        const auto& s = plot.series[i];
        const char* colour = palette[i % std::size(palette)];
        o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : s.points)
        {
            if (!std::isfinite(x) || !std::isfinite(y) || (ax.log && x <= 0) || (ay.log && y <= 0))
                continue;
            o << (first ? "" : " ") << fixed(px(x), 2) << ',' << fixed(py(y), 2);
            first = false;
        }
        o << "\"/>\n";
        const double ly = top + 10 + 18 * static_cast<double>(i);
        o << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 32 << "\" y2=\"" << ly
          << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << left + pw + 38 << "\" y=\"" << ly + 4 << "\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}
}  // namespace rollup_lab::cli
