/*
   Copyright 2026 The menzerath authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "menzerath/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

namespace menzerath {

namespace {

constexpr std::array<const char*, 7> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#17becf"};

struct Box {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
};

constexpr Box kJointBox{0.0, 0.0, 960.0, 400.0};
constexpr Box kMalBox{0.0, 400.0, 480.0, 320.0};
constexpr Box kCompareBox{480.0, 400.0, 480.0, 320.0};

constexpr double kLeft = 56.0;
constexpr double kRight = 16.0;
constexpr double kTop = 28.0;
constexpr double kBottom = 40.0;

std::string num(double v)
{
    std::array<char, 48> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    std::string s(buf.data());
    if (s == "-0.00") {
        s = "0.00";
    }
    return s;
}

std::string escape(const std::string& text)
{
    std::string out;
    for (const char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Maps data coordinates into the plot area of a panel.
struct Frame {
    Box box;
    double x0, x1, y0, y1;

    double left() const { return box.x + kLeft; }
    double right() const { return box.x + box.w - kRight; }
    double top() const { return box.y + kTop; }
    double bottom() const { return box.y + box.h - kBottom; }
    double px(double x) const { return left() + (x - x0) / (x1 - x0) * (right() - left()); }
    double py(double y) const { return bottom() - (y - y0) / (y1 - y0) * (bottom() - top()); }
};

std::string text(double x, double y, const std::string& body, const char* anchor = "middle",
                 int size = 11)
{
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + std::to_string(size) +
           "\" text-anchor=\"" + anchor + "\">" + escape(body) + "</text>\n";
}

std::string axes(const Frame& f, const std::string& title, const std::string& xlabel,
                 const std::string& ylabel, bool integer_y)
{
    std::string out = "<g class=\"axes\" stroke=\"#333\" stroke-width=\"1\">\n";
    out += "<line x1=\"" + num(f.left()) + "\" y1=\"" + num(f.bottom()) + "\" x2=\"" +
           num(f.right()) + "\" y2=\"" + num(f.bottom()) + "\"/>\n";
    out += "<line x1=\"" + num(f.left()) + "\" y1=\"" + num(f.top()) + "\" x2=\"" + num(f.left()) +
           "\" y2=\"" + num(f.bottom()) + "\"/>\n";
    out += "</g>\n<g class=\"labels\" fill=\"#333\" font-family=\"sans-serif\">\n";
    const auto xmin = static_cast<std::int64_t>(std::ceil(f.x0));
    const auto xmax = static_cast<std::int64_t>(std::floor(f.x1));
    const std::int64_t xstep = std::max<std::int64_t>(1, (xmax - xmin) / 12 + 1);
    for (std::int64_t x = xmin; x <= xmax; x += xstep) {
        out += text(f.px(static_cast<double>(x)), f.bottom() + 14.0, std::to_string(x));
    }
    for (int i = 0; i <= 4; ++i) {
        const double y = f.y0 + (f.y1 - f.y0) * i / 4.0;
        const std::string label = integer_y ? std::to_string(std::llround(y)) : num(y);
        out += text(f.left() - 6.0, f.py(y) + 4.0, label, "end");
    }
    out += text((f.left() + f.right()) / 2.0, f.bottom() + 32.0, xlabel);
    out += "<text x=\"" + num(f.box.x + 14.0) + "\" y=\"" + num((f.top() + f.bottom()) / 2.0) +
           "\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 " +
           num(f.box.x + 14.0) + " " + num((f.top() + f.bottom()) / 2.0) + ")\">" +
           escape(ylabel) + "</text>\n";
    out += text(f.box.x + f.box.w / 2.0, f.box.y + 18.0, title, "middle", 13);
    out += "</g>\n";
    return out;
}

std::uint64_t splitmix(std::uint64_t v)
{
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

double jitter(std::uint64_t index, std::uint64_t salt)
{
    return static_cast<double>(splitmix(index * 2 + salt) >> 11) * 0x1.0p-53 - 0.5;
}

std::string joint_panel(const JointFrequencyTable& table,
                        std::optional<std::span<const LengthPair>> samples, Box box)
{
    const auto& cells = table.cells();
    std::int64_t xmin = cells.begin()->first.x;
    std::int64_t xmax = cells.rbegin()->first.x;
    std::int64_t zmin = std::numeric_limits<std::int64_t>::max();
    std::int64_t zmax = std::numeric_limits<std::int64_t>::min();
    std::int64_t max_count = 1;
    for (const auto& [key, n] : cells) {
        zmin = std::min(zmin, key.z);
        zmax = std::max(zmax, key.z);
        max_count = std::max(max_count, n);
    }
    if (samples) {
        for (const auto& s : *samples) {
            xmin = std::min(xmin, s.x);
            xmax = std::max(xmax, s.x);
            zmin = std::min(zmin, s.z);
            zmax = std::max(zmax, s.z);
        }
    }
    const Frame f{box, static_cast<double>(xmin) - 0.5, static_cast<double>(xmax) + 0.5,
                  static_cast<double>(zmin) - 0.5, static_cast<double>(zmax) + 0.5};
    const double cw = (f.right() - f.left()) / (f.x1 - f.x0);
    const double ch = (f.bottom() - f.top()) / (f.y1 - f.y0);

    std::string out = "<g id=\"joint\">\n";
    out += "<rect x=\"" + num(box.x) + "\" y=\"" + num(box.y) + "\" width=\"" + num(box.w) +
           "\" height=\"" + num(box.h) + "\" fill=\"#ffffff\"/>\n";
    if (table.domain() == Domain::Segments) {
        out += "<g id=\"infeasible\" fill=\"#e6e6e6\">\n";
        for (std::int64_t x = xmin; x <= xmax; ++x) {
            const std::int64_t top = std::min(x - 1, zmax);
            if (top < zmin) {
                continue;
            }
            const double y_hi = f.py(static_cast<double>(top) + 0.5);
            const double y_lo = f.py(static_cast<double>(zmin) - 0.5);
            out += "<rect x=\"" + num(f.px(static_cast<double>(x) - 0.5)) + "\" y=\"" + num(y_hi) +
                   "\" width=\"" + num(cw) + "\" height=\"" + num(y_lo - y_hi) + "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "<g id=\"heatmap\" fill=\"#1f77b4\" fill-opacity=\"0.75\">\n";
    for (const auto& [key, n] : cells) {
        const double scale = std::sqrt(static_cast<double>(n) / static_cast<double>(max_count));
        const double w = cw * 0.92 * scale;
        const double h = ch * 0.92 * scale;
        const double cx = f.px(static_cast<double>(key.x));
        const double cy = f.py(static_cast<double>(key.z));
        out += "<rect x=\"" + num(cx - w / 2.0) + "\" y=\"" + num(cy - h / 2.0) + "\" width=\"" +
               num(w) + "\" height=\"" + num(h) + "\"><title>(" + std::to_string(key.x) + ", " +
               std::to_string(key.z) + "): " + std::to_string(n) + "</title></rect>\n";
    }
    out += "</g>\n";
    if (samples) {
        out += "<g id=\"samples\" fill=\"#d62728\" fill-opacity=\"0.6\">\n";
        std::uint64_t i = 0;
        for (const auto& s : *samples) {
            const double jx = jitter(i, 0) * cw * 0.6;
            const double jz = jitter(i, 1) * ch * 0.6;
            out += "<circle cx=\"" + num(f.px(static_cast<double>(s.x)) + jx) + "\" cy=\"" +
                   num(f.py(static_cast<double>(s.z)) + jz) + "\" r=\"2.00\"/>\n";
            ++i;
        }
        out += "</g>\n";
    }
    out += axes(f, "Joint distribution", "x (constituents)", "z (subconstituents)", true);
    out += "</g>\n";
    return out;
}

std::string polyline(const Frame& f, const MalCurve& curve, const char* color, bool dashed)
{
    std::string pts;
    for (const auto& p : curve.points) {
        if (!pts.empty()) {
            pts += ' ';
        }
        pts += num(f.px(static_cast<double>(p.x))) + "," + num(f.py(p.y));
    }
    return "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.60\"" + (dashed ? " stroke-dasharray=\"5,3\"" : "") + "/>\n";
}

std::string curve_panel(const MalCurve& empirical, std::span<const PlotSeries> models,
                        bool classical, Box box, const char* id, const char* title)
{
    std::vector<std::size_t> shown;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (models[i].classical == classical) {
            shown.push_back(i);
        }
    }
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    auto extend = [&](const MalCurve& c) {
        for (const auto& p : c.points) {
            if (std::isfinite(p.y)) {
                ymin = std::min(ymin, p.y);
                ymax = std::max(ymax, p.y);
            }
        }
    };
    extend(empirical);
    for (const auto i : shown) {
        extend(models[i].curve);
    }
    const double pad = ymax > ymin ? (ymax - ymin) * 0.08 : 0.5;
    const double xmin = static_cast<double>(empirical.points.front().x);
    const double xmax = static_cast<double>(empirical.points.back().x);
    const Frame f{box, xmin - 0.5, xmax + 0.5, ymin - pad, ymax + pad};

    std::string out = std::string("<g id=\"") + id + "\">\n";
    out += "<rect x=\"" + num(box.x) + "\" y=\"" + num(box.y) + "\" width=\"" + num(box.w) +
           "\" height=\"" + num(box.h) + "\" fill=\"#ffffff\"/>\n";
    out += std::string("<g id=\"") + id + "-series\">\n";
    for (const auto i : shown) {
        out += polyline(f, models[i].curve, kPalette[i % kPalette.size()], !classical);
    }
    out += polyline(f, empirical, "#000000", false);
    for (const auto& p : empirical.points) {
        out += "<circle cx=\"" + num(f.px(static_cast<double>(p.x))) + "\" cy=\"" + num(f.py(p.y)) +
               "\" r=\"3.00\" fill=\"#000000\"/>\n";
    }
    out += "</g>\n";
    if (!shown.empty()) {
        out += std::string("<g id=\"") + id + "-legend\" font-family=\"sans-serif\">\n";
        double y = f.top() + 6.0;
        for (const auto i : shown) {
            std::string label = models[i].name;
            if (models[i].rss) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), " (RSS %.4g)", *models[i].rss);
                label += buf;
            }
            out += "<line x1=\"" + num(f.right() - 170.0) + "\" y1=\"" + num(y) + "\" x2=\"" +
                   num(f.right() - 150.0) + "\" y2=\"" + num(y) + "\" stroke=\"" +
                   kPalette[i % kPalette.size()] + "\" stroke-width=\"2.00\"/>\n";
            out += text(f.right() - 145.0, y + 4.0, label, "start", 10);
            y += 14.0;
        }
        out += "</g>\n";
    }
    out += axes(f, title, "x (constituents)", "y = z / x", false);
    out += "</g>\n";
    return out;
}

Box at_origin(Box b)
{
    return {0.0, 0.0, b.w, b.h};
}

} // namespace

std::string render_svg(const JointFrequencyTable& table, std::span<const PlotSeries> models,
                       std::optional<std::span<const LengthPair>> samples, SvgLayout layout)
{
    double width = 960.0;
    double height = 720.0;
    switch (layout) {
    case SvgLayout::JointPanel:
        width = kJointBox.w;
        height = kJointBox.h;
        break;
    case SvgLayout::CurvePanel:
    case SvgLayout::ComparisonPanel:
        width = kMalBox.w;
        height = kMalBox.h;
        break;
    case SvgLayout::Composite:
        break;
    }

    const auto w = std::to_string(static_cast<int>(width));
    const auto h = std::to_string(static_cast<int>(height));
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
           "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";

    const bool segments = table.domain() == Domain::Segments;
    const auto empirical = segments ? empirical_mal_curve(table) : MalCurve{};
    switch (layout) {
    case SvgLayout::JointPanel:
        out += joint_panel(table, samples, at_origin(kJointBox));
        break;
    case SvgLayout::CurvePanel:
        if (segments) {
            out += curve_panel(empirical, models, false, at_origin(kMalBox), "mal",
                               "Menzerath's law");
        }
        break;
    case SvgLayout::ComparisonPanel:
        if (segments) {
            out += curve_panel(empirical, models, true, at_origin(kCompareBox), "compare",
                               "Classical models");
        }
        break;
    case SvgLayout::Composite:
        out += joint_panel(table, samples, kJointBox);
        if (segments) {
            out += curve_panel(empirical, models, false, kMalBox, "mal", "Menzerath's law");
            out += curve_panel(empirical, models, true, kCompareBox, "compare",
                               "Classical models");
        }
        break;
    }
    out += "</svg>\n";
    return out;
}

} // namespace menzerath
