#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nodeshift/bench.hpp"

namespace nodeshift {

namespace {

double median_of(const std::vector<Cost>& sorted, std::size_t begin, std::size_t end) {
    const std::size_t count = end - begin;
    const std::size_t mid = begin + count / 2;
    if (count % 2 == 1) return static_cast<double>(sorted[mid]);
    return (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
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

// Shared frame: margins, y axis with ticks and gridlines, title.
struct Frame {
    double width, height, left, right, top, bottom;
    double y_min, y_max;

    double x0() const { return left; }
    double x1() const { return width - right; }
    double y_of(double v) const {
        const double span = y_max - y_min;
        const double t = (v - y_min) / span;
        return (height - bottom) - t * (height - bottom - top);
    }

    void open(std::ostringstream& out, const std::string& title) const {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
            << "\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"15\">" << escape_xml(title)
            << "</text>\n";
        for (int tick = 0; tick <= 4; ++tick) {
            const double v = y_min + (y_max - y_min) * tick / 4.0;
            const double y = y_of(v);
            out << "<line x1=\"" << x0() << "\" y1=\"" << fmt(y) << "\" x2=\"" << x1()
                << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
            out << "<text x=\"" << x0() - 6 << "\" y=\"" << fmt(y + 4)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
                << fmt(v) << "</text>\n";
        }
        out << "<line x1=\"" << x0() << "\" y1=\"" << top << "\" x2=\"" << x0()
            << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << x0() << "\" y1=\"" << height - bottom << "\" x2=\"" << x1()
            << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
    }
};

void series_label(std::ostringstream& out, const Frame& frame, double x,
                  const std::string& label) {
    out << "<text x=\"" << fmt(x) << "\" y=\"" << frame.height - frame.bottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape_xml(label) << "</text>\n";
}

}  // namespace

BoxStats compute_box_stats(std::vector<Cost> values) {
    if (values.empty()) throw std::invalid_argument("compute_box_stats: no values");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();

    BoxStats stats;
    stats.median = median_of(values, 0, n);
    // Tukey hinges: an odd count puts the median into both halves.
    const std::size_t half = n / 2;
    stats.q1 = median_of(values, 0, n % 2 == 1 ? half + 1 : half);
    stats.q3 = median_of(values, half, n);

    const double iqr = stats.q3 - stats.q1;
    const double low_fence = stats.q1 - 1.5 * iqr;
    const double high_fence = stats.q3 + 1.5 * iqr;

    stats.whisker_low = stats.q1;
    stats.whisker_high = stats.q3;
    bool have_low = false, have_high = false;
    for (Cost v : values) {
        const double d = static_cast<double>(v);
        if (d < low_fence || d > high_fence) {
            stats.outliers.push_back(v);
            continue;
        }
        if (!have_low) {
            stats.whisker_low = d;  // values are sorted
            have_low = true;
        }
        stats.whisker_high = d;
        have_high = true;
    }
    (void)have_high;
    return stats;
}

std::string render_boxplot_svg(
    const std::vector<std::pair<std::string, std::vector<Cost>>>& series,
    const std::string& title) {
    if (series.empty()) throw std::invalid_argument("render_boxplot_svg: no series");

    std::vector<BoxStats> stats;
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& [label, values] : series) {
        stats.push_back(compute_box_stats(values));
        for (Cost v : values) {
            if (first || v < lo) lo = static_cast<double>(v);
            if (first || v > hi) hi = static_cast<double>(v);
            if (first) {
                lo = hi = static_cast<double>(v);
                first = false;
            }
        }
    }
    double pad = (hi - lo) * 0.05;
    if (pad == 0) pad = 1;  // all-equal data still gets a frame

    const double slot = 90;
    Frame frame{120 + slot * series.size(), 420, 70, 30, 40, 50, lo - pad, hi + pad};

    std::ostringstream out;
    frame.open(out, title);
    for (std::size_t s = 0; s < series.size(); ++s) {
        const BoxStats& box = stats[s];
        const double cx = frame.x0() + slot * (s + 0.5);
        const double half_w = 24;
        const double y_q1 = frame.y_of(box.q1);
        const double y_q3 = frame.y_of(box.q3);
        const double y_med = frame.y_of(box.median);
        const double y_wlo = frame.y_of(box.whisker_low);
        const double y_whi = frame.y_of(box.whisker_high);

        out << "<g stroke=\"black\" fill=\"none\">\n";
        out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y_wlo) << "\" x2=\"" << fmt(cx)
            << "\" y2=\"" << fmt(y_q1) << "\"/>\n";
        out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y_q3) << "\" x2=\"" << fmt(cx)
            << "\" y2=\"" << fmt(y_whi) << "\"/>\n";
        out << "<line x1=\"" << fmt(cx - half_w / 2) << "\" y1=\"" << fmt(y_wlo) << "\" x2=\""
            << fmt(cx + half_w / 2) << "\" y2=\"" << fmt(y_wlo) << "\"/>\n";
        out << "<line x1=\"" << fmt(cx - half_w / 2) << "\" y1=\"" << fmt(y_whi) << "\" x2=\""
            << fmt(cx + half_w / 2) << "\" y2=\"" << fmt(y_whi) << "\"/>\n";
        out << "<rect x=\"" << fmt(cx - half_w) << "\" y=\"" << fmt(y_q3) << "\" width=\""
            << fmt(2 * half_w) << "\" height=\"" << fmt(std::max(0.0, y_q1 - y_q3))
            << "\" fill=\"#cfe3f7\"/>\n";
        out << "<line x1=\"" << fmt(cx - half_w) << "\" y1=\"" << fmt(y_med) << "\" x2=\""
            << fmt(cx + half_w) << "\" y2=\"" << fmt(y_med) << "\" stroke-width=\"2\"/>\n";
        for (Cost outlier : box.outliers) {
            out << "<circle cx=\"" << fmt(cx) << "\" cy=\""
                << fmt(frame.y_of(static_cast<double>(outlier)))
                << "\" r=\"3\" fill=\"black\"/>\n";
        }
        out << "</g>\n";
        series_label(out, frame, cx, series[s].first);
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_bar_chart_svg(const std::vector<std::pair<std::string, double>>& bars,
                                 const std::string& title, const std::string& unit) {
    if (bars.empty()) throw std::invalid_argument("render_bar_chart_svg: no bars");

    double hi = 0;
    for (const auto& [label, v] : bars) hi = std::max(hi, v);
    if (hi == 0) hi = 1;

    const double slot = 90;
    Frame frame{120 + slot * bars.size(), 420, 70, 30, 40, 50, 0, hi * 1.05};

    std::ostringstream out;
    frame.open(out, title + (unit.empty() ? "" : " [" + unit + "]"));
    for (std::size_t s = 0; s < bars.size(); ++s) {
        const double cx = frame.x0() + slot * (s + 0.5);
        const double y = frame.y_of(bars[s].second);
        const double y_base = frame.y_of(0);
        out << "<rect x=\"" << fmt(cx - 25) << "\" y=\"" << fmt(y) << "\" width=\"50\" "
            << "height=\"" << fmt(std::max(0.0, y_base - y))
            << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(y - 5)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << fmt(bars[s].second) << "</text>\n";
        series_label(out, frame, cx, bars[s].first);
    }
    out << "</svg>\n";
    return out.str();
}

void emit_boxplot_svg(const std::vector<std::pair<std::string, std::vector<Cost>>>& series,
                      const std::string& title, const std::filesystem::path& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path.string());
    out << render_boxplot_svg(series, title);
}

}  // namespace nodeshift
