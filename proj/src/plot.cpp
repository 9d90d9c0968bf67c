#include <arbk/plot.hpp>

#include <arbk/errors.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace arbk::plot {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

double log_value(double v)
{
    if (!(v > kLogFloor)) return std::log10(kLogFloor); // also maps NaN to the floor
    return std::log10(v);
}

struct Frame
{
    double x_lo, x_hi, y_lo, y_hi;

    double px(double epoch) const { return kLeft + (epoch - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight); }
    double py(double log_v) const
    {
        return kTop + (y_hi - log_v) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
    }
};

} // namespace

std::string_view method_color(std::string_view method) noexcept
{
    if (method == "bk") return "blue";
    if (method == "arbk") return "red";
    if (method == "acd-dual") return "green";
    return "gray";
}

std::vector<Series> series_for_metric(const AggregateTable& table, std::string_view metric)
{
    std::vector<Series> out;
    for (const auto& row : table) {
        if (row.metric != metric) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const Series& s) { return s.method == row.method; });
        if (it == out.end()) {
            out.push_back(Series{row.method, {}, {}, {}, {}});
            it = out.end() - 1;
        }
        it->epochs.push_back(row.epoch);
        it->mean.push_back(row.mean);
        it->min.push_back(row.min);
        it->max.push_back(row.max);
    }
    return out;
}

std::string render_svg(const std::vector<Series>& series, std::string_view metric)
{
    bool any = false;
    Frame f{0.0, 0.0, 0.0, 0.0};
    double lo = 0.0, hi = 0.0;
    for (const auto& s : series) {
        for (std::size_t k = 0; k < s.epochs.size(); ++k) {
            const double e = s.epochs[k];
            const double a = log_value(s.min[k]);
            const double b = log_value(s.max[k]);
            const double c = log_value(s.mean[k]);
            if (!any) {
                f.x_lo = f.x_hi = e;
                lo = std::min({a, b, c});
                hi = std::max({a, b, c});
                any = true;
            }
            f.x_lo = std::min(f.x_lo, e);
            f.x_hi = std::max(f.x_hi, e);
            lo = std::min({lo, a, b, c});
            hi = std::max({hi, a, b, c});
        }
    }
    if (!any) throw InvalidArgument("no data to plot for metric '" + std::string(metric) + "'");
    if (f.x_hi == f.x_lo) f.x_hi = f.x_lo + 1.0;
    f.y_lo = std::floor(lo);
    f.y_hi = std::ceil(hi);
    if (f.y_hi == f.y_lo) f.y_hi = f.y_lo + 1.0;

    const double plot_right = kWidth - kRight;
    const double plot_bottom = kHeight - kBottom;
    std::string svg;
    svg += fmt::format("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                       "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
                       "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
                       kWidth, kHeight, kWidth, kHeight);
    svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, kHeight);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       (kLeft + plot_right) / 2.0, escape(metric));

    // y axis: decade ticks, thinned to at most ~10 labels
    const int decades = static_cast<int>(f.y_hi - f.y_lo);
    const int stride = std::max(1, (decades + 9) / 10);
    for (int d = static_cast<int>(f.y_lo); d <= static_cast<int>(f.y_hi); d += stride) {
        const double y = f.py(d);
        svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#dddddd\"/>\n",
                           kLeft, y, plot_right, y);
        svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">1e{}</text>\n", kLeft - 6.0,
                           y + 4.0, d);
    }
    // x axis: five evenly spaced ticks
    for (int t = 0; t <= 4; ++t) {
        const double e = f.x_lo + (f.x_hi - f.x_lo) * t / 4.0;
        const double x = f.px(e);
        svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n", x,
                           plot_bottom, x, plot_bottom + 5.0);
        svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:g}</text>\n", x,
                           plot_bottom + 18.0, std::round(e * 100.0) / 100.0);
    }
    svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       kLeft, kTop, plot_right - kLeft, plot_bottom - kTop);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">epochs</text>\n",
                       (kLeft + plot_right) / 2.0, kHeight - 16.0);
    svg += fmt::format("<text x=\"18\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2f})\">"
                       "{}</text>\n",
                       (kTop + plot_bottom) / 2.0, (kTop + plot_bottom) / 2.0, escape(metric));

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& ser = series[s];
        if (ser.epochs.empty()) continue;
        const auto color = method_color(ser.method);

        std::string band;
        for (std::size_t k = 0; k < ser.epochs.size(); ++k) {
            band += fmt::format("{:.2f},{:.2f} ", f.px(ser.epochs[k]), f.py(log_value(ser.max[k])));
        }
        for (std::size_t k = ser.epochs.size(); k-- > 0;) {
            band += fmt::format("{:.2f},{:.2f} ", f.px(ser.epochs[k]), f.py(log_value(ser.min[k])));
        }
        band.pop_back();
        svg += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" stroke=\"none\"/>\n", band,
                           color);

        std::string line;
        for (std::size_t k = 0; k < ser.epochs.size(); ++k) {
            line += fmt::format("{:.2f},{:.2f} ", f.px(ser.epochs[k]), f.py(log_value(ser.mean[k])));
        }
        line.pop_back();
        svg += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n", line,
                           color);

        const double ly = kTop + 10.0 + 20.0 * static_cast<double>(s);
        svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
                           "stroke-width=\"2\"/>\n",
                           plot_right + 12.0, ly, plot_right + 36.0, ly, color);
        svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", plot_right + 42.0, ly + 4.0,
                           escape(ser.method));
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace arbk::plot
