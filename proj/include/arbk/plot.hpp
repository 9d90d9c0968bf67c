#pragma once
#include <arbk/experiments.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace arbk::plot {

struct Series
{
    std::string method;
    std::vector<int> epochs;
    std::vector<double> mean;
    std::vector<double> min;
    std::vector<double> max;
};

/// Fixed legend colors: bk blue, arbk red, acd-dual green, anything else gray.
std::string_view method_color(std::string_view method) noexcept;

/// Values below this are drawn at the floor of the log axis.
inline constexpr double kLogFloor = 1e-16;

/// One series per method (table order) for the given metric.
std::vector<Series> series_for_metric(const AggregateTable& table, std::string_view metric);

/**
 * Self-contained SVG line chart with a log-scale y axis: one mean polyline
 * per series over a shaded min-max band, decade ticks, a legend and axis
 * labels "epochs" and `metric`. Output depends only on the arguments.
 * Throws InvalidArgument when there is nothing to draw.
 */
std::string render_svg(const std::vector<Series>& series, std::string_view metric);

} // namespace arbk::plot
