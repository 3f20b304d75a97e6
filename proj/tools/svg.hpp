// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rollup_lab::cli
{
struct Series
{
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct Plot
{
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
};

/// Self-contained line chart: axes, ticks, one polyline per series, legend.
std::string render_svg(const Plot& plot);
}  // namespace rollup_lab::cli
