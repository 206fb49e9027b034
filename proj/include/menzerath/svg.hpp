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

#pragma once

#include "menzerath/dist_core.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace menzerath {

enum class SvgLayout { JointPanel, CurvePanel, ComparisonPanel, Composite };

struct PlotSeries {
    std::string name;
    MalCurve curve;
    std::optional<double> rss;
    /// Classical series go to the comparison panel, the rest to the curve panel.
    bool classical = true;
};

/// Standalone SVG 1.1 with no external references. Panel groups carry the
/// ids "joint", "mal" and "compare"; Composite uses a 960x720 viewBox with
/// the joint distribution on top and the two curve panels below.
///
/// Joint panel: one square per observed cell with area proportional to its
/// count, shaded z < x region for segment tables, optional sample scatter.
std::string render_svg(const JointFrequencyTable& table, std::span<const PlotSeries> models,
                       std::optional<std::span<const LengthPair>> samples, SvgLayout layout);

} // namespace menzerath
