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

#include "menzerath/classical.hpp"
#include "menzerath/copula.hpp"
#include "menzerath/dist_core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace menzerath {

inline constexpr int kReportSchemaVersion = 1;

/// Declaration order is the report order.
enum class ModelKind {
    Hyperbolic,
    Altmann,
    AltmannDirect,
    Gaussian,
    Lognormal,
    Copula,
    CopulaBoundaries,
};

std::string_view model_name(ModelKind kind);
std::optional<ModelKind> parse_model_name(std::string_view name);
std::string_view estimator_name(RhoEstimator estimator);
std::optional<RhoEstimator> parse_estimator_name(std::string_view name);

/// Models closed-form in x that the comparison panel groups together.
bool is_classical(ModelKind kind);

struct ModelRequest {
    std::set<ModelKind> models;
    RhoEstimator estimator = RhoEstimator::PearsonRaw;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
};

struct ModelBlock {
    ModelKind kind = ModelKind::Hyperbolic;
    std::string derivation;
    Space space = Space::Raw;
    std::optional<RhoEstimator> estimator;
    std::map<std::string, double> parameters;
    /// Boolean diagnostics such as rho_clamped.
    std::map<std::string, bool> flags;
    MalCurve curve;
    double rss = 0.0;
    std::optional<double> infeasible_mass;
    /// Model joint distribution in the segment domain, where defined.
    std::optional<JointProbabilityTable> cells;
};

struct DatasetSummary {
    std::int64_t total = 0;
    std::size_t cells = 0;
    std::vector<std::int64_t> support_x;
    std::vector<std::int64_t> support_z;
    WeightedMoments x;
    WeightedMoments z;
    std::optional<WeightedMoments> log_x;
    std::optional<WeightedMoments> log_z;
    std::optional<double> correlation_raw;
    std::optional<double> correlation_log;
};

struct ComparisonReport {
    int schema_version = kReportSchemaVersion;
    DatasetSummary dataset;
    MalCurve empirical;
    std::vector<ModelBlock> models;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

DatasetSummary summarize(const JointFrequencyTable& table);

/// Fits every requested model on a segment-domain table, evaluates each
/// curve on the empirical x support and scores it by RSS. Fit errors
/// (DegenerateVariance, LogOfNonpositive, ...) propagate.
ComparisonReport compare_models(const JointFrequencyTable& table, const ModelRequest& request);

/// Canonical JSON: sorted keys, shortest round-trip numbers, two-space
/// indent, trailing newline.
std::string write_report(const ComparisonReport& report);

/// "x,y_empirical,y_<model>,..." on the empirical x support.
std::string write_curves_csv(const ComparisonReport& report);

/// "x,z,count,p_<model>,..." over the union of observed and model cells,
/// for models that define a joint distribution.
std::string write_cells_csv(const JointFrequencyTable& table, const ComparisonReport& report);

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

} // namespace menzerath
