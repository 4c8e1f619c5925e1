#pragma once

// Serialized reports. JSON is the canonical format; CSV carries one flat row
// per sample for plotting. Both are deterministic: identical inputs give
// identical bytes.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "complab/catalog.hpp"
#include "complab/classifier.hpp"
#include "complab/experiment.hpp"
#include "complab/search.hpp"

namespace complab {

enum class OutputFormat : std::uint8_t { json, csv };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

/// Version of the JSON layout described by schema/report.schema.json.
inline constexpr std::string_view kReportSchemaVersion = "1";
std::string_view tool_version();

/// Fixed CSV column order.
inline constexpr std::string_view kCsvHeader =
    "algorithm,n,instance_kind,trial,seed,comparisons,assignments,arithmetic,"
    "array_access,call,other,total";

/// Header line followed by one row per sample; `total` uses `weights`.
void write_csv(std::ostream& out, const std::vector<CostSample>& samples,
               const CostWeights& weights);

std::string classify_report_json(const Verdict& verdict);

struct RunRequest {
  AlgorithmId algorithm = AlgorithmId::min;
  std::size_t n = 0;
  InstanceKind instance_kind = InstanceKind::random;
  std::uint64_t seed = 0;
  WeightPreset weights = WeightPreset::all_ones;
};
std::string run_report_json(const RunRequest& request, const Instance& instance,
                            const CostSample& sample);

std::string search_report_json(AlgorithmId algorithm, std::size_t n,
                               const SearchConfig& config, WeightPreset weights,
                               const SearchOutcome& outcome);

std::string average_report_json(AlgorithmId algorithm, const StudyConfig& config,
                                const AverageResult& average);

/// Exact means only, for n = n_min..n_max within the enumeration limit.
std::string exact_average_report_json(AlgorithmId algorithm, WeightPreset weights,
                                      const std::vector<ExactAveragePoint>& points);

}  // namespace complab
