#pragma once

#include "harmonia/analysis.hpp"
#include "harmonia/generator.hpp"
#include "harmonia/scales.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace harmonia::io {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Markdown, Plain };

std::optional<OutputFormat> parse_format(std::string_view text);
std::string_view format_name(OutputFormat format);

/// Fixed-point text with "-0.000" normalized to "0.000".
std::string fixed(double value, int decimals);

/// {"name": ..., "tones": ["num/den", ...]}
Json scale_to_json(std::string_view name, const Scale& scale);
/// Reads the "tones" array. Throws RatioError/ScaleError or nlohmann::json::exception.
Scale scale_from_json(const nlohmann::json& doc);
Scale parse_scale_json(std::string_view text);

/// Header tone,num,den,cents.
std::string scale_to_csv(const Scale& scale);

/// {"seed", "generations": [{"added", "witnesses"}], "fixpoint", "final"}
Json trace_to_json(const ClosureTrace& trace);

/// Header row,col,mean,class.
std::string table_to_csv(const MeanTable& table);
Json table_to_json(const MeanTable& table);
/// Upper-triangle grid: **bold** means in the scale, *italic* means in the limit.
std::string table_to_markdown(std::string_view name, const MeanTable& table);

} // namespace harmonia::io
