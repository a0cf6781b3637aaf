#pragma once

#include <string>
#include <string_view>

#include "ncalg/analysis.hpp"

namespace ncalg {

enum class ReportFormat { json, text, dot_bundle };

/// "json", "text" or "dot-bundle"; anything else is a ValidationError.
ReportFormat parse_report_format(std::string_view text);

/// Deterministic rendering; equal reports give byte-identical output.
std::string render_report(const AnalysisReport& report, ReportFormat format);

}  // namespace ncalg
