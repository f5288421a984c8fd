#pragma once

#include <string>

#include "resnet/analysis.hpp"
#include "resnet/reduction.hpp"

namespace resnet {

// Machine-stable serializations: fixed column and key order, doubles
// printed with 17 significant digits, rationals as "p/q" strings.

/// Columns: n,R_n,diff,abs_dev_from_limit. The baseline row leaves the last
/// two columns empty.
std::string scan_to_csv(const ScanReport& report);
std::string scan_to_json(const ScanReport& report);

/// Columns: u,v,u_label,v_label,R (one row per diametrical pair).
std::string diameter_to_csv(const DiameterReport& report);
std::string diameter_to_json(const DiameterReport& report);

std::string diameter_delta_to_csv(const DiameterDeltaReport& report);

/// One line per step: kind, removed/added vertices and edges.
std::string trace_to_text(const ReductionTrace& trace);
std::string trace_to_json(const ReductionTrace& trace);

/// 17-significant-digit text for a double.
std::string format_double(double value);
/// 15 significant digits, the precision used for spectral values on the CLI.
std::string format_spectral(double value);

}  // namespace resnet
