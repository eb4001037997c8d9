#pragma once

#include "lookalike/models.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lookalike {

/// JSON form with fixed field order: m, kind, r, s, p_m, p_2m, pm_squared,
/// a_hat, q8_kappa, homotopy_class, pl {admits, count}, diff {admits,
/// max_count}, psc, bordism.  Rationals are {num, den} integer pairs,
/// never floats.
nlohmann::ordered_json report_to_json(const InvariantReport &report);

/// Column names shared by the CSV and markdown renderings (same order as
/// the JSON fields).
const std::vector<std::string> &report_columns();

std::vector<std::string> report_to_cells(const InvariantReport &report);

std::string reports_to_json(const std::vector<InvariantReport> &reports);
std::string reports_to_csv(const std::vector<InvariantReport> &reports);
std::string reports_to_markdown(const std::vector<InvariantReport> &reports);
std::string reports_to_text(const std::vector<InvariantReport> &reports);

std::string report_to_text(const InvariantReport &report);

}  // namespace lookalike
