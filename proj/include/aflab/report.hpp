#pragma once

#include <string>
#include <vector>

#include "aflab/checks.hpp"
#include "aflab/oracle.hpp"

namespace aflab {

/// Deterministic report writers: fixed field order, numbers printed with
/// 17 significant digits, results already sorted by id by the runner.
std::string report_json(const std::vector<CheckResult>& results, const std::string& shape_desc,
                        const std::string& grid_desc);
std::string report_csv(const std::vector<CheckResult>& results);

std::string convergence_json(const std::vector<ConvergenceRow>& rows, const std::string& check_id);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

std::string oracle_json(const std::vector<OracleReport>& reports);
std::string oracle_csv(const std::vector<OracleReport>& reports);

/// Shared numeric formatting (%.17g).
std::string format_num(double v);

}  // namespace aflab
