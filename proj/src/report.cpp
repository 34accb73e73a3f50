#include "aflab/report.hpp"

#include <cstdio>
#include <sstream>

namespace aflab {

std::string format_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

}  // namespace

std::string report_json(const std::vector<CheckResult>& results, const std::string& shape_desc,
                        const std::string& grid_desc) {
    std::ostringstream os;
    int pass = 0, fail = 0, skipped = 0;
    os << "{\n";
    os << "  \"schema\": \"aflab-report-v1\",\n";
    os << "  \"shape\": " << quoted(shape_desc) << ",\n";
    os << "  \"grid\": " << quoted(grid_desc) << ",\n";
    os << "  \"results\": [\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CheckResult& r = results[i];
        if (r.verdict == "pass")
            ++pass;
        else if (r.verdict == "fail")
            ++fail;
        else
            ++skipped;
        os << "    {\"id\": " << quoted(r.id) << ", \"kind\": " << quoted(r.kind)
           << ", \"lhs\": " << format_num(r.lhs) << ", \"rhs\": " << format_num(r.rhs)
           << ", \"residual_or_slack\": " << format_num(r.residual_or_slack)
           << ", \"tol\": " << format_num(r.tol) << ", \"verdict\": " << quoted(r.verdict)
           << ", \"hypothesis_status\": " << quoted(r.hypothesis_status)
           << ", \"grid\": " << quoted(r.grid)
           << ", \"refinement_delta\": " << format_num(r.refinement_delta) << "}";
        os << (i + 1 < results.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"summary\": {\"pass\": " << pass << ", \"fail\": " << fail
       << ", \"skipped\": " << skipped << "}\n";
    os << "}\n";
    return os.str();
}

std::string report_csv(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << "id,kind,lhs,rhs,residual_or_slack,tol,verdict,hypothesis_status,grid,refinement_delta\n";
    for (const CheckResult& r : results) {
        std::string hyp = r.hypothesis_status;
        for (char& c : hyp)
            if (c == ',') c = ';';
        os << r.id << ',' << r.kind << ',' << format_num(r.lhs) << ',' << format_num(r.rhs) << ','
           << format_num(r.residual_or_slack) << ',' << format_num(r.tol) << ',' << r.verdict << ','
           << hyp << ',' << r.grid << ',' << format_num(r.refinement_delta) << '\n';
    }
    return os.str();
}

std::string convergence_json(const std::vector<ConvergenceRow>& rows, const std::string& check_id) {
    std::ostringstream os;
    os << "{\n  \"schema\": \"aflab-convergence-v1\",\n  \"check\": " << quoted(check_id)
       << ",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "    {\"grid\": " << quoted(rows[i].grid)
           << ", \"residual_or_slack\": " << format_num(rows[i].residual_or_slack)
           << ", \"verdict\": " << quoted(rows[i].verdict) << "}"
           << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << "grid,residual_or_slack,verdict\n";
    for (const ConvergenceRow& r : rows)
        os << r.grid << ',' << format_num(r.residual_or_slack) << ',' << r.verdict << '\n';
    return os.str();
}

std::string oracle_json(const std::vector<OracleReport>& reports) {
    std::ostringstream os;
    os << "{\n  \"schema\": \"aflab-oracle-v1\",\n  \"records\": [\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const OracleReport& r = reports[i];
        os << "    {\"quantity\": " << quoted(r.quantity)
           << ", \"oracle_value\": " << format_num(r.oracle_value)
           << ", \"main_value\": " << format_num(r.main_value)
           << ", \"rel_error\": " << format_num(r.rel_error) << "}"
           << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string oracle_csv(const std::vector<OracleReport>& reports) {
    std::ostringstream os;
    os << "quantity,oracle_value,main_value,rel_error\n";
    for (const OracleReport& r : reports)
        os << r.quantity << ',' << format_num(r.oracle_value) << ',' << format_num(r.main_value)
           << ',' << format_num(r.rel_error) << '\n';
    return os.str();
}

}  // namespace aflab
