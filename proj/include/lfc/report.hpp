#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lfc/ineq.hpp"

namespace lfc {

enum class ReportFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "ineq,alpha,s,p,q,a,b,x,fn,lhs,rhs,slack,holds,notes";

std::string to_csv(const std::vector<IneqReport>& rows);
std::string to_json(const std::vector<IneqReport>& rows);
std::string render(const std::vector<IneqReport>& rows, ReportFormat format);

/// Inverse of to_json.
std::vector<IneqReport> parse_json_reports(std::string_view text);

/// Writes to path, or to stdout when path is "-". Throws std::runtime_error
/// naming the path when the file cannot be written.
void emit_report(const std::vector<IneqReport>& rows, ReportFormat format,
                 const std::string& path);

/// Marks a report as failed by an exception during evaluation.
IneqReport error_report(IneqId id, const IneqParams& params, const std::string& fn,
                        const std::string& message);
bool is_error(const IneqReport& r);

/// 0 all hold, 1 some violation, 2 some evaluation error.
int exit_code(const std::vector<IneqReport>& rows);

bool same_report(const IneqReport& l, const IneqReport& r);

}  // namespace lfc
