// report_io.hh -- human-readable and JSON renderings of root reports.

#ifndef MTPROOT_REPORT_IO_HH
#define MTPROOT_REPORT_IO_HH

#include <mtproot/isolator.hh>

#include <string>

namespace mtproot {

enum class ReportFormat { text, json };

std::string format_report(const MTPRootReport& report, ReportFormat mode);

// inverse of the JSON rendering
MTPRootReport parse_report_json(const std::string& json_text);

} // namespace mtproot

#endif
