#pragma once

// JSON text reports for critical points and estimates. Numbers are written as
// strings with 17 significant digits; large values also carry
// (log10 modulus, argument).

#include <string>

#include "bivalg/asymptotics.hpp"
#include "bivalg/critical.hpp"

namespace bivalg {

struct ReportContext {
  std::string h;          // H as text
  std::string direction;  // "r0:s0"
};

std::string critical_report(const CriticalAnalysis& analysis, const ReportContext& ctx);
std::string estimate_report(const std::vector<AsymptoticEstimate>& estimates, const ReportContext& ctx);

/// "1.2345678901234567e+57" for a real value; complex values as "a+bi".
std::string format_value(const LogComplex& v, int digits = 17);

}  // namespace bivalg
