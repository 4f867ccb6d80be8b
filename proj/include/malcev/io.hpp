#pragma once

#include <string>

namespace malcev::iofmt {

// Fixed-width scientific rendering with 17 significant digits
// (e.g. 2.9470964541972780e-08). All floating-point fields in emitted JSON
// and CSV artifacts go through this so identical inputs yield identical
// bytes.
std::string fmt_double(double v);

std::string fmt_int(long long v);

// JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

// Current time as an ISO-8601 UTC stamp, e.g. "2026-08-19T12:34:56Z".
std::string iso8601_utc_now();

}  // namespace malcev::iofmt
