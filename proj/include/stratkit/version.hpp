#pragma once

namespace stratkit {

inline constexpr const char* kToolName = "stratkit";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace stratkit
