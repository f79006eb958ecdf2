// Command-line driver: eval, verify and study.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace est::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Reports go to `out` unless an output path is set;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a 64-bit over the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

// CSV field quoting: fields containing a comma, quote or newline are wrapped in quotes
// with inner quotes doubled.
std::string csv_field(const std::string& field);

}  // namespace est::cli
