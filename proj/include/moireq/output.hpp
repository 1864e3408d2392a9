#pragma once

#include <string>

#include "moireq/config.hpp"

namespace moireq {

/// Fixed-width significand formatting for data files (9 significant digits).
std::string fmt9(double v);

/// First line of every CSV output: "# config=<hash> version=<v>".
std::string csv_comment_header(const RunConfig& cfg);

/// Write content to dir/name, creating dir if needed. Returns the full path.
std::string write_text_file(const std::string& dir, const std::string& name,
                            const std::string& content);

}  // namespace moireq
