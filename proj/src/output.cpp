#include "moireq/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "moireq/version.hpp"

namespace moireq {

std::string fmt9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_comment_header(const RunConfig& cfg) {
  return "# config=" + config_hash(cfg) + " version=" + kVersion + "\n";
}

std::string write_text_file(const std::string& dir, const std::string& name,
                            const std::string& content) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
  return path;
}

}  // namespace moireq
