#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lgt {

// FNV-1a, 64-bit: the digest recorded in result manifests and CSV headers.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

// Fixed %.12e rendering so output files are byte-identical across runs.
std::string format_sci(double v);

// Writes bytes as-is (LF line endings regardless of platform).
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

struct CsvTable {
  std::vector<std::string> comments;  // emitted as "# <line>"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
  std::string to_string() const;
};

struct SvgSeries {
  std::string label;
  std::vector<double> y;
};

// Minimal self-contained line plot; data files remain the source of truth.
std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel,
                          const std::vector<double>& x,
                          const std::vector<SvgSeries>& series,
                          bool log_x = false);

}  // namespace lgt
