#pragma once

// Dataset emission and parsing. Numeric cells are written in scientific
// notation with 12 significant digits through std::to_chars, so output is
// locale-independent and byte-stable; re-emitting a parsed file reproduces
// it exactly. Comment lines start with '#' and carry the full parameter
// provenance of a sweep.

#include <iosfwd>
#include <string>
#include <vector>

#include "aligngain/analysis.hpp"

namespace aligngain {

/// 12-significant-digit scientific formatting, e.g. "1.05550860157e-01".
std::string format_sci12(double value);

/// Shorter 6-significant-digit variant for axis annotations.
std::string format_sci6(double value);

struct CsvDataset {
  std::vector<std::string> comments; // verbatim, without the leading "# "
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Grid -> dataset with provenance comments (preset/tool/fixed parameters).
CsvDataset to_dataset(const SweepGrid& grid, const std::string& label);

std::string emit_csv(const CsvDataset& data);
CsvDataset parse_csv(std::istream& in, const std::string& origin = "<stream>");
CsvDataset load_csv_file(const std::string& path);

/// Write a preset's sweep to `csv_path`; 1D grids also get a two-column
/// gnuplot-friendly companion next to it (same stem, .dat extension).
/// Returns the companion path, if one was written.
std::string write_figure_files(const FigurePreset& preset, const SweepGrid& grid,
                               const std::string& csv_path);

} // namespace aligngain
