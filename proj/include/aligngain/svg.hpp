#pragma once

// Self-contained SVG line plot for 1D sweeps; no plotting dependency.

#include <string>

#include "aligngain/analysis.hpp"

namespace aligngain {

/// Render a 1D sweep as a minimal SVG line plot (axes box, zero line when
/// the range spans zero, log-x handling per the axis spacing). Deterministic
/// output. DomainError for 2D grids.
std::string render_line_plot_svg(const SweepGrid& grid, const std::string& title);

void write_svg_file(const SweepGrid& grid, const std::string& title,
                    const std::string& path); // IoError on failure

} // namespace aligngain
