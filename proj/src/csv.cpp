#include "aligngain/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "aligngain/errors.hpp"
#include "aligngain/version.hpp"

namespace aligngain {

namespace {

std::string format_sci(double value, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::scientific, precision);
  return std::string(buf, res.ptr);
}

void append_fixed_params(std::ostringstream& out, const GainModel& m) {
  out << "eta_n=" << format_sci12(m.eta_n);
  out << " p_g=" << format_sci12(m.p_g);
  out << " q_g=" << format_sci12(m.q_g);
  if (m.eta_mu) out << " eta_mu=" << format_sci12(*m.eta_mu);
  if (m.inv_eta_mu) out << " inv_eta_mu=" << format_sci12(*m.inv_eta_mu);
  if (m.p_m) out << " p_m=" << format_sci12(*m.p_m);
  if (m.eta_q) out << " eta_q=" << format_sci12(*m.eta_q);
  if (m.q_m) out << " q_m=" << format_sci12(*m.q_m);
}

std::string axis_comment(const SweepAxis& axis) {
  std::ostringstream out;
  out << axis.name << " spacing="
      << (axis.spacing == AxisSpacing::log ? "log" : "linear")
      << " min=" << format_sci12(axis.min) << " max=" << format_sci12(axis.max)
      << " count=" << axis.count;
  return out.str();
}

} // namespace

std::string format_sci12(double value) { return format_sci(value, 11); }
std::string format_sci6(double value) { return format_sci(value, 5); }

CsvDataset to_dataset(const SweepGrid& grid, const std::string& label) {
  CsvDataset d;
  d.comments.push_back("aligngain " ALIGNGAIN_VERSION " dataset");
  d.comments.push_back("label: " + label);
  d.comments.push_back("model: " + to_string(grid.model.form));
  {
    std::ostringstream fixed;
    fixed << "fixed: ";
    append_fixed_params(fixed, grid.model);
    d.comments.push_back(fixed.str());
  }
  d.comments.push_back("axis1: " + axis_comment(grid.axis1));
  if (grid.axis2) d.comments.push_back("axis2: " + axis_comment(*grid.axis2));

  d.columns.push_back(grid.axis1.name);
  if (grid.axis2) d.columns.push_back(grid.axis2->name);
  d.columns.push_back("scaled_gain");

  for (int i1 = 0; i1 < grid.axis1.count; ++i1) {
    if (grid.axis2) {
      for (int i2 = 0; i2 < grid.axis2->count; ++i2)
        d.rows.push_back(
            {grid.axis1.at(i1), grid.axis2->at(i2), grid.value_at(i1, i2)});
    } else {
      d.rows.push_back({grid.axis1.at(i1), grid.value_at(i1)});
    }
  }
  return d;
}

std::string emit_csv(const CsvDataset& data) {
  std::ostringstream out;
  for (const auto& c : data.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < data.columns.size(); ++i) {
    if (i) out << ',';
    out << data.columns[i];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    if (row.size() != data.columns.size())
      throw IoError("emit_csv: row width does not match the header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_sci12(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

CsvDataset parse_csv(std::istream& in, const std::string& origin) {
  CsvDataset d;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::size_t start = 1;
      if (start < line.size() && line[start] == ' ') ++start;
      d.comments.push_back(line.substr(start));
      continue;
    }

    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }

    if (!header_seen) {
      d.columns = cells;
      header_seen = true;
      continue;
    }
    if (cells.size() != d.columns.size())
      throw IoError(origin + ":" + std::to_string(lineno) +
                    ": row width does not match the header");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() + cell.size() || cell.empty())
        throw IoError(origin + ":" + std::to_string(lineno) +
                      ": bad numeric cell '" + cell + "'");
      row.push_back(v);
    }
    d.rows.push_back(std::move(row));
  }
  if (!header_seen) throw IoError(origin + ": no header row found");
  return d;
}

CsvDataset load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset '" + path + "'");
  return parse_csv(in, path);
}

std::string write_figure_files(const FigurePreset& preset, const SweepGrid& grid,
                               const std::string& csv_path) {
  const CsvDataset dataset = to_dataset(grid, preset.name);
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + csv_path + "'");
    out << emit_csv(dataset);
    if (!out) throw IoError("write failed for '" + csv_path + "'");
  }
  if (!preset.is_1d()) return {};

  std::string companion = csv_path;
  if (const auto dot = companion.rfind('.'); dot != std::string::npos &&
                                             companion.find('/', dot) == std::string::npos)
    companion.resize(dot);
  companion += ".dat";

  std::ofstream out(companion, std::ios::binary);
  if (!out) throw IoError("cannot write '" + companion + "'");
  out << "# gnuplot companion for " << preset.name << ": "
      << grid.axis1.name << " vs scaled_gain\n";
  for (int i = 0; i < grid.axis1.count; ++i)
    out << format_sci12(grid.axis1.at(i)) << ' '
        << format_sci12(grid.value_at(i)) << '\n';
  if (!out) throw IoError("write failed for '" + companion + "'");
  return companion;
}

} // namespace aligngain
