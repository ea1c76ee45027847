#pragma once

// Line-oriented key = value species files:
//
//   # comment
//   name = phtalimide
//   mu_g_debye = 5.5
//   mu_m_debye = 0.0
//   dalpha_g_cm3 = 0.0
//   dalpha_m_cm3 = 0.0
//
//   [transition]
//   level = g
//   omega_lj_rad_s = 3.2e15
//   d_par_debye = 6.0
//   d_perp_debye = 1.5
//
// A [transition] section may give dipoles (d_par_debye, d_perp_debye) or
// oscillator strengths (f_par, f_perp), never both. Unknown keys and
// duplicate keys are rejected.

#include <iosfwd>
#include <string>
#include <vector>

#include "aligngain/gain.hpp"
#include "aligngain/polarizability.hpp"

namespace aligngain {

enum class Level { g, m };

struct LevelTransition {
  Level level = Level::g;
  TransitionEntry entry;
};

struct SpeciesConfig {
  MolecularSpecies species;
  std::vector<LevelTransition> transitions;

  std::vector<TransitionEntry> transitions_for(Level level) const;
};

SpeciesConfig parse_species(std::istream& in, const std::string& origin = "<stream>");
SpeciesConfig load_species_file(const std::string& path); // IoError if unreadable

} // namespace aligngain
