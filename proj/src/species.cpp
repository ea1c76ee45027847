#include "aligngain/species.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string_view>

#include "aligngain/errors.hpp"

namespace aligngain {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, const std::string& origin, int line,
                    std::string_view key) {
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty())
    throw ConfigError(origin + ":" + std::to_string(line) + ": value of '" +
                      std::string(key) + "' is not a number: '" + buf + "'");
  return v;
}

struct TransitionDraft {
  int line = 0;
  std::map<std::string, double> numbers;
  std::optional<Level> level;

  LevelTransition finish(const std::string& origin) const {
    auto has = [&](const char* k) { return numbers.count(k) > 0; };
    auto get = [&](const char* k) { return numbers.at(k); };

    if (!level)
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": [transition] missing 'level'");
    if (!has("omega_lj_rad_s"))
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": [transition] missing 'omega_lj_rad_s'");

    const bool d_pair = has("d_par_debye") || has("d_perp_debye");
    const bool f_pair = has("f_par") || has("f_perp");
    if (d_pair == f_pair)
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": [transition] needs either d_par_debye/d_perp_debye "
                        "or f_par/f_perp");
    if (d_pair && !(has("d_par_debye") && has("d_perp_debye")))
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": [transition] needs both d_par_debye and d_perp_debye");
    if (f_pair && !(has("f_par") && has("f_perp")))
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": [transition] needs both f_par and f_perp");

    LevelTransition t;
    t.level = *level;
    t.entry = d_pair ? TransitionEntry::from_dipoles(get("omega_lj_rad_s"),
                                                     get("d_par_debye"),
                                                     get("d_perp_debye"))
                     : TransitionEntry::from_strengths(get("omega_lj_rad_s"),
                                                       get("f_par"),
                                                       get("f_perp"));
    return t;
  }
};

bool is_transition_key(std::string_view key) {
  return key == "omega_lj_rad_s" || key == "d_par_debye" ||
         key == "d_perp_debye" || key == "f_par" || key == "f_perp" ||
         key == "level";
}

} // namespace

std::vector<TransitionEntry> SpeciesConfig::transitions_for(Level level) const {
  std::vector<TransitionEntry> out;
  for (const auto& t : transitions)
    if (t.level == level) out.push_back(t.entry);
  return out;
}

SpeciesConfig parse_species(std::istream& in, const std::string& origin) {
  SpeciesConfig cfg;
  std::map<std::string, std::string> scalars;
  std::optional<TransitionDraft> draft;
  std::vector<TransitionDraft> drafts;

  auto close_draft = [&]() {
    if (draft) {
      drafts.push_back(*draft);
      draft.reset();
    }
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view sv(raw);
    if (const auto hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    sv = trim(sv);
    if (sv.empty()) continue;

    if (sv.front() == '[') {
      if (sv != "[transition]")
        throw ConfigError(origin + ":" + std::to_string(line) +
                          ": unknown section '" + std::string(sv) + "'");
      close_draft();
      draft = TransitionDraft{};
      draft->line = line;
      continue;
    }

    const auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": expected 'key = value', got '" + std::string(sv) + "'");
    const std::string key{trim(sv.substr(0, eq))};
    const std::string_view value = trim(sv.substr(eq + 1));

    if (draft) {
      if (!is_transition_key(key))
        throw ConfigError(origin + ":" + std::to_string(line) +
                          ": unknown transition key '" + key + "'");
      if (key == "level") {
        if (draft->level)
          throw ConfigError(origin + ":" + std::to_string(line) +
                            ": duplicate 'level' in [transition]");
        if (value == "g") draft->level = Level::g;
        else if (value == "m") draft->level = Level::m;
        else
          throw ConfigError(origin + ":" + std::to_string(line) +
                            ": level must be 'g' or 'm'");
      } else {
        if (draft->numbers.count(key))
          throw ConfigError(origin + ":" + std::to_string(line) +
                            ": duplicate '" + key + "' in [transition]");
        draft->numbers[key] = parse_number(value, origin, line, key);
      }
      continue;
    }

    if (key != "name" && key != "mu_g_debye" && key != "mu_m_debye" &&
        key != "dalpha_g_cm3" && key != "dalpha_m_cm3")
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": unknown key '" + key + "'");
    if (scalars.count(key))
      throw ConfigError(origin + ":" + std::to_string(line) +
                        ": duplicate key '" + key + "'");
    scalars[key] = std::string(value);
    if (key != "name") (void)parse_number(value, origin, line, key);
  }
  close_draft();

  if (!scalars.count("name"))
    throw ConfigError(origin + ": missing required key 'name'");
  cfg.species.name = scalars.at("name");
  auto number_or = [&](const char* key, double fallback) {
    return scalars.count(key)
               ? parse_number(scalars.at(key), origin, 0, key)
               : fallback;
  };
  cfg.species.mu_g = number_or("mu_g_debye", 0.0);
  cfg.species.mu_m = number_or("mu_m_debye", 0.0);
  cfg.species.dalpha_g = number_or("dalpha_g_cm3", 0.0);
  cfg.species.dalpha_m = number_or("dalpha_m_cm3", 0.0);
  if (cfg.species.mu_g < 0.0 || cfg.species.mu_m < 0.0)
    throw ConfigError(origin + ": dipole magnitudes must be >= 0");

  for (const auto& d : drafts) cfg.transitions.push_back(d.finish(origin));
  return cfg;
}

SpeciesConfig load_species_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open species file '" + path + "'");
  return parse_species(in, path);
}

} // namespace aligngain
