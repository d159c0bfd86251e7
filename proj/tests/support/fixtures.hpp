#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>

#include "probdef/constraints.hpp"
#include "probdef/entail.hpp"

#ifndef PROBDEF_DATA_DIR
#error "PROBDEF_DATA_DIR must point at the data/ directory"
#endif

namespace probdef::testing {

inline std::filesystem::path data_dir() { return PROBDEF_DATA_DIR; }
inline std::filesystem::path theory_path(const std::string& name) {
  return data_dir() / "theories" / (name + ".pdt");
}
inline DefaultTheory theory(const std::string& name) { return load_theory(theory_path(name)); }

inline Rational q(const char* text) { return parse_rational(text); }
inline Interval proper(const char* lower, const char* upper) {
  return Interval::proper(q(lower), q(upper));
}
inline Query query(const char* text) { return parse_query(text); }
inline KnowledgeBase kb(const char* text) { return parse_kb(text); }

// Evidence strings used throughout the published example rows.
inline constexpr const char* kBird = "(bird|true)[1,1]";
inline constexpr const char* kBirdYellow = "(bird & yellow|true)[1,1]";
inline constexpr const char* kPenguin = "(penguin|true)[1,1]";
inline constexpr const char* kPenguinYellow = "(penguin & yellow|true)[1,1]";
inline constexpr const char* kMagpie = "(magpie|true)[1,1]";
inline constexpr const char* kPenguinMetalWings = "(penguin & metal_wings|true)[1,1]";
inline constexpr const char* kMostlyBirdSomePenguin = "(bird|true)[0.9,1] & (penguin|true)[0.1,1]";
inline constexpr const char* kMostlyBirdMostlyPenguin =
    "(bird|true)[0.9,1] & (penguin|true)[0.9,1]";

// Index of the default printed as `text` in `t`.
inline std::size_t default_index(const DefaultTheory& t, const std::string& text) {
  for (std::size_t i = 0; i < t.defaults.size(); ++i) {
    if (t.defaults[i].to_string() == text) return i;
  }
  throw std::runtime_error("no default " + text);
}

}  // namespace probdef::testing

namespace probdef {
inline std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.to_string(); }
}  // namespace probdef
