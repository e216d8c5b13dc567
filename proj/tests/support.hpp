#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/io.hpp"

namespace testing {

inline std::filesystem::path corpus(const std::string& rel) {
  return std::filesystem::path(DISCLOC_CORPUS_DIR) / rel;
}

inline discloc::FinCat load(const std::string& name) {
  return discloc::io::load_category(corpus(name + ".json"));
}

// Corpus categories satisfying the localization hypotheses.
inline const std::vector<std::string>& bicomplete_names() {
  static const std::vector<std::string> names = {"chain2", "chain3", "chain4", "chain5",
                                                 "chain6", "diamond", "pentagon", "iso_pair"};
  return names;
}

inline const std::vector<std::string>& all_names() {
  static const std::vector<std::string> names = {
      "chain2",  "chain3",    "chain4",    "chain5",        "chain6",   "diamond",      "pentagon",
      "iso_pair", "monoid_z2", "monoid_idem", "parallel_pair", "pointed_sets2"};
  return names;
}

inline discloc::ObjectSet objs(const discloc::FinCat& c, const std::vector<std::string>& names) {
  discloc::ObjectSet s(c.object_count());
  for (const auto& n : names) s.insert(c.object(n));
  return s;
}

inline discloc::MorphismClass mors(const discloc::FinCat& c, const std::vector<std::string>& names) {
  discloc::MorphismClass s(c.morphism_count());
  for (const auto& n : names) s.insert(c.morphism(n));
  return s;
}

}  // namespace testing
