#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "discloc/fincat.hpp"
#include "discloc/model.hpp"
#include "discloc/monad.hpp"
#include "discloc/reflect.hpp"
#include "discloc/ring.hpp"

namespace discloc::io {

using nlohmann::json;

/// Parses a file as JSON; InputError on unreadable files or bad syntax.
json load_json(const std::filesystem::path& path);

/// {"objects": [...], "morphisms": [{"id","src","dst"}], "compose": [{"g","f","gf"}]}
RawCategory parse_category(const json& j);
FinCat load_category(const std::filesystem::path& path, const Caps& caps = {});
json to_json(const FinCat& c);

/// Sorted id lists.
MorphismClass parse_class(const FinCat& c, const json& j);
ObjectSet parse_objects(const FinCat& c, const json& j);
json to_json(const FinCat& c, const MorphismClass& cls);
json to_json(const FinCat& c, const ObjectSet& objs);

/// {"members", "F_obj": {x: y}, "F_mor": {f: g}, "unit": {x: f}}
Reflector parse_reflector(const FinCat& c, const json& j);
json to_json(const FinCat& c, const Reflector& r);

/// {"T_obj", "T_mor", "unit", "mult"}; maps keyed by ids.
Monad parse_monad(const FinCat& c, const json& j);
json to_json(const FinCat& c, const Monad& m);

struct StructureFile {
  FinCat category;
  ModelStructure structure;
};

/// {"category": {...}, "cof": [...], "we": [...], "fib": [...]}
StructureFile parse_structure(const json& j, const Caps& caps = {});
json to_json(const FinCat& c, const ModelStructure& m);

/// {"kind":"zn","n":4} | {"kind":"product","factors":[...]} |
/// {"kind":"polyquo","base":{...},"poly":[...]} |
/// {"kind":"tables","elements":[...],"add":[[...]],"mul":[[...]],"zero","one"}
FiniteRing parse_ring(const json& j, std::size_t max_size = kDefaultMaxRingSize);

/// Element map as an array (by position or label) or an object label → label.
std::vector<int> parse_ring_map(const FiniteRing& domain, const FiniteRing& codomain, const json& j);

}  // namespace discloc::io
