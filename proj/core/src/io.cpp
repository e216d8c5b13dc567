#include "discloc/io.hpp"

#include <fstream>
#include <sstream>

#include "discloc/error.hpp"

namespace discloc::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

const json& object(const json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be an object");
  return j;
}

template <class F>
std::vector<int> object_map(const json& j, const char* what, std::size_t size, F lookup) {
  std::vector<int> out(size, -1);
  for (const auto& [key, value] : object(j, what).items()) {
    const int k = lookup(key);
    out[static_cast<std::size_t>(k)] = lookup(text(value, what));
  }
  for (std::size_t i = 0; i < size; ++i)
    if (out[i] == -1) throw InputError(std::string(what) + " is not total");
  return out;
}

json named_map(const std::vector<int>& values, const std::vector<std::string>& keys,
               const std::vector<std::string>& targets) {
  json out = json::object();
  for (std::size_t i = 0; i < values.size(); ++i)
    out[keys[i]] = targets[static_cast<std::size_t>(values[i])];
  return out;
}

std::vector<std::string> object_names(const FinCat& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.object_count(); ++i) out.push_back(c.object_name(static_cast<ObjId>(i)));
  return out;
}

std::vector<std::string> morphism_names(const FinCat& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.morphism_count(); ++i) out.push_back(c.morphism_name(static_cast<MorId>(i)));
  return out;
}

int element(const FiniteRing& r, const json& j) {
  if (j.is_number_integer()) {
    const auto k = j.get<long long>();
    if (k < 0 || static_cast<std::size_t>(k) >= r.size()) throw InputError("element index out of range");
    return static_cast<int>(k);
  }
  const auto label = text(j, "ring element");
  auto found = r.find(label);
  if (!found) throw InputError("unknown ring element \"" + label + "\"");
  return *found;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

RawCategory parse_category(const json& j) {
  RawCategory raw;
  for (const auto& o : array(field(j, "objects"), "objects")) raw.objects.push_back(text(o, "object id"));
  if (j.contains("morphisms"))
    for (const auto& m : array(j.at("morphisms"), "morphisms"))
      raw.morphisms.push_back({text(field(m, "id"), "morphism id"), text(field(m, "src"), "src"),
                               text(field(m, "dst"), "dst")});
  if (j.contains("compose"))
    for (const auto& e : array(j.at("compose"), "compose"))
      raw.compose.push_back({text(field(e, "g"), "g"), text(field(e, "f"), "f"), text(field(e, "gf"), "gf")});
  return raw;
}

FinCat load_category(const std::filesystem::path& path, const Caps& caps) {
  return FinCat::build(parse_category(load_json(path)), caps);
}

json to_json(const FinCat& c) {
  const RawCategory raw = c.to_raw();
  json out;
  out["objects"] = raw.objects;
  out["morphisms"] = json::array();
  for (const auto& m : raw.morphisms) out["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  out["compose"] = json::array();
  for (const auto& e : raw.compose) out["compose"].push_back({{"g", e.g}, {"f", e.f}, {"gf", e.gf}});
  return out;
}

MorphismClass parse_class(const FinCat& c, const json& j) {
  MorphismClass out(c.morphism_count());
  for (const auto& id : array(j, "morphism class")) out.insert(c.morphism(text(id, "morphism id")));
  return out;
}

ObjectSet parse_objects(const FinCat& c, const json& j) {
  ObjectSet out(c.object_count());
  for (const auto& id : array(j, "object set")) out.insert(c.object(text(id, "object id")));
  return out;
}

json to_json(const FinCat& c, const MorphismClass& cls) { return c.names(cls); }
json to_json(const FinCat& c, const ObjectSet& objs) { return c.names(objs); }

Reflector parse_reflector(const FinCat& c, const json& j) {
  auto obj = [&](const std::string& s) { return c.object(s); };
  auto mor = [&](const std::string& s) { return c.morphism(s); };
  Reflector r;
  r.members = parse_objects(c, field(j, "members"));
  r.functor.on_objects = object_map(field(j, "F_obj"), "F_obj", c.object_count(), obj);
  r.functor.on_morphisms = object_map(field(j, "F_mor"), "F_mor", c.morphism_count(), mor);
  std::vector<int> unit(c.object_count(), -1);
  for (const auto& [key, value] : object(field(j, "unit"), "unit").items())
    unit[static_cast<std::size_t>(c.object(key))] = c.morphism(text(value, "unit"));
  for (int u : unit)
    if (u == -1) throw InputError("unit is not total");
  r.unit.components = unit;
  return r;
}

json to_json(const FinCat& c, const Reflector& r) {
  const auto objs = object_names(c);
  const auto mors = morphism_names(c);
  json out;
  out["members"] = c.names(r.members);
  out["F_obj"] = named_map(r.functor.on_objects, objs, objs);
  out["F_mor"] = named_map(r.functor.on_morphisms, mors, mors);
  out["unit"] = named_map(r.unit.components, objs, mors);
  return out;
}

Monad parse_monad(const FinCat& c, const json& j) {
  auto obj = [&](const std::string& s) { return c.object(s); };
  auto mor = [&](const std::string& s) { return c.morphism(s); };
  Monad m;
  m.functor.on_objects = object_map(field(j, "T_obj"), "T_obj", c.object_count(), obj);
  m.functor.on_morphisms = object_map(field(j, "T_mor"), "T_mor", c.morphism_count(), mor);
  for (const char* key : {"unit", "mult"}) {
    std::vector<int> comps(c.object_count(), -1);
    for (const auto& [x, f] : object(field(j, key), key).items())
      comps[static_cast<std::size_t>(c.object(x))] = c.morphism(text(f, key));
    for (int v : comps)
      if (v == -1) throw InputError(std::string(key) + " is not total");
    (std::string(key) == "unit" ? m.unit : m.mult).components = comps;
  }
  return m;
}

json to_json(const FinCat& c, const Monad& m) {
  const auto objs = object_names(c);
  const auto mors = morphism_names(c);
  json out;
  out["T_obj"] = named_map(m.functor.on_objects, objs, objs);
  out["T_mor"] = named_map(m.functor.on_morphisms, mors, mors);
  out["unit"] = named_map(m.unit.components, objs, mors);
  out["mult"] = named_map(m.mult.components, objs, mors);
  return out;
}

StructureFile parse_structure(const json& j, const Caps& caps) {
  FinCat c = FinCat::build(parse_category(field(j, "category")), caps);
  ModelStructure m;
  m.cof = parse_class(c, field(j, "cof"));
  m.we = parse_class(c, field(j, "we"));
  m.fib = parse_class(c, field(j, "fib"));
  return {std::move(c), std::move(m)};
}

json to_json(const FinCat& c, const ModelStructure& m) {
  json out;
  out["provenance"] = std::string(to_string(m.provenance));
  if (m.subcategory) out["subcategory"] = c.names(*m.subcategory);
  out["cof"] = c.names(m.cof);
  out["we"] = c.names(m.we);
  out["fib"] = c.names(m.fib);
  return out;
}

FiniteRing parse_ring(const json& j, std::size_t max_size) {
  const std::string kind = text(field(j, "kind"), "kind");
  if (kind == "zn") {
    const auto& n = field(j, "n");
    if (!n.is_number_integer()) throw InputError("n must be an integer");
    return zn(n.get<int>(), max_size);
  }
  if (kind == "product") {
    std::vector<FiniteRing> factors;
    for (const auto& f : array(field(j, "factors"), "factors")) factors.push_back(parse_ring(f, max_size));
    return product(factors, max_size);
  }
  if (kind == "polyquo") {
    const FiniteRing base = parse_ring(field(j, "base"), max_size);
    std::vector<int> poly;
    for (const auto& c : array(field(j, "poly"), "poly")) {
      if (c.is_number_integer()) poly.push_back(base.integer(c.get<long long>()));
      else poly.push_back(element(base, c));
    }
    return polyquo(base, poly, max_size);
  }
  if (kind == "tables") {
    FiniteRing r;
    for (const auto& e : array(field(j, "elements"), "elements")) r.labels.push_back(text(e, "element"));
    const std::size_t n = r.size();
    auto table = [&](const char* key) {
      std::vector<int> out;
      const auto& rows = array(field(j, key), key);
      if (rows.size() != n) throw InputError(std::string(key) + " must have one row per element");
      for (const auto& row : rows) {
        if (array(row, key).size() != n) throw InputError(std::string(key) + " rows must have |R| entries");
        for (const auto& cell : row) out.push_back(element(r, cell));
      }
      return out;
    };
    r.add = table("add");
    r.mul = table("mul");
    r.zero = element(r, field(j, "zero"));
    r.one = element(r, field(j, "one"));
    return make_ring(std::move(r), max_size);
  }
  throw InputError("unknown ring kind \"" + kind + "\"");
}

std::vector<int> parse_ring_map(const FiniteRing& domain, const FiniteRing& codomain, const json& j) {
  std::vector<int> out(domain.size(), -1);
  if (j.is_array()) {
    if (j.size() != domain.size()) throw InputError("ring map must list one image per element");
    for (std::size_t i = 0; i < j.size(); ++i) out[i] = element(codomain, j[i]);
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      auto x = domain.find(key);
      if (!x) throw InputError("unknown ring element \"" + key + "\"");
      out[static_cast<std::size_t>(*x)] = element(codomain, value);
    }
    for (int v : out)
      if (v == -1) throw InputError("ring map is not total");
  } else {
    throw InputError("ring map must be an array or an object");
  }
  return out;
}

}  // namespace discloc::io
