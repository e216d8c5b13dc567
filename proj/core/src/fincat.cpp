#include "discloc/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "discloc/error.hpp"

namespace discloc {

std::string identity_name(std::string_view object) {
  return "id_" + std::string(object);
}

namespace {

std::string comp_label(const std::string& g, const std::string& f) { return g + "∘" + f; }

ValidationReport structural(std::string message) {
  ValidationReport r;
  r.kind = ValidationReport::Kind::structural;
  r.message = std::move(message);
  return r;
}

ValidationReport law(std::string name, std::string message, std::vector<std::string> witness) {
  ValidationReport r;
  r.kind = ValidationReport::Kind::law;
  r.law = std::move(name);
  r.message = std::move(message);
  r.witness = std::move(witness);
  return r;
}

}  // namespace

struct CategoryAssembler {
  static ValidationReport run(const RawCategory& raw, const Caps& caps, FinCat* out) {
    if (raw.objects.size() > caps.max_objects)
      return structural("category has " + std::to_string(raw.objects.size()) +
                        " objects, cap is " + std::to_string(caps.max_objects));
    const std::size_t total = raw.objects.size() + raw.morphisms.size();
    if (total > caps.max_morphisms)
      return structural("category has " + std::to_string(total) +
                        " morphisms including identities, cap is " +
                        std::to_string(caps.max_morphisms));

    std::vector<std::string> objects = raw.objects;
    std::sort(objects.begin(), objects.end());
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i].empty()) return structural("empty object id");
      if (i > 0 && objects[i] == objects[i - 1])
        return structural("duplicate object id '" + objects[i] + "'");
    }
    auto object_index = [&](const std::string& name) -> std::optional<ObjId> {
      auto it = std::lower_bound(objects.begin(), objects.end(), name);
      if (it == objects.end() || *it != name) return std::nullopt;
      return static_cast<ObjId>(it - objects.begin());
    };

    struct Named {
      std::string name;
      ObjId src;
      ObjId dst;
      bool identity;
    };
    std::vector<Named> named;
    std::set<std::string> reserved;
    for (const auto& o : objects) {
      ObjId x = *object_index(o);
      named.push_back({identity_name(o), x, x, true});
      reserved.insert(identity_name(o));
    }
    for (const auto& m : raw.morphisms) {
      if (m.id.empty()) return structural("empty morphism id");
      if (reserved.count(m.id))
        return structural("morphism id '" + m.id + "' collides with a reserved identity id");
      auto s = object_index(m.src);
      auto d = object_index(m.dst);
      if (!s) return structural("morphism '" + m.id + "' has unknown src '" + m.src + "'");
      if (!d) return structural("morphism '" + m.id + "' has unknown dst '" + m.dst + "'");
      named.push_back({m.id, *s, *d, false});
    }
    std::sort(named.begin(), named.end(),
              [](const Named& a, const Named& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < named.size(); ++i)
      if (named[i].name == named[i - 1].name)
        return structural("duplicate morphism id '" + named[i].name + "'");

    const std::size_t n_mor = named.size();
    auto morphism_index = [&](const std::string& name) -> std::optional<MorId> {
      auto it = std::lower_bound(named.begin(), named.end(), name,
                                 [](const Named& a, const std::string& b) { return a.name < b; });
      if (it == named.end() || it->name != name) return std::nullopt;
      return static_cast<MorId>(it - named.begin());
    };

    std::vector<MorId> identity(objects.size(), kNoMorphism);
    for (std::size_t i = 0; i < n_mor; ++i)
      if (named[i].identity) identity[static_cast<std::size_t>(named[i].src)] = static_cast<MorId>(i);

    std::vector<MorId> table(n_mor * n_mor, kNoMorphism);
    auto at = [&](MorId g, MorId f) -> MorId& {
      return table[static_cast<std::size_t>(g) * n_mor + static_cast<std::size_t>(f)];
    };

    std::optional<ValidationReport> first_law;
    auto note_law = [&](ValidationReport r) {
      if (!first_law) first_law = std::move(r);
    };

    for (const auto& e : raw.compose) {
      auto g = morphism_index(e.g);
      auto f = morphism_index(e.f);
      auto gf = morphism_index(e.gf);
      if (!g) return structural("composition entry references unknown morphism '" + e.g + "'");
      if (!f) return structural("composition entry references unknown morphism '" + e.f + "'");
      if (!gf) return structural("composition entry references unknown morphism '" + e.gf + "'");
      const auto& G = named[static_cast<std::size_t>(*g)];
      const auto& F = named[static_cast<std::size_t>(*f)];
      const auto& GF = named[static_cast<std::size_t>(*gf)];
      if (G.src != F.dst)
        return structural("composition entry " + comp_label(e.g, e.f) + " is not a composable pair");
      MorId& slot = at(*g, *f);
      if (slot != kNoMorphism && slot != *gf)
        return structural("conflicting composition entries for " + comp_label(e.g, e.f));
      slot = *gf;
      if (GF.src != F.src || GF.dst != G.dst)
        note_law(law("src/dst",
                     "composite " + comp_label(e.g, e.f) + " = " + e.gf +
                         " does not run from src(" + e.f + ") to dst(" + e.g + ")",
                     {e.g, e.f, e.gf}));
    }

    // Identity composites are implied; a listed entry that disagrees is an
    // identity-law violation.
    for (std::size_t fi = 0; fi < n_mor; ++fi) {
      const MorId f = static_cast<MorId>(fi);
      const MorId left = identity[static_cast<std::size_t>(named[fi].dst)];
      const MorId right = identity[static_cast<std::size_t>(named[fi].src)];
      for (auto [g, h] : {std::pair{left, f}, std::pair{f, right}}) {
        MorId& slot = at(g, h);
        if (slot == kNoMorphism) {
          slot = f;
        } else if (slot != f) {
          note_law(law("identity",
                       comp_label(named[static_cast<std::size_t>(g)].name,
                                  named[static_cast<std::size_t>(h)].name) +
                           " should be " + named[fi].name,
                       {named[static_cast<std::size_t>(g)].name,
                        named[static_cast<std::size_t>(h)].name,
                        named[static_cast<std::size_t>(slot)].name}));
        }
      }
    }

    std::vector<std::string> missing;
    for (std::size_t g = 0; g < n_mor; ++g)
      for (std::size_t f = 0; f < n_mor; ++f)
        if (named[g].src == named[f].dst && table[g * n_mor + f] == kNoMorphism)
          missing.push_back(comp_label(named[g].name, named[f].name));
    if (!missing.empty()) {
      auto r = structural("composition table is partial: " + std::to_string(missing.size()) +
                          " composable pair(s) have no entry");
      r.missing = std::move(missing);
      return r;
    }
    if (first_law) return *first_law;

    for (std::size_t h = 0; h < n_mor; ++h)
      for (std::size_t g = 0; g < n_mor; ++g) {
        if (named[h].src != named[g].dst) continue;
        for (std::size_t f = 0; f < n_mor; ++f) {
          if (named[g].src != named[f].dst) continue;
          const MorId hg = table[h * n_mor + g];
          const MorId gf = table[g * n_mor + f];
          const MorId lhs = table[static_cast<std::size_t>(hg) * n_mor + f];
          const MorId rhs = table[h * n_mor + static_cast<std::size_t>(gf)];
          if (lhs != rhs)
            return law("associativity",
                       "(" + comp_label(named[h].name, named[g].name) + ")∘" + named[f].name +
                           " = " + named[static_cast<std::size_t>(lhs)].name + " but " +
                           named[h].name + "∘(" + comp_label(named[g].name, named[f].name) +
                           ") = " + named[static_cast<std::size_t>(rhs)].name,
                       {named[h].name, named[g].name, named[f].name});
        }
      }

    if (out) {
      out->objects_ = std::move(objects);
      out->arrows_.clear();
      for (auto& m : named) out->arrows_.push_back({m.name, m.src, m.dst});
      out->identity_ = std::move(identity);
      out->table_ = std::move(table);
      out->index_homs();
    }
    return {};
  }
};

ValidationReport validate_category(const RawCategory& raw, const Caps& caps) {
  return CategoryAssembler::run(raw, caps, nullptr);
}

FinCat FinCat::build(const RawCategory& raw, const Caps& caps) {
  FinCat c;
  auto report = CategoryAssembler::run(raw, caps, &c);
  if (!report.ok()) {
    std::string msg = report.message;
    if (!report.missing.empty()) {
      msg += " (first missing: " + report.missing.front() + ")";
    }
    throw InputError(msg);
  }
  return c;
}

void FinCat::index_homs() {
  const std::size_t n = objects_.size();
  hom_.assign(n * n, {});
  for (std::size_t f = 0; f < arrows_.size(); ++f)
    hom_[idx(arrows_[f].src) * n + idx(arrows_[f].dst)].push_back(static_cast<MorId>(f));
}

MorId FinCat::compose(MorId g, MorId f) const {
  if (!composable(g, f))
    throw std::invalid_argument("not composable: " + morphism_name(g) + "∘" + morphism_name(f));
  return table_[idx(g) * arrows_.size() + idx(f)];
}

std::optional<ObjId> FinCat::find_object(std::string_view name) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == objects_.end() || *it != name) return std::nullopt;
  return static_cast<ObjId>(it - objects_.begin());
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                             [](const Arrow& a, std::string_view b) { return a.name < b; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return static_cast<MorId>(it - arrows_.begin());
}

ObjId FinCat::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw InputError("unknown object id '" + std::string(name) + "'");
}

MorId FinCat::morphism(std::string_view name) const {
  if (auto f = find_morphism(name)) return *f;
  throw InputError("unknown morphism id '" + std::string(name) + "'");
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (std::size_t f = 0; f < arrows_.size(); ++f) {
    if (is_identity(static_cast<MorId>(f))) continue;
    raw.morphisms.push_back(
        {arrows_[f].name, objects_[idx(arrows_[f].src)], objects_[idx(arrows_[f].dst)]});
  }
  for (std::size_t g = 0; g < arrows_.size(); ++g) {
    if (is_identity(static_cast<MorId>(g))) continue;
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      if (is_identity(static_cast<MorId>(f)) || arrows_[g].src != arrows_[f].dst) continue;
      raw.compose.push_back({arrows_[g].name, arrows_[f].name,
                             arrows_[idx(table_[g * arrows_.size() + f])].name});
    }
  }
  return raw;
}

std::vector<std::string> FinCat::names(const MorphismClass& cls) const {
  std::vector<std::string> out;
  for (int f : cls.members()) out.push_back(morphism_name(f));
  return out;
}

std::vector<std::string> FinCat::names(const ObjectSet& objs) const {
  std::vector<std::string> out;
  for (int x : objs.members()) out.push_back(object_name(x));
  return out;
}

FinCat opposite(const FinCat& c) {
  FinCat op = c;
  const std::size_t n = c.arrows_.size();
  for (auto& a : op.arrows_) std::swap(a.src, a.dst);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) op.table_[g * n + f] = c.table_[f * n + g];
  op.index_homs();
  return op;
}

FinCat full_subcategory(const FinCat& c, const ObjectSet& members) {
  RawCategory raw;
  for (int x : members.members()) raw.objects.push_back(c.object_name(x));
  std::vector<MorId> kept;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const MorId m = static_cast<MorId>(f);
    if (members.contains(c.src(m)) && members.contains(c.dst(m))) kept.push_back(m);
  }
  for (MorId f : kept)
    if (!c.is_identity(f))
      raw.morphisms.push_back({c.morphism_name(f), c.object_name(c.src(f)), c.object_name(c.dst(f))});
  for (MorId g : kept)
    for (MorId f : kept)
      if (!c.is_identity(g) && !c.is_identity(f) && c.composable(g, f))
        raw.compose.push_back({c.morphism_name(g), c.morphism_name(f),
                               c.morphism_name(c.compose(g, f))});
  Caps unlimited{c.object_count(), c.morphism_count()};
  return FinCat::build(raw, unlimited);
}

std::optional<MorId> inverse(const FinCat& c, MorId f) {
  for (MorId g : c.hom(c.dst(f), c.src(f)))
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.dst(f)))
      return g;
  return std::nullopt;
}

bool is_iso(const FinCat& c, MorId f) { return inverse(c, f).has_value(); }

bool is_mono(const FinCat& c, MorId f) {
  const ObjId x = c.src(f);
  for (std::size_t w = 0; w < c.object_count(); ++w) {
    const auto& maps = c.hom(static_cast<ObjId>(w), x);
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j)
        if (c.compose(f, maps[i]) == c.compose(f, maps[j])) return false;
  }
  return true;
}

bool is_epi(const FinCat& c, MorId f) {
  const ObjId y = c.dst(f);
  for (std::size_t z = 0; z < c.object_count(); ++z) {
    const auto& maps = c.hom(y, static_cast<ObjId>(z));
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j)
        if (c.compose(maps[i], f) == c.compose(maps[j], f)) return false;
  }
  return true;
}

MorphismKind morphism_predicates(const FinCat& c, MorId f) {
  if (f < 0 || static_cast<std::size_t>(f) >= c.morphism_count())
    throw InputError("unknown morphism index " + std::to_string(f));
  return {is_iso(c, f), is_mono(c, f), is_epi(c, f)};
}

bool are_isomorphic(const FinCat& c, ObjId a, ObjId b) {
  for (MorId f : c.hom(a, b))
    if (is_iso(c, f)) return true;
  return false;
}

MorphismClass isomorphisms(const FinCat& c) {
  MorphismClass out(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (is_iso(c, static_cast<MorId>(f))) out.insert(static_cast<int>(f));
  return out;
}

MorphismClass epimorphisms(const FinCat& c) {
  MorphismClass out(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (is_epi(c, static_cast<MorId>(f))) out.insert(static_cast<int>(f));
  return out;
}

bool is_thin(const FinCat& c) {
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t b = 0; b < c.object_count(); ++b)
      if (c.hom(static_cast<ObjId>(a), static_cast<ObjId>(b)).size() > 1) return false;
  return true;
}

Verdict check_associativity(const FinCat& c) {
  const auto n = static_cast<MorId>(c.morphism_count());
  for (MorId h = 0; h < n; ++h)
    for (MorId g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      for (MorId f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          return Verdict::fail("associativity", "(h∘g)∘f != h∘(g∘f)",
                               {c.morphism_name(h), c.morphism_name(g), c.morphism_name(f)});
      }
    }
  return Verdict::pass();
}

}  // namespace discloc
