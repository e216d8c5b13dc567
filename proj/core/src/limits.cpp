#include "discloc/limits.hpp"

#include "discloc/error.hpp"

namespace discloc {

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::terminal: return "terminal";
    case Shape::initial: return "initial";
    case Shape::product: return "product";
    case Shape::coproduct: return "coproduct";
    case Shape::pullback: return "pullback";
    case Shape::pushout: return "pushout";
    case Shape::equalizer: return "equalizer";
    case Shape::coequalizer: return "coequalizer";
  }
  return "?";
}

bool is_colimit_shape(Shape s) {
  return s == Shape::initial || s == Shape::coproduct || s == Shape::pushout ||
         s == Shape::coequalizer;
}

std::string LimitQuery::describe(const FinCat& c) const {
  std::string out(to_string(shape));
  if (!objects.empty() || !morphisms.empty()) {
    out += "(";
    bool first = true;
    for (ObjId x : objects) {
      out += (first ? "" : ", ") + c.object_name(x);
      first = false;
    }
    for (MorId f : morphisms) {
      out += (first ? "" : ", ") + c.morphism_name(f);
      first = false;
    }
    out += ")";
  }
  return out;
}

namespace {

/// A FinCat read forwards or backwards.
struct View {
  const FinCat& c;
  bool dual;

  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return dual ? c.hom(b, a) : c.hom(a, b); }
  MorId comp(MorId g, MorId f) const { return dual ? c.compose(f, g) : c.compose(g, f); }
  ObjId src(MorId f) const { return dual ? c.dst(f) : c.src(f); }
  ObjId dst(MorId f) const { return dual ? c.src(f) : c.dst(f); }
};

void check_morphism(const FinCat& c, MorId f) {
  if (f < 0 || static_cast<std::size_t>(f) >= c.morphism_count())
    throw InputError("limit query references an unknown morphism");
}

void check_object(const FinCat& c, ObjId x) {
  if (x < 0 || static_cast<std::size_t>(x) >= c.object_count())
    throw InputError("limit query references an unknown object");
}

void enumerate(const View& v, const Diagram& d, ObjId apex, Cone& partial, std::size_t node,
               std::vector<Cone>& out) {
  if (node == d.nodes.size()) {
    out.push_back(partial);
    return;
  }
  for (MorId leg : v.hom(apex, d.nodes[node])) {
    partial.legs[node] = leg;
    bool ok = true;
    for (const auto& e : d.edges) {
      const std::size_t last = std::max(e.from, e.to);
      if (last != node) continue;
      if (v.comp(e.arrow, partial.legs[e.from]) != partial.legs[e.to]) {
        ok = false;
        break;
      }
    }
    if (ok) enumerate(v, d, apex, partial, node + 1, out);
  }
}

std::size_t mediators(const View& v, const Cone& target, const Cone& from) {
  std::size_t count = 0;
  for (MorId u : v.hom(from.apex, target.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < target.legs.size() && ok; ++i)
      ok = v.comp(target.legs[i], u) == from.legs[i];
    if (ok) ++count;
  }
  return count;
}

}  // namespace

Diagram diagram_of(const FinCat& c, const LimitQuery& q) {
  Diagram d;
  auto need = [&](std::size_t objs, std::size_t mors) {
    if (q.objects.size() != objs || q.morphisms.size() != mors)
      throw InputError("malformed " + std::string(to_string(q.shape)) + " query");
    for (ObjId x : q.objects) check_object(c, x);
    for (MorId f : q.morphisms) check_morphism(c, f);
  };
  switch (q.shape) {
    case Shape::terminal:
    case Shape::initial:
      need(0, 0);
      break;
    case Shape::product:
    case Shape::coproduct:
      need(2, 0);
      d.nodes = q.objects;
      break;
    case Shape::pullback: {
      need(0, 2);
      const MorId f = q.morphisms[0], g = q.morphisms[1];
      if (c.dst(f) != c.dst(g)) throw InputError("pullback needs a cospan (dst f == dst g)");
      d.nodes = {c.src(f), c.src(g), c.dst(f)};
      d.edges = {{0, 2, f}, {1, 2, g}};
      break;
    }
    case Shape::pushout: {
      need(0, 2);
      const MorId f = q.morphisms[0], g = q.morphisms[1];
      if (c.src(f) != c.src(g)) throw InputError("pushout needs a span (src f == src g)");
      d.nodes = {c.dst(f), c.dst(g), c.src(f)};
      d.edges = {{0, 2, f}, {1, 2, g}};
      break;
    }
    case Shape::equalizer:
    case Shape::coequalizer: {
      need(0, 2);
      const MorId f = q.morphisms[0], g = q.morphisms[1];
      if (c.src(f) != c.src(g) || c.dst(f) != c.dst(g))
        throw InputError(std::string(to_string(q.shape)) + " needs a parallel pair");
      if (q.shape == Shape::equalizer) {
        d.nodes = {c.src(f), c.dst(f)};
      } else {
        d.nodes = {c.dst(f), c.src(f)};
      }
      d.edges = {{0, 1, f}, {0, 1, g}};
      break;
    }
  }
  return d;
}

std::vector<Cone> all_cones(const FinCat& c, const LimitQuery& q) {
  const Diagram d = diagram_of(c, q);
  const View v{c, is_colimit_shape(q.shape)};
  std::vector<Cone> cones;
  for (std::size_t p = 0; p < c.object_count(); ++p) {
    Cone partial{static_cast<ObjId>(p), std::vector<MorId>(d.nodes.size(), kNoMorphism)};
    enumerate(v, d, partial.apex, partial, 0, cones);
  }
  return cones;
}

LimitResult limit_search(const FinCat& c, const LimitQuery& q) {
  const View v{c, is_colimit_shape(q.shape)};
  const std::vector<Cone> cones = all_cones(c, q);
  LimitResult result;
  result.cones_total = cones.size();
  for (const Cone& candidate : cones) {
    bool universal = true;
    for (const Cone& other : cones) {
      if (mediators(v, candidate, other) != 1) {
        universal = false;
        break;
      }
    }
    if (universal) {
      result.exists = true;
      result.cone = candidate;
      result.competing_cones = cones.size();
      return result;
    }
  }
  result.absence = cones.empty()
                       ? "no cone exists over the diagram"
                       : "none of the " + std::to_string(cones.size()) + " cones is universal";
  return result;
}

namespace {

BicompletenessReport scan(const FinCat& c, bool colimits_too) {
  BicompletenessReport report;
  report.thin = is_thin(c);
  std::vector<LimitQuery> queries;
  queries.push_back(LimitQuery::terminal());
  if (colimits_too) queries.push_back(LimitQuery::initial());
  const auto n_obj = static_cast<ObjId>(c.object_count());
  for (ObjId a = 0; a < n_obj; ++a)
    for (ObjId b = a; b < n_obj; ++b) queries.push_back(LimitQuery::product(a, b));
  if (colimits_too)
    for (ObjId a = 0; a < n_obj; ++a)
      for (ObjId b = a; b < n_obj; ++b) queries.push_back(LimitQuery::coproduct(a, b));
  const auto n_mor = static_cast<MorId>(c.morphism_count());
  std::vector<std::pair<MorId, MorId>> parallel;
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g = f + 1; g < n_mor; ++g)
      if (c.src(f) == c.src(g) && c.dst(f) == c.dst(g)) parallel.emplace_back(f, g);
  for (auto [f, g] : parallel) queries.push_back(LimitQuery::equalizer(f, g));
  if (colimits_too)
    for (auto [f, g] : parallel) queries.push_back(LimitQuery::coequalizer(f, g));

  for (const auto& q : queries) {
    if (!limit_search(c, q).exists) {
      report.missing = q;
      report.missing_description = q.describe(c);
      report.holds = false;
      return report;
    }
  }
  report.holds = true;
  report.freyd_consistent = report.thin;
  return report;
}

}  // namespace

BicompletenessReport is_finitely_bicomplete(const FinCat& c) { return scan(c, true); }
BicompletenessReport is_finitely_complete(const FinCat& c) { return scan(c, false); }

std::optional<ObjId> terminal_object(const FinCat& c) {
  auto r = limit_search(c, LimitQuery::terminal());
  if (!r.exists) return std::nullopt;
  return r.cone->apex;
}

std::optional<ObjId> initial_object(const FinCat& c) {
  auto r = limit_search(c, LimitQuery::initial());
  if (!r.exists) return std::nullopt;
  return r.cone->apex;
}

}  // namespace discloc
