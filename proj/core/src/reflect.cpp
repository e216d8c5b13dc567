#include "discloc/reflect.hpp"

#include <cstdint>

#include "discloc/error.hpp"
#include "discloc/limits.hpp"

namespace discloc {

ObjectSet iso_closure(const FinCat& c, const ObjectSet& a) {
  ObjectSet out = a;
  for (int x : a.members())
    for (std::size_t y = 0; y < c.object_count(); ++y)
      if (are_isomorphic(c, x, static_cast<ObjId>(y))) out.insert(static_cast<int>(y));
  return out;
}

Verdict is_replete(const FinCat& c, const ObjectSet& a) {
  for (int x : a.members())
    for (std::size_t y = 0; y < c.object_count(); ++y) {
      const ObjId o = static_cast<ObjId>(y);
      if (!a.contains(o) && are_isomorphic(c, x, o))
        return Verdict::fail("replete", "an isomorphic copy of a member is missing",
                             {c.object_name(x), c.object_name(o)});
    }
  return Verdict::pass();
}

namespace {

bool universal_from(const FinCat& c, const ObjectSet& a, ObjId x, ObjId target, MorId u) {
  for (int b : a.members())
    for (MorId h : c.hom(x, b)) {
      int count = 0;
      for (MorId k : c.hom(target, b))
        if (c.compose(k, u) == h && ++count > 1) break;
      if (count != 1) return false;
    }
  return true;
}

bool universal_into(const FinCat& c, const ObjectSet& a, ObjId x, ObjId source, MorId u) {
  for (int b : a.members())
    for (MorId h : c.hom(b, x)) {
      int count = 0;
      for (MorId k : c.hom(b, source))
        if (c.compose(u, k) == h && ++count > 1) break;
      if (count != 1) return false;
    }
  return true;
}

void check_universe(const FinCat& c, const ObjectSet& a) {
  if (a.universe() != c.object_count()) throw ShapeError("object set does not belong to category");
}

}  // namespace

ReflectorSearch find_reflector(const FinCat& c, const ObjectSet& a) {
  check_universe(c, a);
  ReflectorSearch out;
  if (a.empty()) {
    if (c.object_count() > 0) {
      out.witness = 0;
      out.reason = "the empty subcategory receives no arrows";
      return out;
    }
  }
  Reflector r;
  r.members = a;
  const std::size_t n = c.object_count();
  r.functor.on_objects.assign(n, -1);
  r.unit.components.assign(n, kNoMorphism);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    bool found = false;
    for (int target : a.members()) {
      for (MorId u : c.hom(x, target))
        if (universal_from(c, a, x, target, u)) {
          r.functor.on_objects[xi] = target;
          r.unit.components[xi] = u;
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) {
      out.witness = x;
      out.reason = "no universal arrow from " + c.object_name(x) + " into the subcategory";
      return out;
    }
  }
  r.functor.on_morphisms.assign(c.morphism_count(), kNoMorphism);
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    const ObjId x = c.src(f), y = c.dst(f);
    const MorId target = c.compose(r.unit[y], f);
    for (MorId k : c.hom(r.functor(x), r.functor(y)))
      if (c.compose(k, r.unit[x]) == target) {
        r.functor.on_morphisms[fi] = k;
        break;
      }
  }
  out.reflector = std::move(r);
  return out;
}

ReflectorSearch find_coreflector(const FinCat& c, const ObjectSet& a) {
  check_universe(c, a);
  ReflectorSearch out;
  if (a.empty()) {
    if (c.object_count() > 0) {
      out.witness = 0;
      out.reason = "the empty subcategory sends no arrows";
      return out;
    }
  }
  Reflector r;
  r.members = a;
  const std::size_t n = c.object_count();
  r.functor.on_objects.assign(n, -1);
  r.unit.components.assign(n, kNoMorphism);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    bool found = false;
    for (int source : a.members()) {
      for (MorId u : c.hom(source, x))
        if (universal_into(c, a, x, source, u)) {
          r.functor.on_objects[xi] = source;
          r.unit.components[xi] = u;
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) {
      out.witness = x;
      out.reason = "no universal arrow from the subcategory to " + c.object_name(x);
      return out;
    }
  }
  r.functor.on_morphisms.assign(c.morphism_count(), kNoMorphism);
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    const ObjId x = c.src(f), y = c.dst(f);
    const MorId target = c.compose(f, r.unit[x]);
    for (MorId k : c.hom(r.functor(x), r.functor(y)))
      if (c.compose(r.unit[y], k) == target) {
        r.functor.on_morphisms[fi] = k;
        break;
      }
  }
  out.reflector = std::move(r);
  return out;
}

namespace {

Verdict verify_common(const FinCat& c, const Reflector& r, bool co) {
  check_universe(c, r.members);
  if (auto v = verify_functor(c, c, r.functor); !v) return v;
  const Functor id = identity_functor(c);
  if (auto v = co ? verify_natural(c, c, r.functor, id, r.unit)
                  : verify_natural(c, c, id, r.functor, r.unit);
      !v)
    return v;
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    if (!r.members.contains(r.functor(x)))
      return Verdict::fail("image", "functor image lies outside the subcategory",
                           {c.object_name(x)});
    if (r.members.contains(x) && !is_iso(c, r.unit[x]))
      return Verdict::fail("unit on members", "unit component at a member is not an iso",
                           {c.object_name(x)});
    const bool universal = co ? universal_into(c, r.members, x, r.functor(x), r.unit[x])
                              : universal_from(c, r.members, x, r.functor(x), r.unit[x]);
    if (!universal)
      return Verdict::fail("universal property", "unit component is not a universal arrow",
                           {c.object_name(x)});
  }
  return Verdict::pass();
}

std::vector<Reflector> enumerate(const FinCat& c, bool co) {
  const std::size_t n = c.object_count();
  if (n > kMaxEnumerableObjects)
    throw InputError("too many objects for subset enumeration: " + std::to_string(n));
  std::vector<Reflector> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ObjectSet a(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) a.insert(static_cast<int>(i));
    if (!is_replete(c, a)) continue;
    auto search = co ? find_coreflector(c, a) : find_reflector(c, a);
    if (search.reflector) out.push_back(std::move(*search.reflector));
  }
  return out;
}

}  // namespace

Verdict verify_reflector(const FinCat& c, const Reflector& r) { return verify_common(c, r, false); }
Verdict verify_coreflector(const FinCat& c, const Reflector& r) { return verify_common(c, r, true); }

std::vector<Reflector> enumerate_replete_reflective(const FinCat& c) { return enumerate(c, false); }
std::vector<Reflector> enumerate_replete_coreflective(const FinCat& c) { return enumerate(c, true); }

MorphismClass inverted_class(const FinCat& c, const Reflector& r) {
  MorphismClass out(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (is_iso(c, r.functor.map(static_cast<MorId>(f)))) out.insert(static_cast<int>(f));
  return out;
}

namespace {

struct ChkContext {
  MorphismClass left;
  MorphismClass right;
};

ChkContext chk_context(const FinCat& c, const Reflector& r) {
  auto fwc = is_finitely_well_complete(c);
  if (!fwc.holds) throw HypothesisError("category is not finitely well-complete: " + fwc.failure);
  ChkContext ctx{inverted_class(c, r), {}};
  ctx.right = rlp_class(c, ctx.left);
  return ctx;
}

ChkResult chk_with(const FinCat& c, const Reflector& r, const ChkContext& ctx, MorId f) {
  const ObjId x = c.src(f), y = c.dst(f);
  auto pb = limit_search(c, LimitQuery::pullback(r.functor.map(f), r.unit[y]));
  if (pb.exists) {
    const Cone& cone = *pb.cone;
    for (MorId u : c.hom(x, cone.apex)) {
      if (c.compose(cone.legs[0], u) != r.unit[x] || c.compose(cone.legs[1], u) != f) continue;
      const MorId m = cone.legs[1];
      if (ctx.left.contains(u) && ctx.right.contains(m)) return {{u, m}, true};
      break;
    }
  }
  auto all = all_factorizations(c, ctx.left, ctx.right, f);
  if (all.empty())
    throw HypothesisError("no E/M factorization of " + c.morphism_name(f) +
                          " with E inverted by the reflector and M = E↓");
  return {all.front(), false};
}

}  // namespace

ChkResult chk_factorization(const FinCat& c, const Reflector& r, MorId f) {
  return chk_with(c, r, chk_context(c, r), f);
}

FactorizationSystem chk_factorization_system(const FinCat& c, const Reflector& r) {
  const ChkContext ctx = chk_context(c, r);
  FactorizationSystem fs{ctx.left, ctx.right, {}};
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    fs.factor.push_back(chk_with(c, r, ctx, static_cast<MorId>(f)).factor);
  return fs;
}

}  // namespace discloc
