#include "discloc/functor.hpp"

#include "discloc/error.hpp"

namespace discloc {

Functor identity_functor(const FinCat& c) {
  Functor f;
  for (std::size_t x = 0; x < c.object_count(); ++x) f.on_objects.push_back(static_cast<ObjId>(x));
  for (std::size_t m = 0; m < c.morphism_count(); ++m) f.on_morphisms.push_back(static_cast<MorId>(m));
  return f;
}

NaturalTransformation identity_transformation(const FinCat& c, const Functor& f) {
  NaturalTransformation t;
  for (ObjId image : f.on_objects) t.components.push_back(c.identity(image));
  return t;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor out;
  for (ObjId x : f.on_objects) out.on_objects.push_back(g(x));
  for (MorId m : f.on_morphisms) out.on_morphisms.push_back(g.map(m));
  return out;
}

namespace {

bool in_range(int v, std::size_t n) { return v >= 0 && static_cast<std::size_t>(v) < n; }

}  // namespace

Verdict verify_functor(const FinCat& source, const FinCat& target, const Functor& f) {
  if (f.on_objects.size() != source.object_count() ||
      f.on_morphisms.size() != source.morphism_count())
    throw ShapeError("functor maps do not match the source category");
  for (ObjId x : f.on_objects)
    if (!in_range(x, target.object_count())) throw ShapeError("functor object image out of range");
  for (MorId m : f.on_morphisms)
    if (!in_range(m, target.morphism_count()))
      throw ShapeError("functor morphism image out of range");

  const auto n = static_cast<MorId>(source.morphism_count());
  for (MorId m = 0; m < n; ++m) {
    const MorId fm = f.map(m);
    if (target.src(fm) != f(source.src(m)) || target.dst(fm) != f(source.dst(m)))
      return Verdict::fail("functor src/dst", "image of a morphism has the wrong endpoints",
                           {source.morphism_name(m), target.morphism_name(fm)});
  }
  for (std::size_t x = 0; x < source.object_count(); ++x) {
    const ObjId o = static_cast<ObjId>(x);
    if (f.map(source.identity(o)) != target.identity(f(o)))
      return Verdict::fail("functor identity", "identity not sent to an identity",
                           {source.object_name(o)});
  }
  for (MorId g = 0; g < n; ++g)
    for (MorId h = 0; h < n; ++h) {
      if (!source.composable(g, h)) continue;
      if (f.map(source.compose(g, h)) != target.compose(f.map(g), f.map(h)))
        return Verdict::fail("functor composition", "F(g∘f) != F(g)∘F(f)",
                             {source.morphism_name(g), source.morphism_name(h)});
    }
  return Verdict::pass();
}

Verdict verify_natural(const FinCat& source, const FinCat& target, const Functor& from,
                       const Functor& to, const NaturalTransformation& alpha) {
  if (alpha.components.size() != source.object_count())
    throw ShapeError("transformation has the wrong number of components");
  for (std::size_t x = 0; x < source.object_count(); ++x) {
    const ObjId o = static_cast<ObjId>(x);
    const MorId a = alpha[o];
    if (!in_range(a, target.morphism_count()))
      throw ShapeError("transformation component out of range");
    if (target.src(a) != from(o) || target.dst(a) != to(o))
      return Verdict::fail("component shape", "component does not run F(x) → G(x)",
                           {source.object_name(o), target.morphism_name(a)});
  }
  const auto n = static_cast<MorId>(source.morphism_count());
  for (MorId h = 0; h < n; ++h) {
    const ObjId x = source.src(h);
    const ObjId y = source.dst(h);
    if (target.compose(to.map(h), alpha[x]) != target.compose(alpha[y], from.map(h)))
      return Verdict::fail("naturality", "naturality square does not commute",
                           {source.morphism_name(h)});
  }
  return Verdict::pass();
}

}  // namespace discloc
