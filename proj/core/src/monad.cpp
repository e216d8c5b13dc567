#include "discloc/monad.hpp"

#include "discloc/error.hpp"

namespace discloc {

Monad identity_monad(const FinCat& c) {
  Functor id = identity_functor(c);
  NaturalTransformation unit = identity_transformation(c, id);
  return {id, unit, unit};
}

Verdict verify_monad(const FinCat& c, const Monad& m) {
  if (m.unit.components.size() != c.object_count() ||
      m.mult.components.size() != c.object_count())
    throw ShapeError("monad transformations do not match the category");
  if (auto v = verify_functor(c, c, m.functor); !v) return v;
  const Functor id = identity_functor(c);
  const Functor tt = compose(m.functor, m.functor);
  if (auto v = verify_natural(c, c, id, m.functor, m.unit); !v) {
    v.check = "unit " + v.check;
    return v;
  }
  if (auto v = verify_natural(c, c, tt, m.functor, m.mult); !v) {
    v.check = "multiplication " + v.check;
    return v;
  }
  const auto& t = m.functor;
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    if (c.compose(m.mult[x], t.map(m.mult[x])) != c.compose(m.mult[x], m.mult[t(x)]))
      return Verdict::fail("associativity", "μ_X ∘ T(μ_X) != μ_X ∘ μ_TX", {c.object_name(x)});
  }
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    const MorId id_tx = c.identity(t(x));
    if (c.compose(m.mult[x], t.map(m.unit[x])) != id_tx)
      return Verdict::fail("left unit law", "μ_X ∘ T(η_X) != id_TX", {c.object_name(x)});
    if (c.compose(m.mult[x], m.unit[t(x)]) != id_tx)
      return Verdict::fail("right unit law", "μ_X ∘ η_TX != id_TX", {c.object_name(x)});
  }
  return Verdict::pass();
}

Verdict is_idempotent(const FinCat& c, const Functor& t, const NaturalTransformation& unit) {
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    if (!is_iso(c, t.map(unit[x])))
      return Verdict::fail("idempotent", "T(η_X) is not an isomorphism", {c.object_name(x)});
    if (!is_iso(c, unit[t(x)]))
      return Verdict::fail("idempotent", "η_TX is not an isomorphism", {c.object_name(x)});
  }
  return Verdict::pass();
}

Verdict is_idempotent(const FinCat& c, const Monad& m) { return is_idempotent(c, m.functor, m.unit); }

Monad monad_from_reflector(const FinCat& c, const Reflector& r) {
  Monad m{r.functor, r.unit, {}};
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId tx = r.functor(static_cast<ObjId>(xi));
    const ObjId ttx = r.functor(tx);
    MorId mu = kNoMorphism;
    for (MorId k : c.hom(ttx, tx))
      if (c.compose(k, r.unit[tx]) == c.identity(tx)) {
        mu = k;
        break;
      }
    if (mu == kNoMorphism)
      throw HypothesisError("reflector unit at " + c.object_name(tx) + " has no retraction");
    m.mult.components.push_back(mu);
  }
  return m;
}

ObjectSet essential_image(const FinCat& c, const Functor& t) {
  ObjectSet image(c.object_count());
  for (ObjId x : t.on_objects) image.insert(x);
  return iso_closure(c, image);
}

Reflector reflector_from_monad(const FinCat& c, const Monad& m) {
  if (auto v = is_idempotent(c, m); !v)
    throw HypothesisError("monad is not idempotent at " + v.witness.front());
  return {essential_image(c, m.functor), m.functor, m.unit};
}

Verdict verify_monad_morphism(const FinCat& c, const Monad& from, const Monad& to,
                              const NaturalTransformation& alpha) {
  if (auto v = verify_natural(c, c, from.functor, to.functor, alpha); !v) return v;
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    if (c.compose(alpha[x], from.unit[x]) != to.unit[x])
      return Verdict::fail("unit compatibility", "α ∘ η1 != η2", {c.object_name(x)});
    const MorId lhs = c.compose(alpha[x], from.mult[x]);
    const MorId rhs =
        c.compose(to.mult[x], c.compose(to.functor.map(alpha[x]), alpha[from.functor(x)]));
    if (lhs != rhs)
      return Verdict::fail("multiplication compatibility", "α ∘ μ1 != μ2 ∘ (α * α)",
                           {c.object_name(x)});
  }
  return Verdict::pass();
}

namespace {

class MorphismSearch {
 public:
  MorphismSearch(const FinCat& c, const Monad& from, const Monad& to, bool isos_only)
      : c_(c), from_(from), to_(to), isos_only_(isos_only),
        alpha_(c.object_count(), kNoMorphism) {}

  std::optional<NaturalTransformation> run() {
    if (descend(0)) return NaturalTransformation{alpha_};
    return std::nullopt;
  }

 private:
  bool assigned(ObjId x) const { return alpha_[static_cast<std::size_t>(x)] != kNoMorphism; }

  bool consistent(ObjId latest) const {
    for (std::size_t hi = 0; hi < c_.morphism_count(); ++hi) {
      const MorId h = static_cast<MorId>(hi);
      const ObjId x = c_.src(h), y = c_.dst(h);
      if (x != latest && y != latest) continue;
      if (!assigned(x) || !assigned(y)) continue;
      if (c_.compose(to_.functor.map(h), alpha_[static_cast<std::size_t>(x)]) !=
          c_.compose(alpha_[static_cast<std::size_t>(y)], from_.functor.map(h)))
        return false;
    }
    for (std::size_t xi = 0; xi < c_.object_count(); ++xi) {
      const ObjId x = static_cast<ObjId>(xi);
      const ObjId t1x = from_.functor(x);
      if (x != latest && t1x != latest) continue;
      if (!assigned(x) || !assigned(t1x)) continue;
      const MorId ax = alpha_[xi];
      const MorId lhs = c_.compose(ax, from_.mult[x]);
      const MorId rhs = c_.compose(
          to_.mult[x], c_.compose(to_.functor.map(ax), alpha_[static_cast<std::size_t>(t1x)]));
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool descend(std::size_t xi) {
    if (xi == c_.object_count()) return true;
    const ObjId x = static_cast<ObjId>(xi);
    for (MorId a : c_.hom(from_.functor(x), to_.functor(x))) {
      if (c_.compose(a, from_.unit[x]) != to_.unit[x]) continue;
      if (isos_only_ && !is_iso(c_, a)) continue;
      alpha_[xi] = a;
      if (consistent(x) && descend(xi + 1)) return true;
    }
    alpha_[xi] = kNoMorphism;
    return false;
  }

  const FinCat& c_;
  const Monad& from_;
  const Monad& to_;
  bool isos_only_;
  std::vector<MorId> alpha_;
};

}  // namespace

std::optional<NaturalTransformation> monad_morphism(const FinCat& c, const Monad& from,
                                                    const Monad& to) {
  return MorphismSearch(c, from, to, false).run();
}

std::optional<NaturalTransformation> natural_equivalence(const FinCat& c, const Monad& from,
                                                         const Monad& to) {
  return MorphismSearch(c, from, to, true).run();
}

}  // namespace discloc
