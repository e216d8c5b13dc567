#pragma once

#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

/// Object and morphism maps of a functor between two FinCats. The
/// categories themselves are passed alongside wherever they matter.
struct Functor {
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;

  ObjId operator()(ObjId x) const { return on_objects[static_cast<std::size_t>(x)]; }
  MorId map(MorId f) const { return on_morphisms[static_cast<std::size_t>(f)]; }

  friend bool operator==(const Functor&, const Functor&) = default;
};

/// Components indexed by source object.
struct NaturalTransformation {
  std::vector<MorId> components;

  MorId operator[](ObjId x) const { return components[static_cast<std::size_t>(x)]; }

  friend bool operator==(const NaturalTransformation&, const NaturalTransformation&) = default;
};

Functor identity_functor(const FinCat& c);
NaturalTransformation identity_transformation(const FinCat& c, const Functor& f);

/// g ∘ f.
Functor compose(const Functor& g, const Functor& f);

/// Exhaustively checks that `f` preserves src/dst, identities and composition.
Verdict verify_functor(const FinCat& source, const FinCat& target, const Functor& f);

/// Checks that `alpha` has components F(x) → G(x) and that every naturality
/// square G(h) ∘ alpha_x = alpha_y ∘ F(h) commutes.
Verdict verify_natural(const FinCat& source, const FinCat& target, const Functor& from,
                       const Functor& to, const NaturalTransformation& alpha);

}  // namespace discloc
