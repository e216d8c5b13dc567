#pragma once

#include <optional>

#include "discloc/fincat.hpp"
#include "discloc/functor.hpp"
#include "discloc/reflect.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

/// (T, η, μ) on a FinCat.
struct Monad {
  Functor functor;
  NaturalTransformation unit;  // η_X: X → TX
  NaturalTransformation mult;  // μ_X: TTX → TX

  friend bool operator==(const Monad&, const Monad&) = default;
};

Monad identity_monad(const FinCat& c);

/// Functor laws, naturality of η and μ, associativity, both unit laws.
/// Throws ShapeError when the data does not fit the category.
Verdict verify_monad(const FinCat& c, const Monad& m);

/// T(η_X) and η_TX are isomorphisms for every X. Only T and η are read, so
/// the check also applies to bare pointed endofunctors.
Verdict is_idempotent(const FinCat& c, const Functor& t, const NaturalTransformation& unit);
Verdict is_idempotent(const FinCat& c, const Monad& m);

/// T = F, η the reflector's unit and μ_X the unique k with k ∘ η_TX = id_TX.
Monad monad_from_reflector(const FinCat& c, const Reflector& r);

/// Reflector onto the iso-closure of T's image, with T as the reflector.
/// Throws HypothesisError when the monad is not idempotent.
Reflector reflector_from_monad(const FinCat& c, const Monad& m);

ObjectSet essential_image(const FinCat& c, const Functor& t);

/// α: T1 → T2 natural with α ∘ η1 = η2 and α ∘ μ1 = μ2 ∘ (α * α).
Verdict verify_monad_morphism(const FinCat& c, const Monad& from, const Monad& to,
                              const NaturalTransformation& alpha);

/// Least monad morphism from → to (components chosen in canonical order).
std::optional<NaturalTransformation> monad_morphism(const FinCat& c, const Monad& from,
                                                    const Monad& to);

/// A monad morphism whose components are all isomorphisms.
std::optional<NaturalTransformation> natural_equivalence(const FinCat& c, const Monad& from,
                                                         const Monad& to);

}  // namespace discloc
