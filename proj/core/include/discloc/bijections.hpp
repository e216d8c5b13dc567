#pragma once

#include <cstddef>
#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/model.hpp"
#include "discloc/monad.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

/// Round trips and order checks between replete reflective subcategories,
/// localizations and idempotent monads. Each verdict is the first failure
/// over all subcategories (or pairs of them).
struct BijectionReport {
  LocalizationPoset poset;
  std::vector<Monad> monads;
  Verdict refl_loc_refl;       // members of reflector_of(localize(A)) == A
  Verdict loc_refl_loc;        // localize(reflector_of(M)) has M's classes
  Verdict monad_round_trip;    // Refl → monad → Refl, monad up to natural equivalence
  Verdict monads_lawful;       // every induced monad is a lawful idempotent monad
  Verdict loc_antitone;        // A ⊆ B ⇔ Loc_B ≤ Loc_A
  Verdict monad_order;         // A ⊆ B ⇔ a monad morphism T_B → T_A exists
  Verdict equivalence_relation;  // natural equivalence on the induced monads
  std::size_t order_edges_checked = 0;

  bool holds() const;
  std::vector<const Verdict*> verdicts() const;
};

BijectionReport run_bijection_suite(const FinCat& c);

}  // namespace discloc
