#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/limits.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

/// A square
///
///     V --top--> X
///     |          |
///   left       right
///     v          v
///     W -bottom> Y
///
/// A lift (filler) is d: W → X with d ∘ left = top and right ∘ d = bottom.
struct Square {
  MorId left = kNoMorphism;
  MorId right = kNoMorphism;
  MorId top = kNoMorphism;
  MorId bottom = kNoMorphism;

  friend bool operator==(const Square&, const Square&) = default;
};

bool commutes(const FinCat& c, const Square& sq);

/// All fillers of a commuting square, in canonical order. Throws
/// InputError if the square does not commute or is ill-typed.
std::vector<MorId> lifts(const FinCat& c, const Square& sq);

/// Every commuting square with the given left and right sides, canonical
/// (top, bottom) order. Empty hom-sets prune the search before any
/// composition is evaluated.
std::vector<Square> commuting_squares(const FinCat& c, MorId left, MorId right);

/// Least commuting square (left, right, ...) with no filler, if any.
std::optional<Square> lifting_failure(const FinCat& c, MorId left, MorId right);

/// E↓: morphisms with the right lifting property against every member of E.
MorphismClass rlp_class(const FinCat& c, const MorphismClass& e);
/// E↑: morphisms with the left lifting property against every member of E.
MorphismClass llp_class(const FinCat& c, const MorphismClass& e);

/// Least witness that `f` is not in E↓ (the square's left side is in E).
std::optional<Square> rlp_failure(const FinCat& c, const MorphismClass& e, MorId f);
/// Least witness that `f` is not in E↑ (the square's right side is in E).
std::optional<Square> llp_failure(const FinCat& c, const MorphismClass& e, MorId f);

/// Right lifting class of the epimorphisms.
MorphismClass strong_monos(const FinCat& c);

struct WellCompletenessReport {
  bool holds = false;
  BicompletenessReport limits;
  /// Families of strong monomorphisms whose iterated pullback was formed.
  std::size_t families_checked = 0;
  std::string reduction;
  std::string failure;
};

/// Finite limits plus intersections of strong-mono families. For a finite
/// category the families are finite and intersections are iterated binary
/// pullbacks; every pair and every full family into each object is formed
/// explicitly in canonical order.
WellCompletenessReport is_finitely_well_complete(const FinCat& c);

struct Factorization {
  MorId e = kNoMorphism;
  MorId m = kNoMorphism;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorizationSystem {
  MorphismClass left;   // E
  MorphismClass right;  // M
  std::vector<Factorization> factor;  // indexed by morphism
};

/// Checks the stored factorizations, then E↓ = M, then M↑ = E. Throws
/// InputError when `fs.factor` is not total.
Verdict verify_factorization_system(const FinCat& c, const FactorizationSystem& fs);

/// Every f = m ∘ e with e ∈ E and m ∈ M, canonical order.
std::vector<Factorization> all_factorizations(const FinCat& c, const MorphismClass& e,
                                              const MorphismClass& m, MorId f);

/// Any two (E, M) factorizations of the same morphism are related by exactly
/// one isomorphism of middle objects commuting with both halves.
Verdict factorizations_unique_up_to_iso(const FinCat& c, const FactorizationSystem& fs);

std::vector<std::string> square_names(const FinCat& c, const Square& sq);

}  // namespace discloc
