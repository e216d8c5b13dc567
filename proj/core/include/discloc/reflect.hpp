#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/functor.hpp"
#include "discloc/lifting.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

/// A full reflective subcategory A of C with its reflector F: C → C
/// (landing in A) and unit η: id → F.
///
/// For a coreflector the same fields hold the coreflector G: C → C
/// (landing in A) and the counit ε: G → id.
struct Reflector {
  ObjectSet members;
  Functor functor;
  NaturalTransformation unit;

  friend bool operator==(const Reflector&, const Reflector&) = default;
};

ObjectSet iso_closure(const FinCat& c, const ObjectSet& a);

/// Fails with (member, non-member) witnesses when some object isomorphic to
/// a member is missing.
Verdict is_replete(const FinCat& c, const ObjectSet& a);

struct ReflectorSearch {
  std::optional<Reflector> reflector;
  /// Least object with no universal arrow into A.
  std::optional<ObjId> witness;
  std::string reason;
};

/// Searches every (a ∈ A, u: X → a) for a universal arrow. Among universal
/// arrows the least target object and then the least morphism is chosen.
ReflectorSearch find_reflector(const FinCat& c, const ObjectSet& a);

/// Dual search: universal arrows a → X from A, least choice as above.
ReflectorSearch find_coreflector(const FinCat& c, const ObjectSet& a);

/// Functor laws, naturality of η, image in A, η_a iso on A, and the
/// universal property at every object.
Verdict verify_reflector(const FinCat& c, const Reflector& r);
Verdict verify_coreflector(const FinCat& c, const Reflector& r);

/// Replete reflective subcategories (nonempty subsets in increasing bitmask
/// order over canonical object positions).
std::vector<Reflector> enumerate_replete_reflective(const FinCat& c);
std::vector<Reflector> enumerate_replete_coreflective(const FinCat& c);

/// Morphisms inverted by the (co)reflector functor.
MorphismClass inverted_class(const FinCat& c, const Reflector& r);

struct ChkResult {
  Factorization factor;
  /// True when the factorization came from X → FX ×_FY Y → Y.
  bool via_pullback = false;
};

/// E/M factorization of f for E = inverted_class(r), M = E↓. Throws
/// HypothesisError when C is not finitely well-complete or no factorization
/// exists.
ChkResult chk_factorization(const FinCat& c, const Reflector& r, MorId f);

/// All CHK factorizations assembled into a factorization system.
FactorizationSystem chk_factorization_system(const FinCat& c, const Reflector& r);

/// Maximum object count for subset enumeration.
inline constexpr std::size_t kMaxEnumerableObjects = 20;

}  // namespace discloc
