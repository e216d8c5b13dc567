#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/functor.hpp"
#include "discloc/reflect.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

enum class Provenance { given, discrete, localization, colocalization };

std::string_view to_string(Provenance p);

/// Cofibrations, weak equivalences and fibrations on a FinCat. For
/// (co)localizations `subcategory` holds the (co)reflective members the
/// structure was built from.
struct ModelStructure {
  MorphismClass cof;
  MorphismClass we;
  MorphismClass fib;
  Provenance provenance = Provenance::given;
  std::optional<ObjectSet> subcategory;
};

/// Literal equality of the three classes.
bool same_classes(const ModelStructure& a, const ModelStructure& b);

/// cof = fib = all, we = isomorphisms. Throws HypothesisError when C is not
/// finitely bicomplete.
ModelStructure discrete_structure(const FinCat& c);

/// cof = all, we = inverted_class(r), fib = we↓. Checks that C is finitely
/// bicomplete and finitely well-complete and that r is a reflector; throws
/// HypothesisError naming the failed check otherwise.
ModelStructure localization_from_reflector(const FinCat& c, const Reflector& r);

/// fib = all, we = inverted_class(r), cof = we↑ for a coreflector r.
ModelStructure colocalization_from_coreflector(const FinCat& c, const Reflector& r);

/// Exhaustive closed-model axiom check, in this order: finite
/// bicompleteness, retract closure of cof / we / fib, two-out-of-three,
/// cof = (we ∩ fib)↑, cof ∩ we = fib↑, both factorizations. Reports the first
/// failing check with its least witness.
Verdict verify_model_axioms(const FinCat& c, const ModelStructure& m);

/// Objects X whose map to the terminal object is a fibration.
ObjectSet fibrant_objects(const FinCat& c, const ModelStructure& m);
/// Objects X whose map from the initial object is a cofibration.
ObjectSet cofibrant_objects(const FinCat& c, const ModelStructure& m);

struct Replacement {
  ObjId object = -1;
  MorId map = kNoMorphism;  // acyclic cofibration X → PX
};

/// Least acyclic cofibration from X into a fibrant object.
std::optional<Replacement> replace_object(const FinCat& c, const ModelStructure& m, ObjId x);

struct FibrantReplacement {
  Functor functor;               // P
  NaturalTransformation unit;    // i_X: X → PX
  /// Filler uniqueness in every replacement diagram, functoriality of P,
  /// and the hom-set bijection hom(PX, B) ≅ hom(X, B) for fibrant B.
  Verdict certificate;
  std::size_t diagrams_checked = 0;
  std::size_t adjunction_pairs_checked = 0;
};

FibrantReplacement fibrant_replacement(const FinCat& c, const ModelStructure& m);

struct HomotopyRelation {
  bool left = false;
  bool right = false;
};

/// Left homotopy by searching all cylinders A ⊔ A → Cyl → A (cofibration,
/// weak equivalence); right homotopy by all path objects B → Path → B × B
/// (weak equivalence, fibration). Throws HypothesisError when A ⊔ A or
/// B × B does not exist, InputError when f and g are not parallel.
HomotopyRelation homotopy_relations(const FinCat& c, const ModelStructure& m, MorId f, MorId g);

struct HomotopyCategoryView {
  ObjectSet fibrant;
  FinCat category;  // full subcategory on the fibrant objects
  Functor replacement;
  /// P inverts exactly the weak equivalences, P is fully faithful on
  /// fibrant objects, every object is weakly equivalent to a fibrant one,
  /// and distinct parallel maps between fibrant objects are not homotopic.
  Verdict certificate;
};

HomotopyCategoryView homotopy_category(const FinCat& c, const ModelStructure& m);

/// Parallel maps into a fibrant object are left-homotopic iff
/// right-homotopic iff equal.
Verdict homotopy_rigidity(const FinCat& c, const ModelStructure& m);

/// The reflective subcategory a localization determines: fibrant objects
/// with fibrant replacement as reflector.
Reflector reflector_of(const FinCat& c, const ModelStructure& m);

Verdict maps_between_fibrants_are_fibrations(const FinCat& c, const ModelStructure& m);

struct LocalizationPoset {
  std::vector<Reflector> subcategories;
  std::vector<ModelStructure> structures;
  /// leq[i][j]: structure i ≤ structure j, i.e. we_i ⊆ we_j.
  std::vector<std::vector<bool>> leq;
  /// Subcategory i ⊆ subcategory j exactly when structure j ≤ structure i.
  Verdict order_reversal;
  Verdict distinct;
};

/// One localization per replete reflective subcategory. Throws
/// HypothesisError when C is not finitely bicomplete or not finitely
/// well-complete.
LocalizationPoset enumerate_localizations(const FinCat& c);

/// Localizations of C^op transported back to C: cof and fib swap, weak
/// equivalences are kept. Orders use we-inclusion as for localizations.
LocalizationPoset colocalizations_via_op(const FinCat& c);

/// Colocalizations built directly from coreflective subcategories of C.
LocalizationPoset enumerate_colocalizations(const FinCat& c);

/// Same subcategories, classes and order, position by position.
Verdict same_poset(const FinCat& c, const LocalizationPoset& a, const LocalizationPoset& b);

}  // namespace discloc
