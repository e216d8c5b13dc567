#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discloc/index_set.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

/// Canonical position of an object in a FinCat (lexicographic order of ids).
using ObjId = int;
/// Canonical position of a morphism in a FinCat (lexicographic order of ids).
using MorId = int;

inline constexpr MorId kNoMorphism = -1;

struct Caps {
  std::size_t max_objects = 8;
  std::size_t max_morphisms = 64;
};

struct RawMorphism {
  std::string id;
  std::string src;
  std::string dst;
};

/// One entry of the composition table: gf = g ∘ f.
struct RawComposite {
  std::string g;
  std::string f;
  std::string gf;
};

/// A category as read from a file: identities are implied and must not be
/// listed as morphisms; composites involving identities may be omitted.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<RawComposite> compose;
};

/// Reserved id of the auto-generated identity on `object`.
std::string identity_name(std::string_view object);

struct ValidationReport {
  enum class Kind { ok, structural, law };

  Kind kind = Kind::ok;
  std::string law;  // "src/dst", "identity", "associativity" for Kind::law
  std::string message;
  std::vector<std::string> witness;
  std::vector<std::string> missing;  // composable pairs "g∘f" without an entry

  bool ok() const { return kind == Kind::ok; }
};

ValidationReport validate_category(const RawCategory& raw, const Caps& caps = {});

/// A finite category with a total composition table. Immutable once built.
class FinCat {
 public:
  /// Throws InputError carrying the validation message when `raw` is not a
  /// category.
  static FinCat build(const RawCategory& raw, const Caps& caps = {});

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return arrows_.size(); }

  const std::string& object_name(ObjId x) const { return objects_[idx(x)]; }
  const std::string& morphism_name(MorId f) const { return arrows_[idx(f)].name; }

  ObjId src(MorId f) const { return arrows_[idx(f)].src; }
  ObjId dst(MorId f) const { return arrows_[idx(f)].dst; }
  MorId identity(ObjId x) const { return identity_[idx(x)]; }
  bool is_identity(MorId f) const { return identity_[idx(src(f))] == f; }

  bool composable(MorId g, MorId f) const { return src(g) == dst(f); }
  /// g ∘ f; throws std::invalid_argument when src(g) != dst(f).
  MorId compose(MorId g, MorId f) const;

  /// Morphisms a → b in canonical order.
  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    return hom_[idx(a) * objects_.size() + idx(b)];
  }

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;
  /// Throws InputError for unknown ids.
  ObjId object(std::string_view name) const;
  MorId morphism(std::string_view name) const;

  /// Non-identity morphisms and the composites among them.
  RawCategory to_raw() const;

  std::vector<std::string> names(const MorphismClass& cls) const;
  std::vector<std::string> names(const ObjectSet& objs) const;

  MorphismClass all_morphisms() const { return MorphismClass(morphism_count(), true); }
  ObjectSet all_objects() const { return ObjectSet(object_count(), true); }

  friend bool operator==(const FinCat&, const FinCat&) = default;

 private:
  struct Arrow {
    std::string name;
    ObjId src;
    ObjId dst;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };

  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  friend struct CategoryAssembler;
  friend FinCat opposite(const FinCat& c);
  friend FinCat full_subcategory(const FinCat& c, const ObjectSet& members);

  void index_homs();

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<MorId> identity_;
  std::vector<MorId> table_;  // table_[g * |Mor| + f] = g ∘ f, or kNoMorphism
  std::vector<std::vector<MorId>> hom_;
};

/// Same ids with src/dst swapped and composition transposed.
FinCat opposite(const FinCat& c);

/// Full subcategory on `members`, keeping the parent's ids.
FinCat full_subcategory(const FinCat& c, const ObjectSet& members);

struct MorphismKind {
  bool iso = false;
  bool mono = false;
  bool epi = false;
};

/// Exhaustive iso / mono / epi classification of `f`.
MorphismKind morphism_predicates(const FinCat& c, MorId f);

std::optional<MorId> inverse(const FinCat& c, MorId f);
bool is_iso(const FinCat& c, MorId f);
bool is_mono(const FinCat& c, MorId f);
bool is_epi(const FinCat& c, MorId f);
bool are_isomorphic(const FinCat& c, ObjId a, ObjId b);

MorphismClass isomorphisms(const FinCat& c);
MorphismClass epimorphisms(const FinCat& c);

/// At most one morphism between any two objects.
bool is_thin(const FinCat& c);

/// Verdict-form checks of the category laws on an already built FinCat.
Verdict check_associativity(const FinCat& c);

}  // namespace discloc
